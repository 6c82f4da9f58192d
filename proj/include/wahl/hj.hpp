#pragma once

#include "wahl/arith.hpp"

#include <utility>
#include <vector>

namespace wahl::hj {

/// Weights b_1,...,b_l of a Hirzebruch-Jung continued fraction
///   n/q = b_1 - 1/(b_2 - 1/(... - 1/b_l)),   all b_i >= 2.
using ChainWeights = std::vector<Int>;

/// Expands n/q into its unique HJ continued fraction with all b_i >= 2.
/// Requires n > q >= 1 and gcd(n,q) = 1.
ChainWeights hj_expand(const Int& n, const Int& q);

/// Evaluates a weight chain back to the coprime pair (n, q), n > q >= 1.
/// Right-to-left fold over exact rationals; any weight < 2 is rejected.
std::pair<Int, Int> hj_eval(const ChainWeights& w);

/// The unique q' with 0 < q' < n and q*q' = 1 (mod n).  Requires n >= 2
/// and gcd(q, n) = 1.
Int modular_inverse(const Int& q, const Int& n);

} // namespace wahl::hj
