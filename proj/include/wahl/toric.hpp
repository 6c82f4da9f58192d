#pragma once

#include "wahl/hj.hpp"

#include <utility>
#include <vector>

namespace wahl::toric {

using hj::ChainWeights;

/// The cyclic quotient singularity of type (n, q): the affine toric surface
/// for the lattice Z^2 + Z*(1/n)(e1 + q*e2) and the first-quadrant cone.
struct CyclicQuotient {
    Int n;
    Int q;

    CyclicQuotient(Int n_, Int q_) : n(std::move(n_)), q(std::move(q_)) {
        require(q >= 1 && n > q, "cyclic quotient needs n > q >= 1");
        require(gcd(n, q) == 1, "cyclic quotient needs gcd(n,q) = 1");
    }
};

/// Lattice data of the minimal resolution.  Index 0 of the exceptional
/// chain is the proper transform of D2 and index l+1 that of D1; the
/// interior curves G_1..G_l have self-intersection -b_i.
///
/// The vectors v_i = (1/n)(p_i e1 + q_i e2) satisfy
///   p_0 = 0 < p_1 = 1 < ... < p_{l+1} = n,
///   q_0 = n > q_1 = q > ... > q_l = 1 > q_{l+1} = 0,
///   v_{i-1} + v_{i+1} = b_i v_i,  and  p_i q_{i-1} - p_{i-1} q_i = n.
struct ResolutionData {
    CyclicQuotient base;
    ChainWeights weights;  // b_1..b_l
    std::vector<Int> p;    // p_0..p_{l+1}
    std::vector<Int> qq;   // q_0..q_{l+1}

    std::size_t length() const { return weights.size(); }
};

ResolutionData resolution_data(const CyclicQuotient& cq);

/// Coefficients m_i of the pullback of a1*D1 + a2*D2 to the resolution:
/// m_i = (p_i a1 + q_i a2)/n for i = 0..l+1.  Requires a1 + q*a2 = 0 (mod n),
/// which makes every m_i integral.
std::vector<Int> pullback_divisor(const CyclicQuotient& cq, const Int& a1, const Int& a2);

/// Minimal generating set (Hilbert basis) of the monoid
///   { (m1, m2) in Z^2_{>=0} : m1 + q*m2 = 0 (mod n) },
/// sorted lexicographically.  Computed by bounded enumeration: every
/// generator has both coordinates <= n since (n,0) and (0,n) lie in the
/// monoid; minimality by the pairwise-difference membership test.
std::vector<std::pair<Int, Int>> semigroup_generators(const CyclicQuotient& cq);

/// Whether the residue map of the log one-forms along D1 + D2 is
/// surjective in characteristic p: true iff p does not divide n.
bool residue_surjective(const Int& n, const Int& p);

/// Whether the minimal resolution is equivariant at the tangent-sheaf
/// level in characteristic p: false exactly when p | n and q = n - 1.
bool equivariant_resolution_exists(const CyclicQuotient& cq, const Int& p);

/// Smallest j >= 1 with j*(q+1) = 0 (mod n), i.e. n / gcd(n, q+1).
/// For (n,q) = (d m^2, d m a - 1) this equals m, the stated Gorenstein
/// index of the class-T singularity; the general-(n,q) formula is our
/// extrapolation of the same principal-divisor test.
Int gorenstein_index(const CyclicQuotient& cq);

} // namespace wahl::toric
