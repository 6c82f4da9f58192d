#pragma once

#include "wahl/toric.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wahl::classt {

using hj::ChainWeights;

/// Index triple of the class-T singularity T(d,n,a), the cyclic quotient
/// of type (d n^2, d n a - 1).  Requires n > a >= 1 and gcd(n,a) = 1.
struct ClassTTriple {
    Int d;
    Int n;
    Int a;

    ClassTTriple(Int d_, Int n_, Int a_);

    std::pair<Int, Int> quotient_type() const;  // (d n^2, d n a - 1)

    friend bool operator==(const ClassTTriple&, const ClassTTriple&) = default;
};

std::string to_string(const ClassTTriple& t);  // "T(d,n,a)"

enum class ChainKind { ClassT, AllTwosChain, Other };

struct Classification {
    ChainKind kind;
    std::optional<ClassTTriple> triple;  // present iff kind == ClassT
};

/// Recognizes (N, Q) as class T via the gcd decomposition: with
/// g = gcd(N, Q+1), the candidate is d = g^2/N, n = N/g, a = (Q+1)/g,
/// class T iff d is integral and n > a (coprimality of n, a is then
/// automatic).  (N, N-1) is the all-twos chain, anything else Other.
Classification classify(const Int& N, const Int& Q);

/// Full invariant record of T(d,n,a):
///   B = weights of d n^2/(d n a - 1); P, Q the interior lattice data
///   p_1..p_l, q_1..q_l; r_i = (p_i + q_i)/(d n); c_i = 1 - r_i/n;
///   delta = sum(b_i) - (2l+1) = l - d + 1.
struct ClassTInvariants {
    ClassTTriple triple;
    ChainWeights B;
    std::vector<Int> P;
    std::vector<Int> Q;
    std::vector<Int> R;
    std::vector<Rat> C;
    Int delta;
    std::size_t l;
};

ClassTInvariants invariants(const ClassTTriple& t);

/// Self-intersection of the discrepancy divisor, computed as
/// sum c_i (2 - b_i); always equals -delta(d,n,a).
Rat delta_squared(const ClassTTriple& t);

ClassTTriple involution(const ClassTTriple& t);  // (d, n, n-a)
ClassTTriple t_left(const ClassTTriple& t);      // (d, 2n-a, n)
ClassTTriple t_right(const ClassTTriple& t);     // (d, n+a, a)

/// The unique word over {L, R} of length l - d whose letters, applied
/// left-to-right to (d,2,1) via t_left/t_right, produce t.  Inverse steps:
/// b_l = 2 peels an R to (d, n-a, a); b_1 = 2 peels an L to (d, a, 2a-n).
std::string ancestry(const ClassTTriple& t);

/// All triples with the given d and l <= max_l, by breadth-first
/// application of {t_left, t_right} from (d,2,1), L before R.
std::vector<ClassTTriple> enumerate_triples(const Int& d, const Int& max_l);

/// One-parameter Q-Gorenstein smoothing data of T(d,n,a) over a base of
/// characteristic p: the hypersurface z^{dn} - u1 u2 - s(z^n + 1) = 0
/// modulo the order-n cyclic action with weights (1, -1, a) on (u1, u2, z).
/// The base parameter s must avoid d^d/(d-1)^{d-1} unless p | d or
/// p | d-1 (d = 1 counts: p always divides 0).  The total space stays
/// Q-Gorenstein of index n, and fibers are smooth away from s = 0.
struct SmoothingFamily {
    ClassTTriple triple;
    Int characteristic;
    Int relation_degree;           // dn, the z-degree of the defining relation
    Int perturbation_degree;       // n, the z-degree of the s-term
    Int group_order;               // n
    std::array<Int, 3> weights;    // (1, n-1, a mod n) acting on (u1, u2, z)
    std::optional<Rat> excluded_parameter;
    Int gorenstein_index;          // n, constant across the family
};

SmoothingFamily smoothing_family(const ClassTTriple& t, const Int& p);

} // namespace wahl::classt
