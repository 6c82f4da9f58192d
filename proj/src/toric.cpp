#include "wahl/toric.hpp"

#include <algorithm>

namespace wahl::toric {

ResolutionData resolution_data(const CyclicQuotient& cq) {
    ChainWeights b = hj::hj_expand(cq.n, cq.q);
    const std::size_t l = b.size();

    // p runs forward from (p_0, p_1) = (0, 1), q backward from
    // (q_{l+1}, q_l) = (0, 1), both by x_{i-1} + x_{i+1} = b_i x_i.
    std::vector<Int> p(l + 2), q(l + 2);
    p[0] = 0;
    p[1] = 1;
    for (std::size_t i = 1; i <= l; ++i) p[i + 1] = b[i - 1] * p[i] - p[i - 1];
    q[l + 1] = 0;
    q[l] = 1;
    for (std::size_t i = l; i >= 1; --i) q[i - 1] = b[i - 1] * q[i] - q[i + 1];

    ResolutionData rd{cq, std::move(b), std::move(p), std::move(q)};

    if (rd.p[l + 1] != cq.n || rd.qq[0] != cq.n || rd.qq[1] != cq.q)
        throw std::logic_error("resolution_data: recursion endpoints wrong");
    for (std::size_t i = 0; i <= l; ++i) {
        if (rd.p[i] >= rd.p[i + 1] || rd.qq[i] <= rd.qq[i + 1])
            throw std::logic_error("resolution_data: monotonicity violated");
        if (rd.p[i + 1] * rd.qq[i] - rd.p[i] * rd.qq[i + 1] != cq.n)
            throw std::logic_error("resolution_data: unimodularity violated");
    }
    return rd;
}

std::vector<Int> pullback_divisor(const CyclicQuotient& cq, const Int& a1, const Int& a2) {
    Int cong = (a1 + cq.q * a2) % cq.n;
    if (cong < 0) cong += cq.n;
    require(cong == 0, "pullback_divisor: a1 + q*a2 must vanish mod n");

    ResolutionData rd = resolution_data(cq);
    std::vector<Int> m(rd.p.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int t = rd.p[i] * a1 + rd.qq[i] * a2;
        if (t % cq.n != 0)
            throw std::logic_error("pullback_divisor: non-integral coefficient");
        m[i] = t / cq.n;
    }
    return m;
}

std::vector<std::pair<Int, Int>> semigroup_generators(const CyclicQuotient& cq) {
    const Int& n = cq.n;
    const Int& q = cq.q;
    auto member = [&](const Int& m1, const Int& m2) {
        if (m1 < 0 || m2 < 0) return false;
        Int r = (m1 + q * m2) % n;
        return r == 0;
    };

    // Any generator has both coordinates <= n: if m1 > n, subtracting the
    // monoid element (n,0) gives a nontrivial decomposition, and likewise
    // for m2 with (0,n).
    std::vector<std::pair<Int, Int>> elems;
    for (Int m1 = 0; m1 <= n; ++m1)
        for (Int m2 = 0; m2 <= n; ++m2)
            if (!(m1 == 0 && m2 == 0) && member(m1, m2))
                elems.emplace_back(m1, m2);

    std::vector<std::pair<Int, Int>> gens;
    for (const auto& [m1, m2] : elems) {
        bool decomposable = false;
        for (const auto& [y1, y2] : elems) {
            if (y1 > m1 || y2 > m2) continue;
            if (y1 == m1 && y2 == m2) continue;
            if (member(m1 - y1, m2 - y2)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) gens.emplace_back(m1, m2);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

bool residue_surjective(const Int& n, const Int& p) {
    require(n >= 1, "residue_surjective: n must be positive");
    check_characteristic(p);
    return !divides(p, n);
}

bool equivariant_resolution_exists(const CyclicQuotient& cq, const Int& p) {
    check_characteristic(p);
    return !(divides(p, cq.n) && cq.q == cq.n - 1);
}

Int gorenstein_index(const CyclicQuotient& cq) {
    return cq.n / gcd(cq.n, cq.q + 1);
}

} // namespace wahl::toric
