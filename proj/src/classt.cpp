#include "wahl/classt.hpp"

#include <algorithm>
#include <deque>

namespace wahl::classt {

ClassTTriple::ClassTTriple(Int d_, Int n_, Int a_)
    : d(std::move(d_)), n(std::move(n_)), a(std::move(a_)) {
    require(d >= 1, "class T triple needs d >= 1");
    require(a >= 1 && n > a, "class T triple needs n > a >= 1");
    require(gcd(n, a) == 1, "class T triple needs gcd(n,a) = 1");
}

std::pair<Int, Int> ClassTTriple::quotient_type() const {
    return {d * n * n, d * n * a - 1};
}

std::string to_string(const ClassTTriple& t) {
    return "T(" + t.d.str() + "," + t.n.str() + "," + t.a.str() + ")";
}

Classification classify(const Int& N, const Int& Q) {
    require(Q >= 1 && N > Q, "classify: need N > Q >= 1");
    require(gcd(N, Q) == 1, "classify: need gcd(N,Q) = 1");

    if (Q == N - 1) return {ChainKind::AllTwosChain, std::nullopt};

    Int g = gcd(N, Q + 1);
    if ((g * g) % N == 0) {
        Int d = (g * g) / N;
        Int n = N / g;
        Int a = (Q + 1) / g;
        if (n > a && a >= 1) {
            // gcd(n, a) = 1 holds by construction of g.
            ClassTTriple t(std::move(d), std::move(n), std::move(a));
            if (t.quotient_type() != std::pair<Int, Int>(N, Q))
                throw std::logic_error("classify: decomposition mismatch");
            return {ChainKind::ClassT, std::move(t)};
        }
    }
    return {ChainKind::Other, std::nullopt};
}

ClassTInvariants invariants(const ClassTTriple& t) {
    auto [N, Q] = t.quotient_type();
    toric::ResolutionData rd = toric::resolution_data(toric::CyclicQuotient(N, Q));
    const std::size_t l = rd.length();
    const Int dn = t.d * t.n;

    ClassTInvariants inv{t, rd.weights, {}, {}, {}, {}, 0, l};
    inv.P.assign(rd.p.begin() + 1, rd.p.end() - 1);
    inv.Q.assign(rd.qq.begin() + 1, rd.qq.end() - 1);

    inv.R.resize(l);
    inv.C.resize(l);
    for (std::size_t i = 0; i < l; ++i) {
        Int s = inv.P[i] + inv.Q[i];
        if (s % dn != 0)
            throw std::logic_error("invariants: (p_i + q_i) not divisible by dn");
        inv.R[i] = s / dn;
        if (inv.R[i] < 1 || inv.R[i] >= t.n)
            throw std::logic_error("invariants: r_i out of range");
        // r_i = a p_i = -a q_i (mod n)
        if ((inv.R[i] - t.a * inv.P[i]) % t.n != 0 || (inv.R[i] + t.a * inv.Q[i]) % t.n != 0)
            throw std::logic_error("invariants: r_i congruences violated");
        inv.C[i] = Rat(t.n - inv.R[i], t.n);
    }
    if (inv.R.front() != t.a || inv.R.back() != t.n - t.a)
        throw std::logic_error("invariants: r_1 = a or r_l = n - a violated");
    // convexity with r_0 = r_{l+1} = n
    for (std::size_t i = 0; i < l; ++i) {
        Int left = (i == 0) ? t.n : inv.R[i - 1];
        Int right = (i + 1 == l) ? t.n : inv.R[i + 1];
        if (left + right != inv.B[i] * inv.R[i])
            throw std::logic_error("invariants: r convexity violated");
    }

    Int sum_b = 0;
    for (const Int& b : inv.B) sum_b += b;
    inv.delta = sum_b - (2 * Int(l) + 1);
    if (inv.delta != Int(l) - t.d + 1 || sum_b != 3 * Int(l) + 2 - t.d)
        throw std::logic_error("invariants: delta bookkeeping violated");
    return inv;
}

Rat delta_squared(const ClassTTriple& t) {
    ClassTInvariants inv = invariants(t);
    Rat total = 0;
    for (std::size_t i = 0; i < inv.l; ++i)
        total += inv.C[i] * Rat(2 - inv.B[i]);
    if (total != Rat(-inv.delta))
        throw std::logic_error("delta_squared: sum disagrees with -delta");
    return total;
}

ClassTTriple involution(const ClassTTriple& t) { return {t.d, t.n, t.n - t.a}; }
ClassTTriple t_left(const ClassTTriple& t) { return {t.d, 2 * t.n - t.a, t.n}; }
ClassTTriple t_right(const ClassTTriple& t) { return {t.d, t.n + t.a, t.a}; }

std::string ancestry(const ClassTTriple& t) {
    std::string reversed;
    ClassTTriple cur = t;
    while (!(cur.n == 2 && cur.a == 1)) {
        auto [N, Q] = cur.quotient_type();
        ChainWeights b = hj::hj_expand(N, Q);
        bool first_two = b.front() == 2;
        bool last_two = b.back() == 2;
        if (first_two == last_two)
            throw std::logic_error("ancestry: expected exactly one end weight 2");
        if (last_two) {
            reversed.push_back('R');
            cur = ClassTTriple(cur.d, cur.n - cur.a, cur.a);
        } else {
            reversed.push_back('L');
            cur = ClassTTriple(cur.d, cur.a, 2 * cur.a - cur.n);
        }
    }
    return {reversed.rbegin(), reversed.rend()};
}

std::vector<ClassTTriple> enumerate_triples(const Int& d, const Int& max_l) {
    require(d >= 1, "enumerate_triples: d must be positive");
    require(max_l >= d, "enumerate_triples: max_l must be at least d (the base length)");

    std::vector<ClassTTriple> out;
    std::deque<std::pair<ClassTTriple, Int>> queue;  // (triple, its l)
    queue.emplace_back(ClassTTriple(d, 2, 1), d);
    while (!queue.empty()) {
        auto [t, l] = queue.front();
        queue.pop_front();
        out.push_back(t);
        if (l < max_l) {
            queue.emplace_back(t_left(t), l + 1);
            queue.emplace_back(t_right(t), l + 1);
        }
    }
    return out;
}

SmoothingFamily smoothing_family(const ClassTTriple& t, const Int& p) {
    check_characteristic(p);

    SmoothingFamily fam{t, p, t.d * t.n, t.n, t.n,
                        {Int(1), t.n - 1, t.a % t.n}, std::nullopt, t.n};
    if (!divides(p, t.d) && !divides(p, t.d - 1))
        fam.excluded_parameter = Rat(pow_int(t.d, t.d), pow_int(t.d - 1, t.d - 1));

    auto [N, Q] = t.quotient_type();
    if (toric::gorenstein_index(toric::CyclicQuotient(N, Q)) != t.n)
        throw std::logic_error("smoothing_family: index of the closed fiber is not n");
    return fam;
}

} // namespace wahl::classt
