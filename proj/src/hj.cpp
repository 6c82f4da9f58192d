#include "wahl/hj.hpp"

namespace wahl::hj {

namespace {

Int ceil_div(const Int& a, const Int& b) {
    // a, b > 0
    return (a + b - 1) / b;
}

} // namespace

ChainWeights hj_expand(const Int& n, const Int& q) {
    require(q >= 1, "hj_expand: q must be positive");
    require(n > q, "hj_expand: n must exceed q");
    require(gcd(n, q) == 1, "hj_expand: n and q must be coprime");

    ChainWeights b;
    Int x = n, y = q;
    while (y > 0) {
        Int bi = ceil_div(x, y);
        b.push_back(bi);
        Int next = bi * y - x;
        x = y;
        y = next;
    }
    return b;
}

std::pair<Int, Int> hj_eval(const ChainWeights& w) {
    require(!w.empty(), "hj_eval: empty chain");
    for (const Int& b : w)
        require(b >= 2, "hj_eval: weight " + to_string(b) + " < 2 (expansion not reduced)");

    Rat value = w.back();
    for (auto it = w.rbegin() + 1; it != w.rend(); ++it)
        value = Rat(*it) - 1 / value;

    // Each partial value exceeds 1, so the fold never divides by zero and
    // the final numerator strictly exceeds the denominator.
    Int n = num(value), q = den(value);
    if (n <= q || gcd(n, q) != 1)
        throw std::logic_error("hj_eval: fold produced a non-reduced value");
    return {n, q};
}

Int modular_inverse(const Int& q, const Int& n) {
    require(n >= 2, "modular_inverse: modulus must be >= 2");
    require(gcd(q, n) == 1, "modular_inverse: arguments must be coprime");

    // Extended Euclid on (q mod n, n).
    Int a = q % n;
    if (a < 0) a += n;
    Int r0 = n, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int k = r0 / r1;
        Int r2 = r0 - k * r1;
        Int s2 = s0 - k * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    Int inv = s0 % n;
    if (inv < 0) inv += n;
    return inv;
}

} // namespace wahl::hj
