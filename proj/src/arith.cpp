#include "wahl/arith.hpp"

namespace wahl {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

void check_characteristic(const Int& p) {
    require(p == 0 || is_prime(p),
            "characteristic must be 0 or a prime, got " + to_string(p));
}

Int parse_int(std::string_view text) {
    require(!text.empty(), "empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    require(start < text.size(), "bare sign is not an integer");
    for (std::size_t i = start; i < text.size(); ++i)
        require(text[i] >= '0' && text[i] <= '9',
                "not an integer: '" + std::string(text) + "'");
    return Int(std::string(text));
}

Int pow_int(const Int& x, const Int& e) {
    require(e >= 0, "negative exponent");
    Int result = 1, base = x, k = e;
    while (k > 0) {
        if (k % 2 == 1) result *= base;
        base *= base;
        k /= 2;
    }
    return result;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    if (den(v) == 1) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

} // namespace wahl
