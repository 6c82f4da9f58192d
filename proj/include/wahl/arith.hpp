#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wahl {

// All arithmetic in this library is exact.  Integers are arbitrary
// precision and fractional quantities are reduced rationals with a
// positive denominator (sign lives on the numerator).  No floating
// point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Violated precondition or malformed input.  The CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Divisibility in a fixed characteristic: p = 0 divides only 0.
inline bool divides(const Int& p, const Int& m) {
    if (p == 0) return m == 0;
    return m % p == 0;
}

/// Trial division; inputs here are characteristics, never large.
bool is_prime(const Int& p);

/// Checks that p is a valid characteristic (0 or prime).
void check_characteristic(const Int& p);

/// Parses a decimal integer of arbitrary size; rejects junk.
Int parse_int(std::string_view text);

/// x^e for e >= 0.
Int pow_int(const Int& x, const Int& e);

std::string to_string(const Int& v);
/// "a/b", or just "a" when b = 1.
std::string to_string(const Rat& v);

} // namespace wahl
