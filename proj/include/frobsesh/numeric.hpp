#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "frobsesh/errors.hpp"

namespace frobsesh {

/// Arbitrary-precision integer. All lattice data uses this type; nothing in
/// the library ever touches floating point.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// base^e for small nonnegative exponents.
inline Int pow_int(const Int& base, unsigned e) {
    Int result = 1;
    for (unsigned i = 0; i < e; ++i) result *= base;
    return result;
}

/// floor(a/b) for exact integers, b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// ceil(a/b) for exact integers, b > 0.
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_rat(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }
inline Int ceil_rat(const Rat& r) { return ceil_div(rat_num(r), rat_den(r)); }

/// Trial-division primality test; primes in this library are small (quotient
/// dimensions grow like p^{en}, so nobody passes a large p).
inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidPrime("p must be prime, got " + std::to_string(p));
}

/// "num/den", or just "num" when the value is an integer.
inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (!is_integer(r)) os << "/" << rat_den(r);
    return os.str();
}

inline std::string int_str(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace frobsesh
