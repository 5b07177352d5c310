#ifndef SIGMA_NUMBERS_HPP
#define SIGMA_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sigma {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& i) { return i.convert_to<double>(); }

// p-adic valuation of a nonzero integer.
inline long padic_val(Int a, const Int& p) {
    if (a == 0) throw std::invalid_argument("padic_val: zero argument");
    if (a < 0) a = -a;
    long v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

// p-adic valuation of a nonzero rational.
inline long padic_val(const Rat& a, const Int& p) {
    if (a == 0) throw std::invalid_argument("padic_val: zero argument");
    return padic_val(rat_num(a), p) - padic_val(rat_den(a), p);
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace sigma

#endif
