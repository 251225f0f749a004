#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lensfib/error.hpp"

namespace lensfib {

// Exact fraction in lowest terms with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;

    Rational(long long n, long long d) {
        if (d == 0)
            fail("DivisionByZeroInTail", "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    static Rational integer(long long n) { return Rational(n, 1); }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    Rational negated() const { return Rational(-num, den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// a - 1/x, the continued-fraction step. Throws if x is zero.
inline Rational cf_step(long long a, const Rational& x) {
    if (x.is_zero())
        fail("DivisionByZeroInTail", "continued-fraction tail evaluates to zero");
    // a - den/num = (a*num - den)/num
    return Rational(a * x.num - x.den, x.num);
}

} // namespace lensfib
