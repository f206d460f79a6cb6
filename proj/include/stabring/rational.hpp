#ifndef STABRING_RATIONAL_HPP
#define STABRING_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stabring {

// Exact rational number on 64-bit numerator/denominator with 128-bit
// intermediates. Denominator is always positive and gcd(|num|, den) == 1.
// Coefficients in this project stay tiny (0/1 constraint matrices, cycle
// bounds), so int64 after reduction is plenty; we still check every
// narrowing and throw instead of wrapping.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) { *this = make(n, d); }

    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return make((__int128)x.num * y.den + (__int128)y.num * x.den,
                    (__int128)x.den * y.den);
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        return make((__int128)x.num * y.den - (__int128)y.num * x.den,
                    (__int128)x.den * y.den);
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return make((__int128)x.num * y.num, (__int128)x.den * y.den);
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num == 0) throw std::domain_error("Rat: division by zero");
        return make((__int128)x.num * y.den, (__int128)x.den * y.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    Rat& operator+=(const Rat& y) { return *this = *this + y; }
    Rat& operator-=(const Rat& y) { return *this = *this - y; }
    Rat& operator*=(const Rat& y) { return *this = *this * y; }
    Rat& operator/=(const Rat& y) { return *this = *this / y; }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
    static long long narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rat: value exceeds 64-bit range");
        return (long long)v;
    }
};

}  // namespace stabring

#endif
