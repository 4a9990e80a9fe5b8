#pragma once

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qchar {

// Exact rational over 64-bit components, always in lowest terms with a
// positive denominator. Every arithmetic step runs through 128-bit
// intermediates and throws std::overflow_error rather than wrap; exponents
// and lattice norms in this project stay tiny, so the guard is a tripwire,
// not a cost.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) {
            nn = -nn;
            dd = -dd;
        }
        reduce_assign(nn, dd);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
        }
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator-(const Rational& a) { return make(-static_cast<__int128>(a.num_), a.den_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_,
                    static_cast<__int128>(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    long long num_ = 0;
    long long den_ = 1;

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    void reduce_assign(__int128 n, __int128 d) {
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        __int128 g = gcd128(n, d);
        n /= g;
        d /= g;
        constexpr __int128 lim = 0x7fffffffffffffffLL;
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational: overflow");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        r.reduce_assign(n, d);
        return r;
    }
};

// floor(sqrt(n)) for n >= 0
inline long long isqrt_ll(long long n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// largest integer t >= 0 with t^2 <= r; r must be >= 0
inline long long floor_sqrt(const Rational& r) {
    if (r.sign() < 0) throw std::domain_error("floor_sqrt of negative rational");
    long long t = isqrt_ll(r.floor());
    while (Rational(t + 1) * Rational(t + 1) <= r) ++t;
    return t;
}

}  // namespace qchar
