#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchar {

// Signed arbitrary-precision integer, sign + little-endian 32-bit limbs.
// Supports exactly what exact q-series and Freudenthal tables need:
// add/sub/mul, comparisons, exact division by a machine-word divisor,
// and decimal I/O.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) { *this = from_ll(v); }

    static BigInt from_ll(long long v) {
        BigInt r;
        if (v == 0) return r;
        r.sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m) {
            r.mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
        return r;
    }

    static BigInt from_decimal(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty decimal string");
        std::size_t i = 0;
        int sign = 1;
        if (s[0] == '+' || s[0] == '-') {
            sign = s[0] == '-' ? -1 : 1;
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: bare sign");
        BigInt r;
        for (; i < s.size();) {
            // consume up to 9 digits at a time
            std::uint32_t chunk = 0, scale = 1;
            std::size_t j = i;
            for (; j < s.size() && j < i + 9; ++j) {
                if (s[j] < '0' || s[j] > '9')
                    throw std::invalid_argument("BigInt: bad digit in \"" + s + "\"");
                chunk = chunk * 10 + static_cast<std::uint32_t>(s[j] - '0');
                scale *= 10;
            }
            r.mul_small_inplace(scale);
            r.add_small_inplace(chunk);
            i = j;
        }
        if (sign < 0) r.sign_ = -r.sign_;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_ll() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = magnitude_ull();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }
    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long m = magnitude_ull();
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    std::string to_decimal() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            std::string chunk = std::to_string(rem);
            if (!tmp.empty())
                chunk.insert(chunk.begin(), 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t j = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[j] + carry;
                r.mag_[j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++j;
            }
        }
        while (!r.mag_.empty() && r.mag_.back() == 0) r.mag_.pop_back();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Exact quotient by a nonzero machine integer; throws if it does not divide.
    BigInt div_exact(long long d) const {
        if (d == 0) throw std::domain_error("BigInt: division by zero");
        long long rem = 0;
        BigInt q = divmod_small(d, rem);
        if (rem != 0) throw std::domain_error("BigInt: inexact division");
        return q;
    }

    BigInt divmod_small(long long d, long long& rem_out) const {
        if (d == 0) throw std::domain_error("BigInt: division by zero");
        unsigned long long ad = d < 0 ? 0ULL - static_cast<unsigned long long>(d)
                                      : static_cast<unsigned long long>(d);
        BigInt q;
        q.mag_.assign(mag_.size(), 0);
        unsigned __int128 rem = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 32) | mag_[i];
            q.mag_[i] = static_cast<std::uint32_t>(cur / ad);
            rem = cur % ad;
        }
        while (!q.mag_.empty() && q.mag_.back() == 0) q.mag_.pop_back();
        q.sign_ = q.mag_.empty() ? 0 : sign_ * (d < 0 ? -1 : 1);
        long long r = static_cast<long long>(static_cast<unsigned long long>(rem));
        rem_out = sign_ < 0 ? -r : r;
        return q;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    unsigned long long magnitude_ull() const {
        unsigned long long m = 0;
        if (mag_.size() > 0) m = mag_[0];
        if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return m;
    }

    void mul_small_inplace(std::uint32_t f) {
        if (sign_ == 0) return;
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        if (f == 0) {
            mag_.clear();
            sign_ = 0;
        }
    }
    void add_small_inplace(std::uint32_t v) {
        if (v == 0) return;
        if (sign_ == 0) {
            sign_ = 1;
            mag_.push_back(v);
            return;
        }
        // only used while building nonnegative values from decimal digits
        std::uint64_t carry = v;
        for (std::size_t i = 0; i < mag_.size() && carry; ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r = hi;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= lo.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += 1LL << 32;
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace qchar
