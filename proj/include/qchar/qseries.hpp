#pragma once

#include <map>
#include <optional>
#include <string>

#include "qchar/bigint.hpp"
#include "qchar/rational.hpp"

namespace qchar {

// Comparison order exceeded a series' truncation bound: "we do not know",
// which is different from "they differ".
struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompareResult {
    bool equal = true;
    Rational witness;  // smallest disagreeing exponent, valid when !equal
    BigInt lhs, rhs;   // the two coefficients there
};

// Truncated formal series in q with exact rational exponents and
// arbitrary-precision integer coefficients. terms holds only nonzero
// coefficients at exponents <= order; anything above order is unknown,
// and the arithmetic tracks how far results stay exact.
class QSeries {
public:
    explicit QSeries(Rational order) : order_(order) {}

    static QSeries zero(Rational order) { return QSeries(order); }
    static QSeries one(Rational order);
    static QSeries monomial(Rational exponent, BigInt coeff, Rational order);

    const Rational& order() const { return order_; }
    const std::map<Rational, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // smallest exponent that could carry a nonzero coefficient
    Rational min_exponent_bound() const {
        return terms_.empty() ? order_ : terms_.begin()->first;
    }

    BigInt coeff(const Rational& e) const;

    QSeries add(const QSeries& b) const;
    QSeries sub(const QSeries& b) const;
    QSeries mul(const QSeries& b) const;
    QSeries neg() const;
    QSeries scale(const BigInt& c) const;
    QSeries shift(const Rational& r) const;
    QSeries pow(int e) const;
    QSeries truncate(Rational new_order) const;

    void add_term(const Rational& e, const BigInt& c);  // drops exponents above order

    std::string to_text() const;  // one "<exp> <coeff>" line per term, ascending
    std::string to_json() const;
    static QSeries from_json(const std::string& json);

private:
    std::map<Rational, BigInt> terms_;
    Rational order_;
};

CompareResult equal_to_order(const QSeries& a, const QSeries& b, const Rational& order);

// (q)_p = (1-q)(1-q^2)...(1-q^p), truncated
QSeries euler_pochhammer(int p, Rational order);
// 1/(q)_p: generating function of partitions into parts <= p
QSeries euler_inv(int p, Rational order);
// (q)_inf and 1/(q)_inf, truncated; the Euler product runs over l >= 1
QSeries euler_inf(Rational order);
QSeries euler_inf_inv(Rational order);

}  // namespace qchar
