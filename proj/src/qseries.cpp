#include "qchar/qseries.hpp"

#include <algorithm>

#include <json.hpp>

namespace qchar {

QSeries QSeries::one(Rational order) {
    QSeries s(order);
    s.add_term(Rational(0), BigInt(1));
    return s;
}

QSeries QSeries::monomial(Rational exponent, BigInt coeff, Rational order) {
    QSeries s(order);
    s.add_term(exponent, coeff);
    return s;
}

BigInt QSeries::coeff(const Rational& e) const {
    if (e > order_)
        throw InsufficientPrecision("coefficient at exponent " + e.str() +
                                    " beyond truncation order " + order_.str());
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt() : it->second;
}

void QSeries::add_term(const Rational& e, const BigInt& c) {
    if (c.is_zero() || e > order_) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSeries QSeries::add(const QSeries& b) const {
    QSeries r(std::min(order_, b.order_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

QSeries QSeries::sub(const QSeries& b) const { return add(b.neg()); }

QSeries QSeries::neg() const {
    QSeries r(order_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QSeries QSeries::scale(const BigInt& c) const {
    QSeries r(order_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

QSeries QSeries::mul(const QSeries& b) const {
    // The unknown tail of one factor meets the other factor's smallest
    // exponent first, which is what limits how far the product stays exact.
    Rational r_order = std::min(order_ + b.min_exponent_bound(), b.order_ + min_exponent_bound());
    QSeries r(r_order);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Rational e = ea + eb;
            if (e > r_order) break;  // b.terms_ ascending
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

QSeries QSeries::shift(const Rational& s) const {
    QSeries r(order_ + s);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
    return r;
}

QSeries QSeries::pow(int e) const {
    if (e < 0) throw std::domain_error("QSeries::pow: negative exponent");
    QSeries r = QSeries::one(order_);
    for (int i = 0; i < e; ++i) r = r.mul(*this);
    return r;
}

QSeries QSeries::truncate(Rational new_order) const {
    QSeries r(std::min(order_, new_order));
    for (const auto& [e, c] : terms_) {
        if (e > r.order_) break;
        r.terms_.emplace(e, c);
    }
    return r;
}

std::string QSeries::to_text() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
        out += e.str();
        out += ' ';
        out += c.to_decimal();
        out += '\n';
    }
    return out;
}

std::string QSeries::to_json() const {
    nlohmann::ordered_json j;
    j["order"] = order_.str();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_)
        j["terms"].push_back({{"exp", e.str()}, {"coeff", c.to_decimal()}});
    return j.dump();
}

QSeries QSeries::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    QSeries s(Rational::parse(j.at("order").get<std::string>()));
    for (const auto& t : j.at("terms"))
        s.add_term(Rational::parse(t.at("exp").get<std::string>()),
                   BigInt::from_decimal(t.at("coeff").get<std::string>()));
    return s;
}

CompareResult equal_to_order(const QSeries& a, const QSeries& b, const Rational& order) {
    if (a.order() < order || b.order() < order)
        throw InsufficientPrecision("comparison to order " + order.str() +
                                    " but operands are exact only to " + a.order().str() +
                                    " and " + b.order().str());
    CompareResult res;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        Rational xa = ia != ea ? ia->first : order + Rational(1);
        Rational xb = ib != eb ? ib->first : order + Rational(1);
        Rational x = std::min(xa, xb);
        if (x > order) break;
        BigInt ca = xa == x ? (ia++)->second : BigInt();
        BigInt cb = xb == x ? (ib++)->second : BigInt();
        if (ca != cb) {
            res.equal = false;
            res.witness = x;
            res.lhs = ca;
            res.rhs = cb;
            return res;
        }
    }
    return res;
}

QSeries euler_pochhammer(int p, Rational order) {
    if (p < 0) throw std::domain_error("euler_pochhammer: p must be >= 0");
    QSeries r = QSeries::one(order);
    for (int l = 1; l <= p; ++l) {
        QSeries f = QSeries::one(order);
        f.add_term(Rational(l), BigInt(-1));
        r = r.mul(f);
    }
    return r;
}

namespace {

// partition counts by bounded-part DP; max_part = 0 means unbounded
QSeries partition_gf(Rational order, int max_part) {
    long long m = std::max<long long>(0, order.floor());
    std::vector<BigInt> cnt(static_cast<std::size_t>(m) + 1);
    cnt[0] = BigInt(1);
    int top = max_part == 0 ? static_cast<int>(m) : max_part;
    for (int part = 1; part <= top; ++part)
        for (long long s = part; s <= m; ++s)
            cnt[static_cast<std::size_t>(s)] += cnt[static_cast<std::size_t>(s - part)];
    QSeries r(order);
    for (long long s = 0; s <= m; ++s) r.add_term(Rational(s), cnt[static_cast<std::size_t>(s)]);
    return r;
}

}  // namespace

QSeries euler_inv(int p, Rational order) {
    if (p < 0) throw std::domain_error("euler_inv: p must be >= 0");
    if (p == 0) return QSeries::one(order);
    return partition_gf(order, p);
}

QSeries euler_inf(Rational order) {
    QSeries r = QSeries::one(order);
    for (long long l = 1; Rational(l) <= order; ++l) {
        QSeries f = QSeries::one(order);
        f.add_term(Rational(l), BigInt(-1));
        r = r.mul(f);
    }
    return r;
}

QSeries euler_inf_inv(Rational order) { return partition_gf(order, 0); }

}  // namespace qchar
