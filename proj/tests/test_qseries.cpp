#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qchar/qseries.hpp"

using namespace qchar;

namespace {

// independent partition counter: enumerate partitions recursively
long long count_partitions(long long m, long long max_part) {
    if (m == 0) return 1;
    if (max_part == 0) return 0;
    long long total = 0;
    for (long long first = std::min(m, max_part); first >= 1; --first)
        total += count_partitions(m - first, first);
    return total;
}

QSeries random_series(std::mt19937_64& rng, Rational order) {
    std::uniform_int_distribution<long long> coeff(-6, 6);
    std::uniform_int_distribution<long long> num(0, 2 * order.floor());
    QSeries s(order);
    for (int t = 0; t < 8; ++t) s.add_term(Rational(num(rng), 2), BigInt(coeff(rng)));
    return s;
}

}  // namespace

TEST_CASE("euler pochhammer small cases") {
    CHECK(euler_pochhammer(0, Rational(5)).to_text() == "0 1\n");
    QSeries p2 = euler_pochhammer(2, Rational(5));
    CHECK(p2.coeff(Rational(0)) == BigInt(1));
    CHECK(p2.coeff(Rational(1)) == BigInt(-1));
    CHECK(p2.coeff(Rational(2)) == BigInt(-1));
    CHECK(p2.coeff(Rational(3)) == BigInt(1));
    CHECK(p2.coeff(Rational(4)) == BigInt(0));
    QSeries p3 = euler_pochhammer(3, Rational(6));
    // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
    CHECK(p3.coeff(Rational(3)) == BigInt(0));
    CHECK(p3.coeff(Rational(4)) == BigInt(1));
    CHECK(p3.coeff(Rational(5)) == BigInt(1));
    CHECK(p3.coeff(Rational(6)) == BigInt(-1));
}

TEST_CASE("euler_inv counts partitions into bounded parts") {
    QSeries g1 = euler_inv(1, Rational(3));
    for (int m = 0; m <= 3; ++m) CHECK(g1.coeff(Rational(m)) == BigInt(1));
    for (int p = 1; p <= 5; ++p) {
        QSeries g = euler_inv(p, Rational(12));
        for (long long m = 0; m <= 12; ++m)
            CHECK(g.coeff(Rational(m)) == BigInt(count_partitions(m, p)));
    }
}

TEST_CASE("euler_inf_inv coefficients are partition numbers up to 30") {
    QSeries g = euler_inf_inv(Rational(30));
    long long expect_first[] = {1, 1, 2, 3, 5, 7};
    for (int m = 0; m <= 5; ++m) CHECK(g.coeff(Rational(m)) == BigInt(expect_first[m]));
    for (long long m = 0; m <= 30; ++m)
        CHECK(g.coeff(Rational(m)) == BigInt(count_partitions(m, m == 0 ? 1 : m)));
}

TEST_CASE("pochhammer times its inverse is 1") {
    for (int p = 0; p <= 6; ++p) {
        QSeries prod = euler_pochhammer(p, Rational(15)).mul(euler_inv(p, Rational(15)));
        CHECK(equal_to_order(prod, QSeries::one(Rational(15)), Rational(15)).equal);
    }
    QSeries prod = euler_inf(Rational(20)).mul(euler_inf_inv(Rational(20)));
    CHECK(equal_to_order(prod, QSeries::one(Rational(20)), Rational(20)).equal);
}

TEST_CASE("shift and simple products") {
    QSeries one = QSeries::one(Rational(4));
    QSeries sh = one.shift(Rational(3, 2));
    CHECK(sh.coeff(Rational(3, 2)) == BigInt(1));
    CHECK(sh.order() == Rational(4) + Rational(3, 2));
    QSeries a = QSeries::one(Rational(5));
    a.add_term(Rational(1), BigInt(1));  // 1 + q
    QSeries b = QSeries::one(Rational(5));
    b.add_term(Rational(1), BigInt(-1));  // 1 - q
    QSeries ab = a.mul(b);
    CHECK(ab.coeff(Rational(0)) == BigInt(1));
    CHECK(ab.coeff(Rational(1)) == BigInt(0));
    CHECK(ab.coeff(Rational(2)) == BigInt(-1));
}

TEST_CASE("multiplication agrees with naive full convolution then truncation") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        QSeries a = random_series(rng, Rational(5));
        QSeries b = random_series(rng, Rational(5));
        QSeries prod = a.mul(b);
        // naive convolution over all stored term pairs
        std::map<Rational, BigInt> conv;
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) {
                auto& slot = conv[ea + eb];
                slot += ca * cb;
            }
        for (const auto& [e, coeff] : conv) {
            if (e > prod.order()) continue;
            CHECK(prod.coeff(e) == coeff);
        }
    }
}

TEST_CASE("ring laws hold on randomized truncated instances") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        QSeries a = random_series(rng, Rational(6));
        QSeries b = random_series(rng, Rational(6));
        QSeries c = random_series(rng, Rational(6));
        Rational cmp(3);  // safely inside every derived order
        CHECK(equal_to_order(a.add(b), b.add(a), Rational(6)).equal);
        CHECK(equal_to_order(a.add(b).add(c), a.add(b.add(c)), Rational(6)).equal);
        CHECK(equal_to_order(a.mul(b), b.mul(a), cmp).equal);
        CHECK(equal_to_order(a.mul(b).mul(c), a.mul(b.mul(c)), Rational(0)).equal);
        CHECK(equal_to_order(a.mul(b.add(c)), a.mul(b).add(a.mul(c)), cmp).equal);
        CHECK(equal_to_order(a.sub(a), QSeries::zero(Rational(6)), Rational(6)).equal);
    }
}

TEST_CASE("equal_to_order semantics") {
    QSeries a = QSeries::one(Rational(20));
    QSeries b = QSeries::one(Rational(20));
    b.add_term(Rational(10), BigInt(1));  // 1 + q^10
    CHECK(equal_to_order(a, b, Rational(5)).equal);
    CompareResult cr = equal_to_order(a, b, Rational(10));
    CHECK_FALSE(cr.equal);
    CHECK(cr.witness == Rational(10));
    CHECK(cr.lhs == BigInt(0));
    CHECK(cr.rhs == BigInt(1));
    CHECK(equal_to_order(a, a, Rational(20)).equal);
    CHECK_THROWS_AS((void)equal_to_order(a, b, Rational(21)), InsufficientPrecision);
    CHECK_THROWS_AS((void)a.coeff(Rational(25)), InsufficientPrecision);
}

TEST_CASE("durfee identity shape: 1/(q)_inf vs truncation-aware arithmetic") {
    // multiplication respects the min-exponent order rule
    QSeries tail = QSeries::monomial(Rational(3), BigInt(1), Rational(10));  // q^3, exact to 10
    QSeries inv = euler_inf_inv(Rational(7));
    QSeries prod = inv.mul(tail);
    CHECK(prod.order() == Rational(10));  // min(7 + 3, 10 + 0)
    CHECK(prod.coeff(Rational(10)) == BigInt(15));  // p(7) = 15
}

TEST_CASE("json rendering round-trips") {
    QSeries s(Rational(9, 2));
    s.add_term(Rational(-1, 3), BigInt::from_decimal("123456789012345678901234567890"));
    s.add_term(Rational(2), BigInt(-7));
    QSeries back = QSeries::from_json(s.to_json());
    CHECK(back.order() == s.order());
    CHECK(back.terms() == s.terms());
    CHECK(s.to_json() == back.to_json());
    // text rendering: ascending exponents, "exp coeff" lines
    CHECK(s.to_text() == "-1/3 123456789012345678901234567890\n2 -7\n");
}
