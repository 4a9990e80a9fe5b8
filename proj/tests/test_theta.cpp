#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchar/theta.hpp"

using namespace qchar;

TEST_CASE("theta for sl2 at k=1, mu=0 is the classical sum of q^{m^2}") {
    LatticeContext ctx(1);
    QSeries t = theta_series(ctx, ctx.zero(), 1, Rational(9), false).collapse();
    for (int e = 0; e <= 9; ++e) {
        long long expect = e == 0 ? 1 : 0;
        if (e == 1 || e == 4 || e == 9) expect = 2;
        CHECK(t.coeff(Rational(e)) == BigInt(expect));
    }
}

TEST_CASE("theta at order 0 with a null weight is 1") {
    LatticeContext ctx(2);
    QSeries t = theta_series(ctx, ctx.zero(), 2, Rational(0), false).collapse();
    CHECK(t.coeff(Rational(0)) == BigInt(1));
    CHECK(t.terms().size() == 1);
}

TEST_CASE("theta rejects weights outside P") {
    LatticeContext ctx(2);
    WeightVec half = ctx.scale(Rational(1, 2), ctx.fundamental(1));
    CHECK_THROWS(theta_series(ctx, half, 2, Rational(4), false));
}

TEST_CASE("theta 0.7 rewrite and weight-resolved collapse") {
    LatticeContext ctx(2);
    WeightVec mu = ctx.simple_root(1);
    Rational order(10);
    Rational head = ctx.normsq(mu) / Rational(4);
    QSeries plain = theta_series(ctx, mu, 2, order, false).collapse();
    QSeries resolved = theta_series(ctx, mu, 2, order, true).collapse();
    CHECK(equal_to_order(plain, resolved, order).equal);
    // bare lattice sum route
    QSeries bare(order - head);
    for (const auto& coords : lattice_vectors_by_norm(ctx, Rational(2), mu, order - head)) {
        WeightVec a = ctx.from_alpha_int(coords);
        bare.add_term(Rational(1) * ctx.normsq(a) + ctx.inner(a, mu), BigInt(1));
    }
    CHECK(equal_to_order(plain.shift(-head), bare, order - head).equal);
}

TEST_CASE("theta weight keys are k*alpha + mu") {
    LatticeContext ctx(1);
    WeightVec mu = ctx.fundamental(1);
    GradedCharacter gc = theta_series(ctx, mu, 2, Rational(6), true);
    // alpha = 0 key is mu itself, with series q^{<mu,mu>/2k}
    auto it = gc.components.find(mu);
    REQUIRE(it != gc.components.end());
    CHECK(it->second.coeff(Rational(1, 8)) == BigInt(1));
    // alpha = -alpha_1 gives key mu - 2 alpha_1
    WeightVec key = ctx.sub(mu, ctx.scale(Rational(2), ctx.simple_root(1)));
    CHECK(gc.components.count(key) == 1);
}

TEST_CASE("assemble_character at order 0 keeps only the depth-0 layer") {
    LatticeContext ctx(2);
    // vacuum: the single class Lambda with coefficient 1
    HighestWeight vac{2, 2, 2, 0, 0};
    GradedCharacter gv = assemble_character(ctx, vac, Rational(0), true);
    REQUIRE(gv.components.size() == 1);
    CHECK(gv.components.begin()->first == vac.finite_part(ctx));
    CHECK(gv.components.begin()->second.coeff(Rational(0)) == BigInt(1));
    // L0+L1: depth 0 carries the three weights of the fundamental triplet
    HighestWeight hw{2, 2, 1, 1, 1};
    GradedCharacter gc = assemble_character(ctx, hw, Rational(0), true);
    REQUIRE(gc.components.size() == 3);
    WeightVec lam = hw.finite_part(ctx);
    WeightVec w2 = ctx.sub(lam, ctx.simple_root(1));
    WeightVec w3 = ctx.sub(w2, ctx.simple_root(2));
    for (const auto& w : {lam, w2, w3}) {
        auto it = gc.components.find(w);
        REQUIRE(it != gc.components.end());
        CHECK(it->second.coeff(Rational(0)) == BigInt(1));
    }
}

TEST_CASE("assemble_character at level 1 is the free-boson character") {
    LatticeContext ctx(1);
    HighestWeight hw{1, 1, 1, 0, 0};
    Rational order(8);
    QSeries ch = assemble_character(ctx, hw, order, false).collapse();
    // (1/(q)_inf) sum_m q^{m^2}
    QSeries theta(order);
    for (long long m = -3; m <= 3; ++m)
        if (m * m <= 8) theta.add_term(Rational(m * m), BigInt(1));
    QSeries expect = euler_inf_inv(order).mul(theta);
    CHECK(equal_to_order(ch, expect, order).equal);
}

TEST_CASE("assemble_character vacuum k=2 equals prop01 at small order") {
    LatticeContext ctx(1);
    HighestWeight hw{1, 2, 2, 0, 0};
    Rational order(8);
    QSeries a = assemble_character(ctx, hw, order, false).collapse();
    QSeries b = prop01_sum(1, 2, order);
    CHECK(equal_to_order(a, b, order).equal);
}

TEST_CASE("weight-resolved assembly collapses to the q-only run") {
    LatticeContext ctx(2);
    HighestWeight hw{2, 2, 2, 0, 0};
    Rational order(6);
    QSeries a = assemble_character(ctx, hw, order, true).collapse();
    QSeries b = assemble_character(ctx, hw, order, false).collapse();
    CHECK(equal_to_order(a, b, order).equal);
}

TEST_CASE("special character leading terms") {
    QSeries s = special_character_L1L2(Rational(4));
    CHECK(s.coeff(Rational(0)) == BigInt(3));
    CHECK(s.coeff(Rational(1, 2)) == BigInt(2));
    QSeries d = special_character_L1L2(Rational(4), 2);
    CHECK(equal_to_order(s, d, Rational(4)).equal);
}

TEST_CASE("character json lists weights with their series") {
    LatticeContext ctx(1);
    HighestWeight hw{1, 1, 1, 0, 0};
    GradedCharacter gc = assemble_character(ctx, hw, Rational(2), true);
    std::string json = gc.to_json(ctx);
    CHECK(json.find("\"weight\"") != std::string::npos);
    CHECK(json.find("\"series\"") != std::string::npos);
    CHECK(json.find("\"order\"") != std::string::npos);
}
