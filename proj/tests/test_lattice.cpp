#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qchar/lattice.hpp"

using namespace qchar;

TEST_CASE("cartan matrix shape") {
    LatticeContext ctx(4);
    for (int l = 1; l <= 4; ++l)
        for (int m = 1; m <= 4; ++m) {
            int expect = l == m ? 2 : (std::abs(l - m) == 1 ? -1 : 0);
            CHECK(ctx.cartan(l, m) == expect);
        }
    CHECK(ctx.dual_coxeter() == 5);
    CHECK(ctx.dim_g() == 24);
}

TEST_CASE("fundamental gram matrix is the exact inverse of the cartan matrix") {
    for (int n = 1; n <= 8; ++n) {
        LatticeContext ctx(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Rational sum;
                for (int l = 1; l <= n; ++l)
                    sum += Rational(ctx.cartan(i, l)) * ctx.fund_gram(l, j);
                CHECK(sum == Rational(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("inverse cartan of sl(k): A * Ainv = I for k = 2..16") {
    for (int k = 2; k <= 16; ++k)
        for (int s = 1; s <= k - 1; ++s)
            for (int t = 1; t <= k - 1; ++t) {
                Rational sum;
                for (int u = 1; u <= k - 1; ++u) {
                    long long a = u == s ? 2 : (std::abs(u - s) == 1 ? -1 : 0);
                    sum += Rational(a) * inv_cartan_slk_entry(u, t, k);
                }
                CHECK(sum == Rational(s == t ? 1 : 0));
            }
    CHECK(min_matrix_entry(1, 1, 2) == 1);
    CHECK(inv_cartan_slk_entry(1, 1, 2) == Rational(1, 2));
    CHECK(min_matrix_entry(2, 3, 4) == 2);
    CHECK(inv_cartan_slk_entry(2, 3, 4) == Rational(1, 2));
    CHECK(inv_cartan_slk_entry(3, 3, 4) == Rational(3, 4));
    CHECK_THROWS(min_matrix_entry(0, 1, 3));
    CHECK_THROWS(min_matrix_entry(3, 1, 3));
}

TEST_CASE("inner products on sl(3)") {
    LatticeContext ctx(2);
    CHECK(ctx.inner(ctx.simple_root(1), ctx.simple_root(1)) == Rational(2));
    CHECK(ctx.inner(ctx.simple_root(1), ctx.simple_root(2)) == Rational(-1));
    CHECK(ctx.inner(ctx.fundamental(1), ctx.fundamental(1)) == Rational(2, 3));
    CHECK(ctx.inner(ctx.fundamental(1), ctx.fundamental(2)) == Rational(1, 3));
    CHECK(ctx.inner(ctx.fundamental(1), ctx.simple_root(2)) == Rational(0));
    CHECK(ctx.inner(ctx.fundamental(1), ctx.simple_root(1)) == Rational(1));
    CHECK(ctx.normsq(ctx.rho()) == Rational(2));
    CHECK(ctx.rho_normsq() == Rational(2));
    LatticeContext other(3);
    CHECK_THROWS(ctx.inner(ctx.rho(), other.rho()));
}

TEST_CASE("inner product is symmetric and bilinear on random vectors") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> coord(-4, 4);
    for (int n = 1; n <= 4; ++n) {
        LatticeContext ctx(n);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rational> a(n), b(n), c(n);
            for (int i = 0; i < n; ++i) {
                a[i] = Rational(coord(rng), 1 + (i % 2));
                b[i] = Rational(coord(rng));
                c[i] = Rational(coord(rng), 3);
            }
            WeightVec u = ctx.from_fund(a), v = ctx.from_fund(b), w = ctx.from_fund(c);
            CHECK(ctx.inner(u, v) == ctx.inner(v, u));
            Rational s(coord(rng), 2);
            CHECK(ctx.inner(ctx.add(u, ctx.scale(s, v)), w) ==
                  ctx.inner(u, w) + s * ctx.inner(v, w));
        }
    }
}

TEST_CASE("basis conversions round trip exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> coord(-5, 5);
    for (int n = 1; n <= 5; ++n) {
        LatticeContext ctx(n);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<long long> c(n);
            for (auto& v : c) v = coord(rng);
            WeightVec w = ctx.from_alpha_int(c);
            CHECK(ctx.in_root_lattice(w));
            auto back = ctx.alpha_coords(w);
            for (int i = 0; i < n; ++i) CHECK(back[i] == Rational(c[i]));
        }
        // fundamental weights are not in Q unless coordinates conspire
        CHECK(ctx.in_root_lattice(ctx.simple_root(1)));
        if (n >= 2) CHECK_FALSE(ctx.in_root_lattice(ctx.fundamental(1)));
    }
}

TEST_CASE("lattice enumeration finds exactly the roots at bound 2") {
    for (int n = 1; n <= 4; ++n) {
        LatticeContext ctx(n);
        // (2/2)<a,a> <= 2 picks up 0 and all n(n+1) roots of A_n
        auto pts = lattice_vectors_by_norm(ctx, Rational(2), ctx.zero(), Rational(2));
        CHECK(static_cast<int>(pts.size()) == n * (n + 1) + 1);
        int roots = 0;
        for (const auto& c : pts)
            if (ctx.normsq(ctx.from_alpha_int(c)) == Rational(2)) ++roots;
        CHECK(roots == n * (n + 1));
    }
}

TEST_CASE("lattice enumeration examples") {
    {
        LatticeContext ctx(1);
        // m^2 <= 4 in alpha-coordinates
        auto pts = lattice_vectors_by_norm(ctx, Rational(1), ctx.zero(), Rational(4));
        CHECK(pts.size() == 5);
    }
    {
        LatticeContext ctx(2);
        auto pts = lattice_vectors_by_norm(ctx, Rational(2), ctx.zero(), Rational(2));
        CHECK(pts.size() == 7);
        auto none = lattice_vectors_by_norm(ctx, Rational(2), ctx.zero(), Rational(-1));
        CHECK(none.empty());
        auto zero_only = lattice_vectors_by_norm(ctx, Rational(2), ctx.zero(), Rational(0));
        CHECK(zero_only.size() == 1);
    }
}

TEST_CASE("lattice enumeration with linear term matches a brute-force box scan") {
    LatticeContext ctx(2);
    WeightVec mu = ctx.add(ctx.fundamental(1), ctx.scale(Rational(2), ctx.fundamental(2)));
    Rational bound(6);
    auto pts = lattice_vectors_by_norm(ctx, Rational(3), mu, bound);
    long long count = 0;
    for (long long a = -12; a <= 12; ++a)
        for (long long b = -12; b <= 12; ++b) {
            WeightVec v = ctx.from_alpha_int({a, b});
            if (Rational(3, 2) * ctx.normsq(v) + ctx.inner(v, mu) <= bound) ++count;
        }
    CHECK(static_cast<long long>(pts.size()) == count);
    // doubling the scan radius changes nothing
    auto pts2 = lattice_vectors_by_norm(ctx, Rational(3), mu, bound, 2);
    CHECK(pts == pts2);
}
