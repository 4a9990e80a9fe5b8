#include "qchar/fermionic.hpp"

#include <map>
#include <stdexcept>

namespace qchar {

void HighestWeight::validate() const {
    if (n < 1) throw std::domain_error("HighestWeight: rank must be positive");
    if (k < 1) throw std::domain_error("HighestWeight: level must be positive");
    if (k0 < 0 || kj < 0 || k0 + kj != k)
        throw std::domain_error("HighestWeight: need k0 + kj = k with k0, kj >= 0");
    if ((kj == 0) != (j == 0))
        throw std::domain_error("HighestWeight: j present iff kj > 0");
    if (kj > 0 && (j < 1 || j > n))
        throw std::domain_error("HighestWeight: j out of range");
}

WeightVec HighestWeight::finite_part(const LatticeContext& ctx) const {
    WeightVec w = ctx.zero();
    if (kj > 0) w.fund[j - 1] = kj;
    return w;
}

HighestWeight HighestWeight::dotted() const {
    if (k < 2) throw std::domain_error("HighestWeight::dotted: needs level >= 2");
    HighestWeight d;
    d.n = n;
    d.k = k - 1;
    d.k0 = std::min(k0, k - 1);
    d.kj = d.k - d.k0;
    d.j = d.kj > 0 ? j : 0;
    return d;
}

namespace {

// <sum c_i alpha_i, sum c_i alpha_i> for integer coords; always even
long long alpha_normsq(const std::vector<long long>& c) {
    long long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += 2 * c[i] * c[i];
        if (i + 1 < c.size()) s -= 2 * c[i] * c[i + 1];
    }
    return s;
}

struct DualWalker {
    const LatticeContext& ctx;
    int K;
    const HighestWeight* hw;
    Rational radius;
    const std::function<void(const OccupationTuple&, long long, long long)>& visit;

    OccupationTuple tuple;
    std::vector<long long> caps;  // per-coordinate global cap from the radius

    void run() {
        tuple.n = ctx.rank;
        tuple.K = K;
        tuple.dual.assign(K, std::vector<long long>(ctx.rank, 0));
        caps.resize(ctx.rank);
        Rational r = radius < Rational(0) ? Rational(0) : radius;
        for (int i = 1; i <= ctx.rank; ++i)
            caps[i - 1] = floor_sqrt(Rational(2) * r * ctx.fund_gram(i, i));
        level(1, 0, 0);
    }

    void level(int u, long long quad_acc, long long lin_acc) {
        if (u > K) {
            visit(tuple, quad_acc, lin_acc);
            return;
        }
        std::vector<long long> c(ctx.rank, 0);
        coord(u, 0, c, quad_acc, lin_acc);
    }

    void coord(int u, int i, std::vector<long long>& c, long long quad_acc, long long lin_acc) {
        if (i == ctx.rank) {
            long long quad = alpha_normsq(c) / 2;
            long long lin = 0;
            if (hw && hw->kj > 0 && u > hw->k0) lin = c[hw->j - 1];
            if (Rational(quad_acc + lin_acc + quad + lin) > radius) return;
            tuple.dual[u - 1] = c;
            bool zero = true;
            for (long long v : c)
                if (v) zero = false;
            if (zero) {
                // deeper levels are forced to zero by monotonicity
                for (int v = u; v <= K; ++v) tuple.dual[v - 1].assign(ctx.rank, 0);
                visit(tuple, quad_acc + quad, lin_acc + lin);
            } else {
                level(u + 1, quad_acc + quad, lin_acc + lin);
            }
            return;
        }
        long long hi = u == 1 ? caps[i] : tuple.dual[u - 2][i];
        for (long long v = 0; v <= hi; ++v) {
            c[i] = v;
            coord(u, i + 1, c, quad_acc, lin_acc);
        }
    }
};

}  // namespace

QSeries tuple_factor_series(const OccupationTuple& t, const Rational& order) {
    QSeries prod = QSeries::one(order);
    for (int i = 1; i <= t.n; ++i)
        for (int s = 1; s <= t.K; ++s) {
            long long p = t.p(i, s);
            if (p > 0) prod = prod.mul(euler_inv(static_cast<int>(p), order));
        }
    return prod;
}

long long tuple_linear_term(const OccupationTuple& t, const HighestWeight& hw) {
    if (hw.kj == 0) return 0;
    long long lin = 0;
    for (int u = hw.k0 + 1; u <= t.K; ++u) lin += t.dual[u - 1][hw.j - 1];
    return lin;
}

void enumerate_dual_systems(const LatticeContext& ctx, int K, const HighestWeight* linear_hw,
                            const Rational& radius,
                            const std::function<void(const OccupationTuple&, long long,
                                                     long long)>& visit) {
    if (K < 0) throw std::domain_error("enumerate_dual_systems: negative level count");
    if (K == 0) {
        OccupationTuple t;
        t.n = ctx.rank;
        t.K = 0;
        visit(t, 0, 0);
        return;
    }
    DualWalker w{ctx, K, linear_hw, radius, visit, {}, {}};
    w.run();
}

QSeries principal_sum(const LatticeContext& ctx, const HighestWeight& hw, int K,
                      const Rational& order, int radius_scale) {
    hw.validate();
    if (ctx.rank != hw.n) throw std::domain_error("principal_sum: rank mismatch");
    if (K != hw.k && K != hw.k - 1)
        throw std::domain_error("principal_sum: K must be k or k-1");
    QSeries sum(order);
    Rational radius = order * Rational(radius_scale);
    enumerate_dual_systems(ctx, K, &hw, radius,
                           [&](const OccupationTuple& t, long long quad, long long lin) {
                               long long e = quad + lin;
                               if (Rational(e) > order) return;
                               QSeries f = tuple_factor_series(t, order - Rational(e));
                               sum = sum.add(f.shift(Rational(e)));
                           });
    return sum;
}

namespace {

// largest x >= 0 with x^2/(2 k^2 w_j) - (kj/k) x <= order; 0 when kj == 0
long long linear_slack_rjmax(const LatticeContext& ctx, const HighestWeight& hw,
                             const Rational& order) {
    if (hw.kj == 0) return 0;
    Rational wj = ctx.fund_gram(hw.j, hw.j);
    Rational k(hw.k);
    auto ok = [&](long long x) {
        Rational xr(x);
        return xr * xr / (Rational(2) * k * k * wj) - Rational(hw.kj) / k * xr <= order;
    };
    long long x = 0;
    while (ok(x + 1)) ++x;
    return x;
}

}  // namespace

QSeries parafermionic_sum(const LatticeContext& ctx, const HighestWeight& hw,
                          const Rational& order,
                          const std::optional<std::vector<long long>>& class_coords,
                          int radius_scale) {
    hw.validate();
    if (ctx.rank != hw.n) throw std::domain_error("parafermionic_sum: rank mismatch");
    if (hw.k < 2) throw std::domain_error("parafermionic_sum: requires level k >= 2");
    std::vector<long long> want;
    if (class_coords) {
        if (static_cast<int>(class_coords->size()) != hw.n)
            throw std::domain_error("parafermionic_sum: restriction class has wrong rank");
        for (long long c : *class_coords) want.push_back(((c % hw.k) + hw.k) % hw.k);
    }

    // E <= order forces QB <= k*order + kj*r_j (Cauchy-Schwarz across the k-1
    // levels), and the positive-definite bound QA >= r_j^2 / (2k^2 w_j) caps r_j.
    Rational radius = order < Rational(0) ? Rational(0)
                                          : Rational(hw.k) * order +
                                                Rational(hw.kj) * Rational(linear_slack_rjmax(ctx, hw, order));
    radius = radius * Rational(radius_scale);

    const int K = hw.k - 1;
    QSeries sum(order);
    enumerate_dual_systems(
        ctx, K, nullptr, radius, [&](const OccupationTuple& t, long long quad, long long) {
            std::vector<long long> r(t.n);
            for (int i = 1; i <= t.n; ++i) r[i - 1] = t.charge_sum(i);
            if (!want.empty())
                for (int i = 0; i < t.n; ++i)
                    if (((r[i] % hw.k) + hw.k) % hw.k != want[i]) return;
            long long lin = tuple_linear_term(t, hw);
            long long beta_normsq = alpha_normsq(r);
            Rational e = Rational(quad + lin) - Rational(beta_normsq, 2LL * hw.k);
            if (hw.kj > 0) e -= Rational(hw.kj * r[hw.j - 1], hw.k);
            if (e > order) return;
            QSeries f = tuple_factor_series(t, order - e);
            sum = sum.add(f.shift(e));
        });
    return sum;
}

QSeries parafermionic_sum_at(const LatticeContext& ctx, const HighestWeight& hw,
                             const Rational& order, const WeightVec& mu, int radius_scale) {
    WeightVec diff = ctx.sub(mu, hw.finite_part(ctx));
    if (!ctx.in_root_lattice(diff))
        throw std::domain_error("parafermionic_sum: mu is not in Lambda + Q");
    std::vector<long long> coords;
    for (const auto& c : ctx.alpha_coords(diff)) coords.push_back(c.num());
    return parafermionic_sum(ctx, hw, order, coords, radius_scale);
}

QSeries prop01_sum(int n, int k, const Rational& order, int radius_scale) {
    if (n < 1 || k < 1) throw std::domain_error("prop01_sum: need n, k >= 1");
    LatticeContext ctx(n);
    QSeries sum(order);
    Rational budget = std::max(order, Rational(0)) * Rational(radius_scale);

    // antiparticle counts b_i: either r_i^(k) >= 1 caps b_i at order via the
    // cross term, or r_i^(k) = 0 and the level-k quadratic term caps it
    std::vector<long long> bmax(n);
    for (int i = 1; i <= n; ++i)
        bmax[i - 1] = std::max<long long>(budget.floor(),
                                          floor_sqrt(Rational(2) * budget * ctx.fund_gram(i, i)));

    std::vector<long long> b(n, 0);
    std::vector<std::vector<long long>> levels(k, std::vector<long long>(n, 0));

    std::function<void(int, long long)> walk_levels;
    std::function<void(int, int, std::vector<long long>&, long long)> walk_coords;

    auto emit = [&](long long cost_acc) {
        long long cross = 0;
        for (int i = 0; i < n; ++i) cross += levels[k - 1][i] * b[i];
        Rational e(cost_acc + cross);
        if (e > order) return;
        QSeries f = QSeries::one(order - e);
        for (int i = 1; i <= n; ++i) {
            for (int s = 1; s <= k; ++s) {
                long long hi = levels[s - 1][i - 1];
                long long lo = s < k ? levels[s][i - 1] : 0;
                if (hi - lo > 0) f = f.mul(euler_inv(static_cast<int>(hi - lo), order - e));
            }
            if (b[i - 1] > 0) f = f.mul(euler_inv(static_cast<int>(b[i - 1]), order - e));
        }
        sum = sum.add(f.shift(e));
    };

    walk_levels = [&](int u, long long cost_acc) {
        if (u > k) {
            emit(cost_acc);
            return;
        }
        std::vector<long long> c(n, 0);
        walk_coords(u, 0, c, cost_acc);
    };
    walk_coords = [&](int u, int i, std::vector<long long>& c, long long cost_acc) {
        if (i == n) {
            std::vector<long long> diff(n);
            for (int t = 0; t < n; ++t) diff[t] = c[t] - b[t];
            long long quad = alpha_normsq(diff) / 2;
            if (Rational(cost_acc + quad) > budget) return;
            levels[u - 1] = c;
            walk_levels(u + 1, cost_acc + quad);
            return;
        }
        long long slack = floor_sqrt(Rational(2) * budget * ctx.fund_gram(i + 1, i + 1));
        long long hi = std::min(u == 1 ? b[i] + slack : levels[u - 2][i], b[i] + slack);
        for (long long v = 0; v <= hi; ++v) {
            c[i] = v;
            walk_coords(u, i + 1, c, cost_acc);
        }
    };

    std::function<void(int)> walk_b = [&](int i) {
        if (i == n) {
            walk_levels(1, 0);
            return;
        }
        for (long long v = 0; v <= bmax[i]; ++v) {
            b[i] = v;
            walk_b(i + 1);
        }
    };
    walk_b(0);
    return sum;
}

QSeries string_function_fermionic(const LatticeContext& ctx, const HighestWeight& hw,
                                  const std::vector<long long>& class_coords,
                                  const Rational& order, Rational* prefactor_out) {
    WeightVec lambda = hw.finite_part(ctx);
    WeightVec lam_rho = ctx.add(lambda, ctx.rho());
    Rational S = ctx.normsq(lam_rho) / Rational(2 * (hw.k + ctx.dual_coxeter())) -
                 ctx.rho_normsq() / Rational(2 * ctx.dual_coxeter()) -
                 ctx.normsq(lambda) / Rational(2 * hw.k);
    if (prefactor_out) *prefactor_out = S;
    Rational base_order = order - S;
    QSeries ps = parafermionic_sum(ctx, hw, base_order, class_coords);
    return euler_inf_inv(base_order).pow(hw.n).mul(ps).shift(S);
}

QSeries durfee_rhs(long long c, const Rational& order, int radius_scale) {
    QSeries sum(order);
    Rational budget = std::max(order, Rational(0)) * Rational(radius_scale);
    const long long b0 = std::max(0LL, -c);
    // ab is nondecreasing in b on b >= b0, so the first overshoot ends the scan
    for (long long b = b0;; ++b) {
        long long a = b + c;
        Rational e(a * b);
        if (b > b0 && e > budget) break;
        if (e <= order) {
            QSeries f = euler_inv(static_cast<int>(a), order - e)
                            .mul(euler_inv(static_cast<int>(b), order - e));
            sum = sum.add(f.shift(e));
        }
    }
    return sum;
}

}  // namespace qchar
