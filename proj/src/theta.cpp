#include "qchar/theta.hpp"

#include <algorithm>

#include <json.hpp>

namespace qchar {

QSeries GradedCharacter::collapse() const {
    QSeries s(order);
    for (const auto& [w, comp] : components) s = s.add(comp);
    return s;
}

std::string GradedCharacter::to_json(const LatticeContext& ctx) const {
    std::vector<std::pair<std::vector<Rational>, const QSeries*>> rows;
    for (const auto& [w, comp] : components) rows.emplace_back(ctx.alpha_coords(w), &comp);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [coords, comp] : rows) {
        nlohmann::ordered_json entry;
        auto cj = nlohmann::ordered_json::array();
        for (const auto& c : coords) cj.push_back(c.str());
        entry["weight"] = cj;
        entry["series"] = nlohmann::ordered_json::parse(comp->to_json());
        arr.push_back(entry);
    }
    return arr.dump();
}

GradedCharacter theta_series(const LatticeContext& ctx, const WeightVec& mu, int k,
                             const Rational& order, bool weight_resolved, int radius_scale) {
    if (!ctx.in_weight_lattice(mu)) throw std::domain_error("theta_series: mu must lie in P");
    if (k < 1) throw std::domain_error("theta_series: k must be positive");
    GradedCharacter gc;
    gc.weight_resolved = weight_resolved;
    gc.order = order;

    // Theta_mu = q^{<mu,mu>/2k} * (lattice sum); run the lattice sum complete
    // through order - <mu,mu>/2k so the shifted series is exact through order.
    Rational head = ctx.normsq(mu) / Rational(2 * k);
    Rational bound = order - head;
    auto points = lattice_vectors_by_norm(ctx, Rational(k), mu, bound, radius_scale);
    for (const auto& coords : points) {
        WeightVec alpha = ctx.from_alpha_int(coords);
        Rational e = Rational(k) / Rational(2) * ctx.normsq(alpha) + ctx.inner(alpha, mu) + head;
        if (e > order) continue;
        WeightVec key = weight_resolved ? ctx.add(ctx.scale(Rational(k), alpha), mu) : ctx.zero();
        auto it = gc.components.find(key);
        if (it == gc.components.end())
            it = gc.components.emplace(key, QSeries::zero(order)).first;
        it->second.add_term(e, BigInt(1));
    }
    return gc;
}

GradedCharacter assemble_character(const LatticeContext& ctx, const HighestWeight& hw,
                                   const Rational& order, bool weight_resolved,
                                   int radius_scale) {
    hw.validate();
    if (ctx.rank != hw.n) throw std::domain_error("assemble_character: rank mismatch");
    GradedCharacter gc;
    gc.weight_resolved = weight_resolved;
    gc.order = order;

    const int K = hw.k - 1;
    WeightVec Lambda = hw.finite_part(ctx);
    Rational lambda_normsq = ctx.normsq(Lambda);

    // A tuple can contribute at or below `order` only if the parafermionic
    // exponent is <= order + <Lambda,Lambda>/2k (the theta factor's minimum is
    // -<nu,nu>/2k at nu = Lambda + sum r_i alpha_i), so the shifted-kernel
    // radius machinery applies with that widened budget.
    Rational eff = order + lambda_normsq / Rational(2 * hw.k);
    Rational radius(0);
    if (eff >= Rational(0)) {
        long long rjmax = 0;
        if (hw.kj > 0) {
            Rational wj = ctx.fund_gram(hw.j, hw.j);
            auto ok = [&](long long x) {
                Rational xr(x);
                return xr * xr / (Rational(2) * Rational(hw.k) * Rational(hw.k) * wj) -
                           Rational(hw.kj, hw.k) * xr <=
                       eff;
            };
            while (ok(rjmax + 1)) ++rjmax;
        }
        radius = Rational(hw.k) * eff + Rational(hw.kj) * Rational(rjmax);
    }
    radius = radius * Rational(radius_scale);

    enumerate_dual_systems(ctx, K, nullptr, radius, [&](const OccupationTuple& t, long long quad,
                                                        long long) {
        long long lin = tuple_linear_term(t, hw);
        long long e_tuple = quad + lin;
        std::vector<long long> r(t.n);
        for (int i = 1; i <= t.n; ++i) r[i - 1] = t.charge_sum(i);
        WeightVec nu = Lambda;
        for (int i = 1; i <= t.n; ++i)
            nu = ctx.add(nu, ctx.scale(Rational(r[i - 1]), ctx.simple_root(i)));

        Rational theta_bound = order - Rational(e_tuple);
        auto points = lattice_vectors_by_norm(ctx, Rational(hw.k), nu, theta_bound, radius_scale);
        if (points.empty()) return;

        std::vector<Rational> thetas;
        Rational min_theta(0);
        for (const auto& coords : points) {
            WeightVec alpha = ctx.from_alpha_int(coords);
            thetas.push_back(Rational(hw.k) / Rational(2) * ctx.normsq(alpha) +
                             ctx.inner(alpha, nu));
            min_theta = std::min(min_theta, thetas.back());
        }
        // the base series must stay exact through order - e for the most
        // negative theta exponent, which can dip below -e_tuple
        Rational base_order = order - Rational(e_tuple) - std::min(min_theta, Rational(0));
        QSeries base =
            tuple_factor_series(t, base_order).mul(euler_inf_inv(base_order).pow(hw.n));

        for (std::size_t pt = 0; pt < points.size(); ++pt) {
            Rational e = Rational(e_tuple) + thetas[pt];
            if (e > order) continue;
            WeightVec key = weight_resolved
                                ? ctx.add(ctx.scale(Rational(hw.k), ctx.from_alpha_int(points[pt])),
                                          nu)
                                : ctx.zero();
            auto it = gc.components.find(key);
            if (it == gc.components.end())
                it = gc.components.emplace(key, QSeries::zero(order)).first;
            it->second = it->second.add(base.truncate(order - e).shift(e));
        }
    });
    return gc;
}

QSeries special_character_L1L2(const Rational& order, int radius_scale) {
    QSeries sum(order);
    // Term one has exponent (p1^2+p2^2-p1p2)/2 + (p1-p2)/2, term two
    // the same with p1 -> p1+1 and the linear part (p2-p1-1)/2. Both dominate
    // (p1^2+p2^2)/4 - (p1+p2)/2 - 1, which caps the scan box exactly.
    Rational budget = std::max(order, Rational(0)) * Rational(radius_scale);
    long long cap = 0;
    while (Rational(cap + 1) * Rational(cap + 1, 4) - Rational(cap + 1) - Rational(1) <= budget)
        ++cap;
    for (long long p1 = 0; p1 <= cap; ++p1)
        for (long long p2 = 0; p2 <= cap; ++p2) {
            Rational e1 = Rational(p1 * p1 + p2 * p2 - p1 * p2, 2) + Rational(p1 - p2, 2);
            if (e1 <= order) {
                QSeries f = euler_inv(static_cast<int>(p1), order - e1)
                                .mul(euler_inv(static_cast<int>(p2), order - e1));
                sum = sum.add(f.shift(e1));
            }
            long long q1 = p1 + 1;
            Rational e2 = Rational(q1 * q1 + p2 * p2 - q1 * p2, 2) + Rational(p2 - q1, 2);
            if (e2 <= order) {
                QSeries f = euler_inv(static_cast<int>(p1), order - e2)
                                .mul(euler_inv(static_cast<int>(p2), order - e2));
                sum = sum.add(f.shift(e2));
            }
        }
    return sum;
}

}  // namespace qchar
