#include "qchar/qpbasis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace qchar {

std::vector<long long> QPMonomial::color_type() const {
    std::vector<long long> r(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
        long long s = 0;
        for (const auto& p : colors[i]) s += p.charge;
        r[i] = s;
    }
    return r;
}

std::vector<std::vector<int>> QPMonomial::charge_type() const {
    std::vector<std::vector<int>> c(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i)
        for (const auto& p : colors[i]) c[i].push_back(p.charge);
    return c;
}

std::vector<long long> QPMonomial::dual_charge_type(int i, int K) const {
    std::vector<long long> r(K, 0);
    for (const auto& p : colors[i - 1])
        for (int t = 1; t <= p.charge && t <= K; ++t) ++r[t - 1];
    return r;
}

Rational QPMonomial::principal_energy() const {
    long long s = 0;
    for (const auto& col : colors)
        for (const auto& p : col) s += p.m;
    return Rational(-s);
}

long long index_upper_bound(const AdmissibilityContext& actx,
                            const std::vector<std::vector<int>>& charges, int i, int p) {
    const int charge = charges[i - 1][p - 1];
    long long ub = 0;
    if (i >= 2)
        for (int q : charges[i - 2]) ub += std::min(charge, q);
    ub -= actx.hw.delta_count(i, charge);
    for (int pp = 1; pp < p; ++pp) ub -= 2 * std::min(charge, charges[i - 1][pp - 1]);
    ub -= charge;
    return ub;
}

bool check_admissible(const QPMonomial& m, const AdmissibilityContext& actx) {
    const int K = actx.charges_max();
    if (m.rank() != actx.hw.n) throw std::domain_error("check_admissible: rank mismatch");
    auto charges = m.charge_type();
    for (int i = 1; i <= m.rank(); ++i) {
        const auto& col = m.colors[i - 1];
        for (std::size_t p = 0; p < col.size(); ++p) {
            if (col[p].charge < 1 || col[p].charge > K) return false;
            if (p > 0 && col[p].charge > col[p - 1].charge) return false;
            if (col[p].m > index_upper_bound(actx, charges, i, static_cast<int>(p) + 1))
                return false;
            if (p > 0 && col[p].charge == col[p - 1].charge &&
                col[p].m > col[p - 1].m - 2 * col[p].charge)
                return false;
        }
    }
    return true;
}

Rational parafermionic_energy(const QPMonomial& m, const AdmissibilityContext& actx) {
    const auto& hw = actx.hw;
    std::vector<long long> r = m.color_type();
    long long beta_normsq = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        beta_normsq += 2 * r[i] * r[i];
        if (i + 1 < r.size()) beta_normsq -= 2 * r[i] * r[i + 1];
    }
    Rational e = m.principal_energy() - Rational(beta_normsq, 2LL * hw.k);
    if (hw.kj > 0) e -= Rational(hw.kj * r[hw.j - 1], hw.k);
    return e;
}

namespace {

std::vector<std::vector<int>> charges_from_tuple(const OccupationTuple& t) {
    std::vector<std::vector<int>> charges(t.n);
    for (int i = 1; i <= t.n; ++i) {
        long long count = t.K > 0 ? t.dual[0][i - 1] : 0;  // r_i^(1) particles
        for (long long p = 1; p <= count; ++p) {
            int c = 0;
            for (int u = 1; u <= t.K; ++u)
                if (t.dual[u - 1][i - 1] >= p) ++c;
            charges[i - 1].push_back(c);
        }
        std::sort(charges[i - 1].begin(), charges[i - 1].end(), std::greater<int>());
    }
    return charges;
}

// canonical listing order: grade, color-type, charge-type (color 1 first),
// then the flattened index tuple
bool listing_less(const std::pair<Rational, QPMonomial>& a,
                  const std::pair<Rational, QPMonomial>& b) {
    if (a.first != b.first) return a.first < b.first;
    auto cta = a.second.color_type(), ctb = b.second.color_type();
    if (cta != ctb) return cta < ctb;
    auto cca = a.second.charge_type(), ccb = b.second.charge_type();
    if (cca != ccb) return cca < ccb;
    std::vector<long long> ma, mb;
    for (const auto& col : a.second.colors)
        for (const auto& p : col) ma.push_back(p.m);
    for (const auto& col : b.second.colors)
        for (const auto& p : col) mb.push_back(p.m);
    return ma < mb;
}

}  // namespace

Census enumerate_basis(const AdmissibilityContext& actx, const Rational& max_energy,
                       Grading grading, const CensusFilters& filters, bool with_listing,
                       int radius_scale) {
    const auto& hw = actx.hw;
    hw.validate();
    const int K = actx.charges_max();
    if (K < 0 || K > hw.k) throw std::domain_error("enumerate_basis: K out of range");
    if (grading == Grading::parafermionic && hw.k < 2)
        throw std::domain_error("enumerate_basis: parafermionic grading needs k >= 2");
    LatticeContext ctx(hw.n);

    Census census;
    census.grading = grading;
    census.max_energy = max_energy;
    census.with_listing = with_listing;

    // color-charge-type scan radius: exact for the principal grading, the
    // shifted-kernel radius (with exact linear slack) for the parafermionic one
    Rational radius;
    if (grading == Grading::principal) {
        radius = std::max(max_energy, Rational(0));
    } else {
        Rational wj = hw.kj > 0 ? ctx.fund_gram(hw.j, hw.j) : Rational(0);
        long long rjmax = 0;
        if (hw.kj > 0) {
            auto ok = [&](long long x) {
                Rational xr(x);
                return xr * xr / (Rational(2) * Rational(hw.k) * Rational(hw.k) * wj) -
                           Rational(hw.kj, hw.k) * xr <=
                       max_energy;
            };
            while (ok(rjmax + 1)) ++rjmax;
        }
        radius = std::max(Rational(hw.k) * max_energy + Rational(hw.kj) * Rational(rjmax),
                          Rational(0));
    }
    radius = radius * Rational(radius_scale);

    const HighestWeight* prune_hw = grading == Grading::principal ? &hw : nullptr;
    enumerate_dual_systems(ctx, K, prune_hw, radius, [&](const OccupationTuple& t, long long quad,
                                                         long long) {
        long long lin = tuple_linear_term(t, hw);
        auto charges = charges_from_tuple(t);

        if (filters.charge_type && charges != *filters.charge_type) return;
        std::vector<long long> r(t.n);
        for (int i = 1; i <= t.n; ++i) r[i - 1] = t.charge_sum(i);
        if (filters.color_type && r != *filters.color_type) return;
        if (filters.weight_class) {
            if (static_cast<int>(filters.weight_class->size()) != t.n)
                throw std::domain_error("enumerate_basis: weight class has wrong rank");
            for (int i = 0; i < t.n; ++i) {
                long long want = (((*filters.weight_class)[i] % hw.k) + hw.k) % hw.k;
                if (((r[i] % hw.k) + hw.k) % hw.k != want) return;
            }
        }

        long long beta_normsq = 0;
        for (int i = 0; i < t.n; ++i) {
            beta_normsq += 2 * r[i] * r[i];
            if (i + 1 < t.n) beta_normsq -= 2 * r[i] * r[i + 1];
        }
        Rational correction(0);
        if (grading == Grading::parafermionic) {
            correction = Rational(beta_normsq, 2LL * hw.k);
            if (hw.kj > 0) correction += Rational(hw.kj * r[hw.j - 1], hw.k);
        }
        Rational min_grade = Rational(quad + lin) - correction;
        if (min_grade > max_energy) return;
        long long slack = (max_energy - min_grade).floor() * radius_scale;

        // index bounds; within an equal-charge run the bound steps by exactly
        // -2*charge, so deficits e_p from the greedy maximum are weakly
        // increasing along each run and the census factorizes over runs
        std::vector<std::vector<long long>> ub(t.n);
        for (int i = 1; i <= t.n; ++i)
            for (std::size_t p = 1; p <= charges[i - 1].size(); ++p)
                ub[i - 1].push_back(index_upper_bound(actx, charges, i, static_cast<int>(p)));

        QPMonomial mono;
        mono.colors.assign(t.n, {});
        for (int i = 0; i < t.n; ++i)
            for (std::size_t p = 0; p < charges[i].size(); ++p)
                mono.colors[i].push_back({charges[i][p], 0});

        std::function<void(int, std::size_t, long long, long long)> assign =
            [&](int color, std::size_t p, long long run_floor, long long used) {
                if (color == t.n) {
                    Rational grade = min_grade + Rational(used);
                    if (grade > max_energy) return;
                    ++census.counts[grade];
                    if (with_listing) census.listing.emplace_back(grade, mono);
                    return;
                }
                if (p == charges[color].size()) {
                    assign(color + 1, 0, 0, used);
                    return;
                }
                bool same_run = p > 0 && charges[color][p] == charges[color][p - 1];
                long long e0 = same_run ? run_floor : 0;
                for (long long e = e0; used + e <= slack; ++e) {
                    mono.colors[color][p].m = ub[color][p] - e;
                    assign(color, p + 1, e, used + e);
                }
            };
        assign(0, 0, 0, 0);
    });

    if (with_listing) std::sort(census.listing.begin(), census.listing.end(), listing_less);
    return census;
}

QSeries census_series(const Census& c) {
    QSeries s(c.max_energy);
    for (const auto& [grade, count] : c.counts) s.add_term(grade, BigInt(count));
    return s;
}

std::string render_color_type(const std::vector<long long>& ct) {
    std::string s = "(";
    for (std::size_t i = ct.size(); i-- > 0;) {
        s += std::to_string(ct[i]);
        if (i > 0) s += ";";
    }
    return s + ")";
}

std::string render_charge_type(const std::vector<std::vector<int>>& cct) {
    std::string s = "(";
    for (std::size_t i = cct.size(); i-- > 0;) {
        // charges print ascending within a color: n_{r,i} <= ... <= n_{1,i}
        for (std::size_t p = cct[i].size(); p-- > 0;) {
            s += std::to_string(cct[i][p]);
            if (p > 0) s += ",";
        }
        if (i > 0) s += ";";
    }
    return s + ")";
}

std::string render_monomial(const QPMonomial& m) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i = m.colors.size(); i-- > 0;) {
        for (std::size_t p = m.colors[i].size(); p-- > 0;) {
            if (!first) s += " ";
            first = false;
            const auto& part = m.colors[i][p];
            s += std::to_string(part.m);
            s += "_{";
            if (part.charge != 1) s += std::to_string(part.charge);
            s += "a" + std::to_string(i + 1) + "}";
        }
    }
    return s + ")";
}

std::string render_table(const Census& census) {
    if (!census.with_listing)
        throw std::domain_error("render_table: census was built without a listing");
    bool with_cct = false;
    for (const auto& [grade, mono] : census.listing)
        for (const auto& col : mono.colors)
            for (const auto& p : col)
                if (p.charge > 1) with_cct = true;

    std::string out = with_cct ? "color-type | energy | charge-type | basis\n"
                               : "color-type | energy | basis\n";
    // rows grouped color-type-major: color-type, then
    // energy, then charge-type
    using Key = std::tuple<std::vector<long long>, Rational, std::vector<std::vector<int>>>;
    std::map<Key, std::vector<std::string>> rows;
    for (const auto& [grade, mono] : census.listing) {
        Key key{mono.color_type(), grade,
                with_cct ? mono.charge_type() : std::vector<std::vector<int>>{}};
        rows[key].push_back(render_monomial(mono));
    }
    for (const auto& [key, cells] : rows) {
        out += render_color_type(std::get<0>(key)) + " | " + std::get<1>(key).str() + " | ";
        if (with_cct) out += render_charge_type(std::get<2>(key)) + " | ";
        std::string cell;
        for (const auto& c : cells) {
            if (!cell.empty()) cell += ", ";
            cell += c;
        }
        out += cell + "\n";
    }
    return out;
}

std::string census_to_json(const Census& census) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [grade, count] : census.counts) {
        nlohmann::ordered_json row;
        row["grade"] = grade.str();
        row["count"] = count;
        if (census.with_listing) {
            auto monos = nlohmann::ordered_json::array();
            for (const auto& [g, m] : census.listing) {
                if (g != grade) continue;
                auto enc = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < m.colors.size(); ++i)
                    for (const auto& p : m.colors[i])
                        enc.push_back({static_cast<long long>(i + 1),
                                       static_cast<long long>(p.charge), p.m});
                monos.push_back(enc);
            }
            row["monomials"] = monos;
        }
        arr.push_back(row);
    }
    return arr.dump();
}

}  // namespace qchar
