#include "qchar/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include <json.hpp>

namespace qchar {

namespace {

std::vector<long long> fund_key(const WeightVec& w) {
    std::vector<long long> key(w.fund.size());
    for (std::size_t i = 0; i < w.fund.size(); ++i) {
        if (!w.fund[i].is_integer()) throw std::domain_error("weight key must be integral");
        key[i] = w.fund[i].num();
    }
    return key;
}

// positive roots of A_n as alpha-coordinate index ranges [a,b]
std::vector<std::pair<int, int>> positive_root_ranges(int n) {
    std::vector<std::pair<int, int>> rs;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) rs.emplace_back(a, b);
    return rs;
}

struct RootData {
    std::vector<long long> fund;   // fundamental coords of the root
    std::vector<long long> alpha;  // alpha coords (0/1 pattern, possibly negated)
};

}  // namespace

BigInt MultTable::mult(const LatticeContext& ctx, const WeightVec& mu, long long depth) const {
    ctx.check_rank(mu);
    if (depth < 0 || depth > max_depth) return BigInt();
    for (const auto& f : mu.fund)
        if (!f.is_integer()) return BigInt();
    auto it = entries.find({fund_key(mu), depth});
    return it == entries.end() ? BigInt() : it->second;
}

MultTable freudenthal_table(const LatticeContext& ctx, int k, const WeightVec& lambda,
                            long long max_depth, unsigned shuffle_seed) {
    if (k < 1) throw std::domain_error("freudenthal_table: level must be positive");
    if (max_depth < 0) throw std::domain_error("freudenthal_table: negative depth");
    ctx.check_rank(lambda);
    long long level_used = 0;
    for (const auto& f : lambda.fund) {
        if (!f.is_integer() || f.sign() < 0)
            throw std::domain_error("freudenthal_table: weight must be dominant integral");
        level_used += f.num();
    }
    if (level_used > k)
        throw std::domain_error("freudenthal_table: <Lambda, theta> exceeds the level");

    MultTable table;
    table.n = ctx.rank;
    table.k = k;
    table.lambda = lambda;
    table.max_depth = max_depth;

    const int n = ctx.rank;
    const int hcheck = ctx.dual_coxeter();
    WeightVec rho = ctx.rho();
    WeightVec lam_rho = ctx.add(lambda, rho);
    Rational top_normsq = ctx.normsq(lam_rho);

    // finite roots with fundamental coords cached; first the positives
    std::vector<RootData> pos_roots, all_roots;
    for (auto [a, b] : positive_root_ranges(n)) {
        RootData rd;
        rd.alpha.assign(n, 0);
        for (int i = a; i <= b; ++i) rd.alpha[i - 1] = 1;
        WeightVec w = ctx.from_alpha_int(rd.alpha);
        rd.fund = fund_key(w);
        pos_roots.push_back(rd);
        all_roots.push_back(rd);
        RootData neg = rd;
        for (auto& v : neg.alpha) v = -v;
        for (auto& v : neg.fund) v = -v;
        all_roots.push_back(neg);
    }

    auto inner_with_root = [&](const std::vector<long long>& fund,
                               const std::vector<long long>& alpha) {
        // <sum f_i Lambda_i, sum c_j alpha_j> = sum f_i c_i
        long long s = 0;
        for (int i = 0; i < n; ++i) s += fund[i] * alpha[i];
        return s;
    };
    auto lookup = [&](const std::vector<long long>& fund, long long d) -> const BigInt* {
        auto it = table.entries.find({fund, d});
        return it == table.entries.end() ? nullptr : &it->second;
    };

    std::vector<long long> lambda_fund = fund_key(lambda);

    for (long long d = 0; d <= max_depth; ++d) {
        // candidates: mu = lambda + beta with <mu+rho,mu+rho> <= <lam+rho,lam+rho> + 2(k+h)d,
        // i.e. <beta,beta>/2 + <beta, lam+rho> <= (k+h)d
        Rational bound = Rational((k + hcheck) * d);
        auto betas = lattice_vectors_by_norm(ctx, Rational(1), lam_rho, bound);

        struct Cand {
            std::vector<long long> fund;
            long long height;
            unsigned long long tag;
        };
        std::vector<Cand> cands;
        std::mt19937_64 rng(shuffle_seed * 1000003ULL + static_cast<unsigned long long>(d));
        for (const auto& beta : betas) {
            WeightVec mu = ctx.add(lambda, ctx.from_alpha_int(beta));
            long long h = std::accumulate(beta.begin(), beta.end(), 0LL);
            cands.push_back({fund_key(mu), h, shuffle_seed == 0 ? 0 : rng()});
        }
        // height order is a real dependency (mu + j alpha is processed before
        // mu); ties carry no dependency and may be permuted freely
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.height != b.height) return a.height > b.height;
            if (a.tag != b.tag) return a.tag < b.tag;
            return a.fund > b.fund;
        });

        for (const auto& cand : cands) {
            const auto& mu_fund = cand.fund;
            if (d == 0 && mu_fund == lambda_fund) {
                table.entries[{mu_fund, 0}] = BigInt(1);
                continue;
            }
            WeightVec mu = ctx.from_fund(
                std::vector<Rational>(mu_fund.begin(), mu_fund.end()));
            WeightVec mu_rho = ctx.add(mu, rho);
            Rational denom_r = top_normsq - ctx.normsq(mu_rho) + Rational(2 * (k + hcheck) * d);
            if (!denom_r.is_integer())
                throw std::logic_error("freudenthal: non-integer denominator");
            long long denom = denom_r.num();

            BigInt num;
            // real roots at delta-height 0: positive finite roots, same depth
            for (const auto& rd : pos_roots) {
                long long mu_a = inner_with_root(mu_fund, rd.alpha);
                long long rho_a = 0;
                for (int i = 0; i < n; ++i) rho_a += rd.alpha[i];  // <rho, alpha>
                std::vector<long long> shifted = mu_fund;
                for (long long j = 1;; ++j) {
                    for (int i = 0; i < n; ++i) shifted[i] += rd.fund[i];
                    // stop once the ball is left for good: norm grows when
                    // 2j + <mu+rho, alpha> >= 0
                    Rational nrm = Rational(0);
                    {
                        WeightVec w = ctx.from_fund(
                            std::vector<Rational>(shifted.begin(), shifted.end()));
                        nrm = ctx.normsq(ctx.add(w, rho));
                    }
                    bool outside = nrm > top_normsq + Rational(2 * (k + hcheck) * d);
                    bool growing = 2 * j + mu_a + rho_a >= 0;
                    if (outside && growing) break;
                    const BigInt* m = lookup(shifted, d);
                    if (m) {
                        long long t = mu_a + 2 * j;  // <mu + j alpha, alpha>
                        num += *m * BigInt(t);
                    }
                }
            }
            // real roots alpha + m delta, m >= 1, both root signs
            for (const auto& rd : all_roots) {
                long long mu_a = inner_with_root(mu_fund, rd.alpha);
                for (long long m = 1; m <= d; ++m) {
                    for (long long j = 1; j * m <= d; ++j) {
                        std::vector<long long> shifted = mu_fund;
                        for (int i = 0; i < n; ++i) shifted[i] += j * rd.fund[i];
                        const BigInt* mult = lookup(shifted, d - j * m);
                        if (!mult) continue;
                        long long t = mu_a + 2 * j + static_cast<long long>(k) * m;
                        num += *mult * BigInt(t);
                    }
                }
            }
            // imaginary roots m delta with multiplicity n
            for (long long m = 1; m <= d; ++m)
                for (long long j = 1; j * m <= d; ++j) {
                    const BigInt* mult = lookup(mu_fund, d - j * m);
                    if (!mult) continue;
                    num += *mult * BigInt(static_cast<long long>(n) * k * m);
                }

            if (denom == 0) {
                if (!num.is_zero())
                    throw std::logic_error("freudenthal: zero denominator with nonzero numerator");
                continue;
            }
            BigInt value = (num + num).div_exact(denom);
            if (value.sign() < 0) throw std::logic_error("freudenthal: negative multiplicity");
            if (!value.is_zero()) table.entries[{mu_fund, d}] = value;
        }
    }
    return table;
}

QSeries weight_trace(const LatticeContext& ctx, const MultTable& table, const WeightVec& mu) {
    ctx.check_rank(mu);
    QSeries s{Rational(table.max_depth)};
    WeightVec diff = ctx.sub(mu, table.lambda);
    if (!ctx.in_root_lattice(diff)) return s;
    for (long long d = 0; d <= table.max_depth; ++d) {
        BigInt m = table.mult(ctx, mu, d);
        if (!m.is_zero()) s.add_term(Rational(d), m);
    }
    return s;
}

QSeries string_function(const LatticeContext& ctx, const MultTable& table, const WeightVec& mu) {
    WeightVec lam_rho = ctx.add(table.lambda, ctx.rho());
    Rational expo = ctx.normsq(lam_rho) / Rational(2 * (table.k + ctx.dual_coxeter())) -
                    ctx.rho_normsq() / Rational(2 * ctx.dual_coxeter()) -
                    ctx.normsq(mu) / Rational(2 * table.k);
    return weight_trace(ctx, table, mu).shift(expo);
}

WeightVec class_representative(const LatticeContext& ctx, const MultTable& table,
                               const std::vector<long long>& class_coords) {
    if (static_cast<int>(class_coords.size()) != ctx.rank)
        throw std::domain_error("class_representative: rank mismatch");
    WeightVec mu = table.lambda;
    for (int i = 1; i <= ctx.rank; ++i) {
        long long c = ((class_coords[i - 1] % table.k) + table.k) % table.k;
        mu = ctx.add(mu, ctx.scale(Rational(c), ctx.simple_root(i)));
    }
    return mu;
}

QSeries parafermionic_trace(const LatticeContext& ctx, const MultTable& table,
                            const std::optional<std::vector<long long>>& class_coords) {
    auto one_class = [&](const std::vector<long long>& c) {
        WeightVec mu = class_representative(ctx, table, c);
        Rational shift =
            (ctx.normsq(table.lambda) - ctx.normsq(mu)) / Rational(2 * table.k);
        QSeries t = euler_inf(Rational(table.max_depth)).pow(ctx.rank);
        t = t.mul(weight_trace(ctx, table, mu));
        return t.shift(shift);
    };
    QSeries total = [&]() {
        if (class_coords) return one_class(*class_coords);
        QSeries acc = one_class(std::vector<long long>(ctx.rank, 0));
        std::vector<long long> c(ctx.rank, 0);
        while (true) {
            int i = 0;
            while (i < ctx.rank && c[i] == table.k - 1) c[i++] = 0;
            if (i == ctx.rank) break;
            ++c[i];
            acc = acc.add(one_class(c));
        }
        return acc;
    }();
    for (const auto& [e, coeff] : total.terms())
        if (coeff.sign() < 0)
            throw std::logic_error("parafermionic_trace: negative coefficient at q^" + e.str());
    return total;
}

std::string mult_table_cache_name(int n, int k, const WeightVec& lambda, long long max_depth) {
    std::string name = "mult_n" + std::to_string(n) + "_k" + std::to_string(k) + "_w";
    for (std::size_t i = 0; i < lambda.fund.size(); ++i) {
        if (i) name += "-";
        name += lambda.fund[i].str();
    }
    name += "_d" + std::to_string(max_depth) + ".json";
    return name;
}

static constexpr const char* kCacheFormat = "qchar-multtable-v1";

void save_mult_table(const LatticeContext& ctx, const MultTable& table, const std::string& dir) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json j;
    j["format"] = kCacheFormat;
    j["n"] = table.n;
    j["k"] = table.k;
    j["max_depth"] = table.max_depth;
    auto wf = nlohmann::ordered_json::array();
    for (const auto& f : table.lambda.fund) wf.push_back(f.str());
    j["weight_fund"] = wf;
    auto cart = nlohmann::ordered_json::array();
    for (int l = 1; l <= table.n; ++l) {
        auto row = nlohmann::ordered_json::array();
        for (int m = 1; m <= table.n; ++m) row.push_back(ctx.cartan(l, m));
        cart.push_back(row);
    }
    j["cartan"] = cart;
    auto entries = nlohmann::ordered_json::array();
    std::vector<std::pair<std::pair<std::vector<long long>, long long>, BigInt>> sorted(
        table.entries.begin(), table.entries.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second < b.first.second;
        return a.first.first < b.first.first;
    });
    for (const auto& [key, m] : sorted) {
        nlohmann::ordered_json e;
        WeightVec mu = ctx.from_fund(std::vector<Rational>(key.first.begin(), key.first.end()));
        auto coords = nlohmann::ordered_json::array();
        for (const auto& c : ctx.alpha_coords(mu)) coords.push_back(c.str());
        e["weight"] = coords;
        e["depth"] = key.second;
        e["mult"] = m.to_decimal();
        entries.push_back(e);
    }
    j["entries"] = entries;

    std::string path = dir + "/" + mult_table_cache_name(table.n, table.k, table.lambda,
                                                         table.max_depth);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1);
    }
    std::filesystem::rename(tmp, path);
}

std::optional<MultTable> load_mult_table(const LatticeContext& ctx, int k,
                                         const WeightVec& lambda, long long max_depth,
                                         const std::string& dir) {
    std::string path = dir + "/" + mult_table_cache_name(ctx.rank, k, lambda, max_depth);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("format").get<std::string>() != kCacheFormat) return std::nullopt;
        if (j.at("n").get<int>() != ctx.rank || j.at("k").get<int>() != k) return std::nullopt;
        if (j.at("max_depth").get<long long>() != max_depth) return std::nullopt;
        auto wf = j.at("weight_fund");
        if (static_cast<int>(wf.size()) != ctx.rank) return std::nullopt;
        for (int i = 0; i < ctx.rank; ++i)
            if (Rational::parse(wf[i].get<std::string>()) != lambda.fund[i]) return std::nullopt;
        for (int l = 1; l <= ctx.rank; ++l)
            for (int m = 1; m <= ctx.rank; ++m)
                if (j.at("cartan")[l - 1][m - 1].get<int>() != ctx.cartan(l, m))
                    return std::nullopt;
        MultTable table;
        table.n = ctx.rank;
        table.k = k;
        table.lambda = lambda;
        table.max_depth = max_depth;
        for (const auto& e : j.at("entries")) {
            std::vector<Rational> coords;
            for (const auto& c : e.at("weight")) coords.push_back(Rational::parse(c.get<std::string>()));
            WeightVec mu = ctx.from_alpha(coords);  // entries carry mu's own alpha-coords
            long long d = e.at("depth").get<long long>();
            if (d < 0 || d > max_depth) return std::nullopt;
            BigInt m = BigInt::from_decimal(e.at("mult").get<std::string>());
            if (m.sign() <= 0) return std::nullopt;
            table.entries[{fund_key(mu), d}] = m;
        }
        return table;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

MultTable freudenthal_table_cached(const LatticeContext& ctx, int k, const WeightVec& lambda,
                                   long long max_depth, const std::string& cache_dir) {
    if (auto t = load_mult_table(ctx, k, lambda, max_depth, cache_dir)) return *t;
    MultTable t = freudenthal_table(ctx, k, lambda, max_depth);
    save_mult_table(ctx, t, cache_dir);
    return t;
}

}  // namespace qchar
