#include "qchar/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qchar/fermionic.hpp"
#include "qchar/lattice.hpp"
#include "qchar/oracle.hpp"
#include "qchar/qpbasis.hpp"
#include "qchar/theta.hpp"
#include "qchar/verify.hpp"

namespace qchar {

namespace {

std::vector<long long> parse_csv_ll(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw std::domain_error("cannot parse integer list \"" + s + "\"");
        }
    }
    if (out.empty()) throw std::domain_error("empty integer list");
    return out;
}

std::vector<Rational> parse_csv_rational(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(Rational::parse(tok));
    if (out.empty()) throw std::domain_error("empty rational list");
    return out;
}

// "r_n;...;r_1" as printed -> r_1..r_n
std::vector<long long> parse_color_type(const std::string& s, int n) {
    std::vector<long long> groups;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) groups.push_back(std::stoll(tok));
    if (static_cast<int>(groups.size()) != n)
        throw std::domain_error("color-type needs " + std::to_string(n) + " groups");
    std::reverse(groups.begin(), groups.end());
    return groups;
}

// "charges_n;...;charges_1", charges ascending within a color as printed
// -> per color 1..n, charges nonincreasing in p
std::vector<std::vector<int>> parse_charge_type(const std::string& s, int n) {
    std::vector<std::vector<int>> groups;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        std::vector<int> charges;
        std::stringstream gs(tok);
        std::string c;
        while (std::getline(gs, c, ',')) charges.push_back(std::stoi(c));
        std::reverse(charges.begin(), charges.end());
        groups.push_back(charges);
    }
    if (static_cast<int>(groups.size()) != n)
        throw std::domain_error("charge-type needs " + std::to_string(n) + " groups");
    std::reverse(groups.begin(), groups.end());
    return groups;
}

void print_series(std::ostream& out, const QSeries& s, const std::string& format) {
    if (format == "json")
        out << s.to_json() << "\n";
    else
        out << s.to_text();
}

void print_character(std::ostream& out, const LatticeContext& ctx, const GradedCharacter& gc,
                     const std::string& format) {
    if (format == "json") {
        out << gc.to_json(ctx) << "\n";
        return;
    }
    if (!gc.weight_resolved) {
        print_series(out, gc.collapse(), format);
        return;
    }
    for (const auto& [w, s] : gc.components) {
        out << "weight ";
        auto coords = ctx.alpha_coords(w);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out << ",";
            out << coords[i].str();
        }
        out << "\n" << s.to_text();
    }
}

struct CommonArgs {
    int n = 1;
    int k = 2;
    std::string weight;
    std::string order = "8";
    std::string format = "text";
    std::string cache_dir = ".qchar-cache";
    unsigned jobs = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-characters of standard sl(n+1)^ modules: fermionic sums, "
                 "quasi-particle bases, theta functions, string functions, and a "
                 "Freudenthal oracle"};
    app.name("qchar");
    app.require_subcommand(1);
    app.set_config("--config");

    CommonArgs c;
    app.add_option("--jobs", c.jobs, "cap on internal workers")->capture_default_str();

    auto add_common = [&](CLI::App* sub, bool with_weight = true) {
        sub->add_option("--n", c.n, "rank of sl(n+1)")->required();
        sub->add_option("--k", c.k, "level")->required();
        if (with_weight)
            sub->add_option("--weight", c.weight, "highest weight, e.g. \"2*L0\" or \"1*L0+1*L1\"")
                ->required();
        sub->add_option("--format", c.format, "text|json")->capture_default_str();
    };

    // fermionic
    auto* fsub = app.add_subcommand("fermionic", "principal-subspace fermionic sum");
    add_common(fsub);
    fsub->add_option("--order", c.order, "truncation order (integer or a/b)");
    int max_charge = 0;
    fsub->add_option("--max-charge", max_charge, "K, either k or k-1 (default k)");

    // parafermionic
    auto* psub = app.add_subcommand("parafermionic", "parafermionic sum, optionally class-restricted");
    add_common(psub);
    psub->add_option("--order", c.order, "truncation order");
    std::string mu_class;
    psub->add_option("--mu", mu_class, "class restriction: alpha-coords of mu - Lambda, \"c1,..,cn\"");

    // enumerate
    auto* esub = app.add_subcommand("enumerate", "admissible quasi-particle census");
    add_common(esub);
    std::string max_energy = "4", grading = "parafermionic", color_type, charge_type, cls_filter;
    bool list_monomials = false;
    esub->add_option("--max-energy", max_energy, "energy bound (integer or a/b)");
    esub->add_option("--grading", grading, "principal|parafermionic")->capture_default_str();
    esub->add_option("--color-type", color_type, "filter \"r_n;...;r_1\"");
    esub->add_option("--charge-type", charge_type, "filter, charges per color \"..;..\"");
    esub->add_option("--class", cls_filter, "weight class filter \"c1,..,cn\"");
    esub->add_flag("--list", list_monomials, "include the monomial listing");

    // table
    auto* tsub = app.add_subcommand("table", "render the census in the reference-table layout");
    add_common(tsub);
    tsub->add_option("--max-energy", max_energy, "energy bound");
    tsub->add_option("--color-type", color_type, "filter \"r_n;...;r_1\"");

    // theta
    auto* thsub = app.add_subcommand("theta", "classical degree-k theta function");
    thsub->add_option("--n", c.n, "rank")->required();
    thsub->add_option("--k", c.k, "degree")->required();
    std::string mu_fund;
    thsub->add_option("--mu-fund", mu_fund, "mu in fundamental coords \"f1,..,fn\"")->required();
    thsub->add_option("--order", c.order, "truncation order");
    thsub->add_option("--format", c.format, "text|json");
    bool weight_resolved = false;
    thsub->add_flag("--weight-resolved", weight_resolved, "carry the y-grading per weight");

    // character
    auto* csub = app.add_subcommand("character", "full standard-module character");
    add_common(csub);
    csub->add_option("--order", c.order, "truncation order");
    csub->add_flag("--weight-resolved", weight_resolved, "carry the y-grading per weight");

    // string
    auto* ssub = app.add_subcommand("string", "string function, fermionic formula and/or oracle");
    add_common(ssub);
    ssub->add_option("--order", c.order, "truncation order");
    std::string mu_str, method = "both";
    ssub->add_option("--mu", mu_str, "alpha-coords of mu - Lambda, \"c1,..,cn\"")->required();
    ssub->add_option("--method", method, "fermionic|oracle|both")->capture_default_str();
    long long depth_override = -1;
    ssub->add_option("--depth", depth_override, "oracle table depth override");
    ssub->add_option("--cache-dir", c.cache_dir, "oracle cache directory")
        ->envname("QCHAR_CACHE_DIR");

    // oracle-build
    auto* osub = app.add_subcommand("oracle-build", "build (and cache) a Freudenthal table");
    add_common(osub);
    long long max_depth = 8;
    osub->add_option("--max-depth", max_depth, "table depth")->capture_default_str();
    osub->add_option("--cache-dir", c.cache_dir, "cache directory")->envname("QCHAR_CACHE_DIR");

    // prop01
    auto* prsub = app.add_subcommand("prop01", "vacuum character via particles and antiparticles");
    prsub->add_option("--n", c.n, "rank")->required();
    prsub->add_option("--k", c.k, "level")->required();
    prsub->add_option("--order", c.order, "truncation order");
    prsub->add_option("--format", c.format, "text|json");

    // special-l1l2
    auto* spsub = app.add_subcommand("special-l1l2",
                                     "two-term parafermionic character of L(L1+L2), n = k = 2");
    spsub->add_option("--order", c.order, "truncation order");
    spsub->add_option("--method", method, "formula|oracle|both")->capture_default_str();
    spsub->add_option("--format", c.format, "text|json");
    spsub->add_option("--cache-dir", c.cache_dir, "oracle cache directory")
        ->envname("QCHAR_CACHE_DIR");

    // verify
    auto* vsub = app.add_subcommand("verify", "run a named cross-check suite");
    std::string suite;
    std::string vorder;
    long long durfee_const = 0;
    vsub->add_option("--suite", suite, "suite name or \"all\"")->required();
    vsub->add_option("--order", vorder, "order override");
    auto* const_opt = vsub->add_option("--const", durfee_const, "durfee: fixed a-b value");
    vsub->add_option("--format", c.format, "text|json");
    vsub->add_option("--cache-dir", c.cache_dir, "oracle cache directory")
        ->envname("QCHAR_CACHE_DIR");

    std::vector<std::string> argv_vec(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(std::move(argv_vec));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (fsub->parsed()) {
            LatticeContext ctx(c.n);
            HighestWeight hw = parse_weight_spec(c.n, c.weight);
            if (hw.k != c.k) throw std::domain_error("--k disagrees with the weight spec");
            int K = max_charge == 0 ? hw.k : max_charge;
            print_series(out, principal_sum(ctx, hw, K, Rational::parse(c.order)), c.format);
            return 0;
        }
        if (psub->parsed()) {
            LatticeContext ctx(c.n);
            HighestWeight hw = parse_weight_spec(c.n, c.weight);
            if (hw.k != c.k) throw std::domain_error("--k disagrees with the weight spec");
            std::optional<std::vector<long long>> cls;
            if (!mu_class.empty()) cls = parse_csv_ll(mu_class);
            print_series(out, parafermionic_sum(ctx, hw, Rational::parse(c.order), cls), c.format);
            return 0;
        }
        if (esub->parsed() || tsub->parsed()) {
            HighestWeight hw = parse_weight_spec(c.n, c.weight);
            if (hw.k != c.k) throw std::domain_error("--k disagrees with the weight spec");
            AdmissibilityContext actx{hw, 0};
            CensusFilters filters;
            if (!color_type.empty()) filters.color_type = parse_color_type(color_type, c.n);
            if (!charge_type.empty()) filters.charge_type = parse_charge_type(charge_type, c.n);
            if (!cls_filter.empty()) filters.weight_class = parse_csv_ll(cls_filter);
            bool want_listing = list_monomials || tsub->parsed();
            Grading g = grading == "principal" ? Grading::principal : Grading::parafermionic;
            if (grading != "principal" && grading != "parafermionic")
                throw std::domain_error("--grading must be principal or parafermionic");
            Census census = enumerate_basis(actx, Rational::parse(max_energy), g, filters,
                                            want_listing);
            if (tsub->parsed()) {
                out << render_table(census);
            } else if (c.format == "json") {
                out << census_to_json(census) << "\n";
            } else {
                for (const auto& [grade, count] : census.counts)
                    out << grade.str() << " " << count << "\n";
                if (want_listing)
                    for (const auto& [grade, mono] : census.listing)
                        out << grade.str() << " " << render_monomial(mono) << "\n";
            }
            return 0;
        }
        if (thsub->parsed()) {
            LatticeContext ctx(c.n);
            WeightVec mu = ctx.from_fund(parse_csv_rational(mu_fund));
            GradedCharacter gc =
                theta_series(ctx, mu, c.k, Rational::parse(c.order), weight_resolved);
            print_character(out, ctx, gc, c.format);
            return 0;
        }
        if (csub->parsed()) {
            LatticeContext ctx(c.n);
            HighestWeight hw = parse_weight_spec(c.n, c.weight);
            if (hw.k != c.k) throw std::domain_error("--k disagrees with the weight spec");
            GradedCharacter gc =
                assemble_character(ctx, hw, Rational::parse(c.order), weight_resolved);
            print_character(out, ctx, gc, c.format);
            return 0;
        }
        if (ssub->parsed()) {
            LatticeContext ctx(c.n);
            HighestWeight hw = parse_weight_spec(c.n, c.weight);
            if (hw.k != c.k) throw std::domain_error("--k disagrees with the weight spec");
            Rational order = Rational::parse(c.order);
            std::vector<long long> cls = parse_csv_ll(mu_str);
            if (static_cast<int>(cls.size()) != c.n)
                throw std::domain_error("--mu needs n coordinates");
            bool want_fermionic = method == "fermionic" || method == "both";
            bool want_oracle = method == "oracle" || method == "both";
            if (!want_fermionic && !want_oracle)
                throw std::domain_error("--method must be fermionic, oracle or both");
            std::optional<QSeries> fermi, orac;
            if (want_fermionic) {
                Rational S;
                fermi = string_function_fermionic(ctx, hw, cls, order, &S);
                out << "fermionic (prefactor exponent " << S.str() << ")\n";
                print_series(out, *fermi, "text");
            }
            if (want_oracle) {
                long long depth = depth_override >= 0 ? depth_override
                                                      : oracle_depth_for(c.n, c.k, hw, order);
                MultTable table = freudenthal_table_cached(ctx, c.k, hw.finite_part(ctx), depth,
                                                           c.cache_dir);
                orac = string_function(ctx, table, class_representative(ctx, table, cls));
                out << "oracle (depth " << depth << ")\n";
                print_series(out, *orac, "text");
            }
            if (fermi && orac) {
                CompareResult cr = equal_to_order(*fermi, *orac, order);
                if (cr.equal) {
                    out << "AGREE to order " << order.str() << "\n";
                } else {
                    out << "DISAGREE at q^" << cr.witness.str() << ": fermionic="
                        << cr.lhs.to_decimal() << " oracle=" << cr.rhs.to_decimal() << "\n";
                    return 1;
                }
            }
            return 0;
        }
        if (osub->parsed()) {
            LatticeContext ctx(c.n);
            HighestWeight hw = parse_weight_spec(c.n, c.weight);
            if (hw.k != c.k) throw std::domain_error("--k disagrees with the weight spec");
            MultTable table =
                freudenthal_table_cached(ctx, c.k, hw.finite_part(ctx), max_depth, c.cache_dir);
            std::map<long long, BigInt> per_depth;
            for (const auto& [key, m] : table.entries) per_depth[key.second] += m;
            if (c.format == "json") {
                out << "{\"entries\":" << table.entries.size() << ",\"per_depth\":[";
                for (long long d = 0; d <= table.max_depth; ++d) {
                    if (d) out << ",";
                    out << per_depth[d].to_decimal();
                }
                out << "]}\n";
            } else {
                out << "entries " << table.entries.size() << "\n";
                for (long long d = 0; d <= table.max_depth; ++d)
                    out << "depth " << d << " dim " << per_depth[d].to_decimal() << "\n";
            }
            return 0;
        }
        if (prsub->parsed()) {
            print_series(out, prop01_sum(c.n, c.k, Rational::parse(c.order)), c.format);
            return 0;
        }
        if (spsub->parsed()) {
            Rational order = Rational::parse(c.order);
            bool want_formula = method == "formula" || method == "both";
            bool want_oracle = method == "oracle" || method == "both";
            if (!want_formula && !want_oracle)
                throw std::domain_error("--method must be formula, oracle or both");
            std::optional<QSeries> formula, orac;
            if (want_formula) {
                formula = special_character_L1L2(order);
                out << "formula\n";
                print_series(out, *formula, "text");
            }
            if (want_oracle) {
                LatticeContext ctx(2);
                WeightVec lam = ctx.add(ctx.fundamental(1), ctx.fundamental(2));
                Rational worst(0);
                for (long long c1 = 0; c1 < 2; ++c1)
                    for (long long c2 = 0; c2 < 2; ++c2) {
                        WeightVec mu = ctx.add(
                            lam, ctx.add(ctx.scale(Rational(c1), ctx.simple_root(1)),
                                         ctx.scale(Rational(c2), ctx.simple_root(2))));
                        worst = std::max(worst, (ctx.normsq(mu) - ctx.normsq(lam)) / Rational(4));
                    }
                long long depth = order.ceil() + std::max<long long>(0, worst.ceil());
                MultTable table = freudenthal_table_cached(ctx, 2, lam, depth, c.cache_dir);
                orac = parafermionic_trace(ctx, table, std::nullopt);
                out << "oracle (depth " << depth << ")\n";
                print_series(out, orac->truncate(order), "text");
            }
            if (formula && orac) {
                CompareResult cr = equal_to_order(*formula, *orac, order);
                if (cr.equal) {
                    out << "AGREE to order " << order.str() << "\n";
                } else {
                    out << "DISAGREE at q^" << cr.witness.str() << ": formula="
                        << cr.lhs.to_decimal() << " oracle=" << cr.rhs.to_decimal() << "\n";
                    return 1;
                }
            }
            return 0;
        }
        if (vsub->parsed()) {
            VerifyOptions opts;
            opts.cache_dir = c.cache_dir;
            if (!vorder.empty()) opts.order = Rational::parse(vorder);
            if (const_opt->count() > 0) opts.durfee_const = durfee_const;
            auto reports = run_suite(suite, opts);
            if (c.format == "json") {
                out << reports_to_json(reports) << "\n";
            } else {
                for (const auto& r : reports) {
                    out << "[" << r.status << "] " << r.suite << " (" << r.params
                        << ") order=" << r.order;
                    if (!r.detail.empty()) out << " -- " << r.detail;
                    out << "\n";
                }
            }
            return all_ok(reports) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace qchar
