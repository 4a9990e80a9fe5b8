#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchar/fermionic.hpp"
#include "qchar/qseries.hpp"

namespace qchar {

struct CheckReport {
    std::string suite;
    std::string params;
    std::string order;
    std::string status;  // pass | pass-expected-diff | fail | error
    std::string detail;  // witness on fail, diff description on expected-diff
    std::string repro;   // command line that reproduces the report

    bool ok() const { return status == "pass" || status == "pass-expected-diff"; }
};

struct VerifyOptions {
    std::string cache_dir = ".qchar-cache";
    std::optional<Rational> order;        // override where a suite has one knob
    std::optional<long long> durfee_const;
};

// suites: durfee, cartan-inverse, theta-rewrite, tables, count-vs-fermionic,
// fermionic-vs-oracle, character-vs-oracle, prop01-vs-assembly, example51,
// self-check, all
std::vector<std::string> suite_names();
std::vector<CheckReport> run_suite(const std::string& name, const VerifyOptions& opts = {});

// pass iff rerunning the evaluator with its internal search radius doubled
// reproduces the identical series/census up to `order`
CheckReport self_check_exhaustiveness(const std::string& evaluator,
                                      const std::map<std::string, std::string>& params,
                                      const Rational& order);

std::string reports_to_json(const std::vector<CheckReport>& reports);
bool all_ok(const std::vector<CheckReport>& reports);

// "k0*L0" or "k0*L0+kj*Lj" (either order, one j); also plain "k*Lj"
HighestWeight parse_weight_spec(int n, const std::string& spec);

// depth that keeps every class-representative comparison defined through
// `order` after the coset grading shift
long long oracle_depth_for(int n, int k, const HighestWeight& hw, const Rational& order);

}  // namespace qchar
