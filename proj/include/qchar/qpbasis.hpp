#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchar/fermionic.hpp"
#include "qchar/lattice.hpp"
#include "qchar/rational.hpp"

namespace qchar {

struct QPParticle {
    int charge = 1;   // n_{p,i}, 1..K
    long long m = 0;  // index m_{p,i}
};

// One quasi-particle monomial: per color, particles listed p = 1..r_i^(1)
// with charges nonincreasing in p.
struct QPMonomial {
    std::vector<std::vector<QPParticle>> colors;

    int rank() const { return static_cast<int>(colors.size()); }
    std::vector<long long> color_type() const;  // r_1..r_n
    std::vector<std::vector<int>> charge_type() const;
    std::vector<long long> dual_charge_type(int i, int K) const;  // r_i^(1..K)
    Rational principal_energy() const;                            // -sum m
};

struct AdmissibilityContext {
    HighestWeight hw;
    int K = 0;  // defaults to k-1 when 0

    int charges_max() const { return K > 0 ? K : hw.k - 1; }
};

// Admissible-index upper bound for particle p of color i, given the full
// color-charge-type.
long long index_upper_bound(const AdmissibilityContext& actx,
                            const std::vector<std::vector<int>>& charges, int i, int p);

bool check_admissible(const QPMonomial& m, const AdmissibilityContext& actx);

// Parafermionic energy: -sum m - <beta,beta>/2k - (kj/k) r_j,
// beta = sum r_i alpha_i.
Rational parafermionic_energy(const QPMonomial& m, const AdmissibilityContext& actx);

enum class Grading { principal, parafermionic };

struct CensusFilters {
    std::optional<std::vector<long long>> color_type;            // r_1..r_n
    std::optional<std::vector<std::vector<int>>> charge_type;    // per color, nonincreasing
    std::optional<std::vector<long long>> weight_class;          // alpha-coords of mu - Lambda mod k
};

struct Census {
    Grading grading = Grading::principal;
    Rational max_energy;
    std::map<Rational, long long> counts;
    bool with_listing = false;
    std::vector<std::pair<Rational, QPMonomial>> listing;  // (grade, monomial), canonical order
};

Census enumerate_basis(const AdmissibilityContext& actx, const Rational& max_energy,
                       Grading grading, const CensusFilters& filters = {},
                       bool with_listing = false, int radius_scale = 1);

QSeries census_series(const Census& c);

std::string render_color_type(const std::vector<long long>& ct);
std::string render_charge_type(const std::vector<std::vector<int>>& cct);
std::string render_monomial(const QPMonomial& m);

// Reference-table layout: color-type | energy | [charge-type |] basis
std::string render_table(const Census& census);

std::string census_to_json(const Census& census);

}  // namespace qchar
