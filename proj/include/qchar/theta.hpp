#pragma once

#include <map>
#include <string>

#include "qchar/fermionic.hpp"
#include "qchar/lattice.hpp"
#include "qchar/qseries.hpp"

namespace qchar {

// A q-series per weight of P. weight_resolved keeps the full y-grading as
// the map key k*alpha + mu; the q-only view collapses to a
// single series at the zero key.
struct GradedCharacter {
    bool weight_resolved = false;
    Rational order;
    std::map<WeightVec, QSeries> components;

    QSeries collapse() const;  // exact sum over components
    std::string to_json(const LatticeContext& ctx) const;
};

// Classical theta function of degree k:
// Theta_mu = q^{<mu,mu>/2k} sum_{alpha in Q} q^{(k/2)<a,a> + <a,mu>},
// weight key k*alpha + mu when resolved.
GradedCharacter theta_series(const LatticeContext& ctx, const WeightVec& mu, int k,
                             const Rational& order, bool weight_resolved,
                             int radius_scale = 1);

// Full standard-module character:
// (q)_inf^{-n} * principal-sum tuples (K = k-1, min kernel) * theta factor with
// linear weight Lambda + sum r_i alpha_i. Anchored at D = 0 on the highest
// weight vector; all exponents are nonnegative integers.
GradedCharacter assemble_character(const LatticeContext& ctx, const HighestWeight& hw,
                                   const Rational& order, bool weight_resolved,
                                   int radius_scale = 1);

// The two-term parafermionic character of L(L1+L2) at n = k = 2.
QSeries special_character_L1L2(const Rational& order, int radius_scale = 1);

}  // namespace qchar
