#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qchar/lattice.hpp"
#include "qchar/qseries.hpp"

namespace qchar {

// Level-k dominant weight of the two-label shape k0*L0 + kj*Lj. j == 0 means
// the finite part is zero (pure vacuum, kj == 0).
struct HighestWeight {
    int n = 1;
    int k = 1;
    int k0 = 1;
    int j = 0;
    int kj = 0;

    void validate() const;
    bool vacuum() const { return kj == 0; }
    WeightVec finite_part(const LatticeContext& ctx) const;

    // number of tensor slots t <= s carrying Lambda_j, i.e. sum_{t<=s} delta_{i,j_t}
    long long delta_count(int i, int s) const {
        return (kj > 0 && i == j && s > k0) ? s - k0 : 0;
    }

    // the weight with the top tensor slot removed
    HighestWeight dotted() const;
};

// Occupation numbers p_i^(s) of one summand, i = color 1..n, s = charge 1..K,
// together with the dual charges r_i^(u) = sum_{s>=u} p_i^(s) the enumerator
// walks level by level.
struct OccupationTuple {
    int n = 0;
    int K = 0;
    std::vector<std::vector<long long>> dual;  // dual[u-1][i-1] = r_i^(u)

    long long p(int i, int s) const {
        long long hi = dual[s - 1][i - 1];
        long long lo = s < K ? dual[s][i - 1] : 0;
        return hi - lo;
    }
    long long charge_sum(int i) const {  // r_i = sum_s s p_i^(s)
        long long r = 0;
        for (int u = 1; u <= K; ++u) r += dual[u - 1][i - 1];
        return r;
    }
};

// Walks every dual-charge system whose accumulated level cost stays within
// radius, where the level-u cost is <beta_u,beta_u>/2 (beta_u the level-u dual
// charge vector in Q), plus the level-local linear term sum_{u>k0} r_j^(u)
// when linear_hw is given. Costs are nonnegative and levels decrease
// monotonically, so the pruning is exact and the walk terminates. Callers
// whose radius bound covers only the quadratic part pass nullptr and add
// their own linear term via tuple_linear_term.
void enumerate_dual_systems(const LatticeContext& ctx, int K, const HighestWeight* linear_hw,
                            const Rational& radius,
                            const std::function<void(const OccupationTuple&, long long quad_cost,
                                                     long long linear_cost)>& visit);

// sum_{s=k0+1}^{K} (s-k0) p_j^(s) = sum_{u=k0+1}^{K} r_j^(u)
long long tuple_linear_term(const OccupationTuple& t, const HighestWeight& hw);

// prod_{i,s} 1/(q)_{p_i^(s)}, truncated
QSeries tuple_factor_series(const OccupationTuple& t, const Rational& order);

// Principal-subspace fermionic sum: min(s,t) kernel over charges 1..K, with
// the occupied-slot linear term for non-vacuum weights.
QSeries principal_sum(const LatticeContext& ctx, const HighestWeight& hw, int K,
                      const Rational& order, int radius_scale = 1);

// Parafermionic fermionic sum: inverse-Cartan kernel over charges 1..k-1,
// optionally restricted to one weight class mod kQ. The class
// is given by the alpha-coordinates of mu - Lambda, reduced mod k.
QSeries parafermionic_sum(const LatticeContext& ctx, const HighestWeight& hw,
                          const Rational& order,
                          const std::optional<std::vector<long long>>& class_coords = std::nullopt,
                          int radius_scale = 1);
// same, class given as a weight mu in Lambda + Q
QSeries parafermionic_sum_at(const LatticeContext& ctx, const HighestWeight& hw,
                             const Rational& order, const WeightVec& mu, int radius_scale = 1);

// Vacuum character built from particles of charge 1..k together with
// charge-k antiparticles.
QSeries prop01_sum(int n, int k, const Rational& order, int radius_scale = 1);

// RHS of the Durfee rectangle identity at fixed a - b = c.
QSeries durfee_rhs(long long c, const Rational& order, int radius_scale = 1);

// String function through the fermionic formula:
// q^{<L+rho,L+rho>/2(k+h) - <rho,rho>/2h - <L,L>/2k} / (q)_inf^n times the
// class-restricted parafermionic sum. prefactor_out receives the normalization
// exponent when non-null.
QSeries string_function_fermionic(const LatticeContext& ctx, const HighestWeight& hw,
                                  const std::vector<long long>& class_coords,
                                  const Rational& order, Rational* prefactor_out = nullptr);

}  // namespace qchar
