#pragma once

#include <vector>

#include "qchar/rational.hpp"

namespace qchar {

struct LatticeContext;

// A weight of sl(n+1), stored as exact coordinates in the fundamental-weight
// basis. Elements of the root lattice Q are recognized by integrality of the
// alpha-coordinates, never by floating comparisons.
struct WeightVec {
    std::vector<Rational> fund;

    int rank() const { return static_cast<int>(fund.size()); }
    bool operator==(const WeightVec& o) const { return fund == o.fund; }
    bool operator<(const WeightVec& o) const { return fund < o.fund; }
};

// Cartan data for the finite algebra sl(n+1): type A_n Cartan matrix, its
// exact inverse (the Gram matrix of the fundamental weights), and the scalar
// invariants everything downstream keeps asking for. The public API is
// 1-based, matching alpha_i, Lambda_i.
struct LatticeContext {
    explicit LatticeContext(int n);

    int rank;

    int cartan(int l, int m) const;            // A_{lm}
    Rational fund_gram(int i, int j) const;    // <Lambda_i, Lambda_j> = min(i,j) - ij/(n+1)
    int dual_coxeter() const { return rank + 1; }
    int dim_g() const { return (rank + 1) * (rank + 1) - 1; }
    Rational rho_normsq() const;

    WeightVec zero() const;
    WeightVec fundamental(int i) const;
    WeightVec simple_root(int i) const;
    WeightVec rho() const;

    WeightVec from_fund(std::vector<Rational> coords) const;
    WeightVec from_alpha(const std::vector<Rational>& coords) const;
    WeightVec from_alpha_int(const std::vector<long long>& coords) const;
    std::vector<Rational> alpha_coords(const WeightVec& w) const;
    bool in_root_lattice(const WeightVec& w) const;
    bool in_weight_lattice(const WeightVec& w) const;

    Rational inner(const WeightVec& u, const WeightVec& v) const;
    Rational normsq(const WeightVec& u) const { return inner(u, u); }

    WeightVec add(const WeightVec& u, const WeightVec& v) const;
    WeightVec sub(const WeightVec& u, const WeightVec& v) const;
    WeightVec scale(const Rational& c, const WeightVec& u) const;

    void check_rank(const WeightVec& w) const;
};

// B^{st} = min(s,t) for the sl(k) family, 1 <= s,t <= k-1.
long long min_matrix_entry(int s, int t, int k);

// Exact inverse Cartan matrix entry of sl(k): min(s,t) - st/k.
Rational inv_cartan_slk_entry(int s, int t, int k);

// All alpha in Q with (quad_coeff/2)<alpha,alpha> + <alpha,linear> <= bound,
// returned as integer alpha-coordinate vectors in lexicographic order.
// radius_scale inflates the scan box (exhaustiveness self-check hook);
// the admission test itself is always exact.
std::vector<std::vector<long long>> lattice_vectors_by_norm(
    const LatticeContext& ctx, const Rational& quad_coeff, const WeightVec& linear,
    const Rational& bound, int radius_scale = 1);

}  // namespace qchar
