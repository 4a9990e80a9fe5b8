#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchar/bigint.hpp"
#include "qchar/fermionic.hpp"
#include "qchar/lattice.hpp"
#include "qchar/qseries.hpp"

namespace qchar {

// A weight of L(Lambda^) split as finite part + depth below the highest
// weight (the -delta coefficient; equals the D-eigenvalue, D anchored at 0
// on the highest weight vector).
struct AffineWeight {
    WeightVec finite;
    long long depth = 0;
};

// Brute-force weight multiplicities of L(Lambda^) for A_n^(1) at level k,
// computed by the affine Freudenthal recursion in exact arithmetic. The
// finite highest weight may be any dominant integral weight with
// <Lambda, theta> <= k; it is not limited to the two-label k0/kj shape.
struct MultTable {
    int n = 0;
    int k = 0;
    WeightVec lambda;  // finite part of the highest weight
    long long max_depth = 0;
    // key: (fundamental coords of the finite weight, depth) -> multiplicity > 0
    std::map<std::pair<std::vector<long long>, long long>, BigInt> entries;

    BigInt mult(const LatticeContext& ctx, const WeightVec& mu, long long depth) const;
};

// shuffle_seed permutes the processing order of weights that have no mutual
// dependency (equal height within a depth); exact arithmetic makes the result
// bitwise identical for every seed, and tests assert that.
MultTable freudenthal_table(const LatticeContext& ctx, int k, const WeightVec& lambda,
                            long long max_depth, unsigned shuffle_seed = 0);

// Tr q^D over the mu-weight spaces of L(Lambda^): sum_d mult(mu,d) q^d,
// exact to order max_depth. Zero series when mu is not in Lambda + Q.
QSeries weight_trace(const LatticeContext& ctx, const MultTable& table, const WeightVec& mu);

// q^{<L+rho,L+rho>/2(k+h) - <rho,rho>/2h - <mu,mu>/2k} * weight_trace
QSeries string_function(const LatticeContext& ctx, const MultTable& table, const WeightVec& mu);

// canonical representative of the class Lambda + sum c_i alpha_i mod kQ,
// alpha-coordinates of mu - Lambda reduced into {0..k-1}
WeightVec class_representative(const LatticeContext& ctx, const MultTable& table,
                               const std::vector<long long>& class_coords);

// Tr q^{D - D^h} over the parafermionic space, one class (5.9 inverted) or
// the total over all k^n classes of Q/kQ. Coefficients are checked to be
// nonnegative; a violation throws (wrong representative or a bug).
QSeries parafermionic_trace(const LatticeContext& ctx, const MultTable& table,
                            const std::optional<std::vector<long long>>& class_coords);

// disk cache; any mismatch or corruption falls back to recomputation
std::string mult_table_cache_name(int n, int k, const WeightVec& lambda, long long max_depth);
void save_mult_table(const LatticeContext& ctx, const MultTable& table, const std::string& dir);
std::optional<MultTable> load_mult_table(const LatticeContext& ctx, int k,
                                         const WeightVec& lambda, long long max_depth,
                                         const std::string& dir);
MultTable freudenthal_table_cached(const LatticeContext& ctx, int k, const WeightVec& lambda,
                                   long long max_depth, const std::string& cache_dir);

}  // namespace qchar
