#include "qchar/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qchar {

LatticeContext::LatticeContext(int n) : rank(n) {
    if (n < 1) throw std::domain_error("LatticeContext: rank must be positive");
}

int LatticeContext::cartan(int l, int m) const {
    if (l < 1 || l > rank || m < 1 || m > rank)
        throw std::out_of_range("cartan: index out of range");
    if (l == m) return 2;
    if (l == m + 1 || m == l + 1) return -1;
    return 0;
}

Rational LatticeContext::fund_gram(int i, int j) const {
    if (i < 1 || i > rank || j < 1 || j > rank)
        throw std::out_of_range("fund_gram: index out of range");
    return Rational(std::min(i, j)) - Rational(static_cast<long long>(i) * j, rank + 1);
}

Rational LatticeContext::rho_normsq() const {
    Rational s;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) s += fund_gram(i, j);
    return s;
}

WeightVec LatticeContext::zero() const { return WeightVec{std::vector<Rational>(rank)}; }

WeightVec LatticeContext::fundamental(int i) const {
    if (i < 1 || i > rank) throw std::out_of_range("fundamental: index out of range");
    WeightVec w = zero();
    w.fund[i - 1] = 1;
    return w;
}

WeightVec LatticeContext::simple_root(int i) const {
    if (i < 1 || i > rank) throw std::out_of_range("simple_root: index out of range");
    WeightVec w = zero();
    for (int j = 1; j <= rank; ++j) w.fund[j - 1] = cartan(i, j);
    return w;
}

WeightVec LatticeContext::rho() const {
    WeightVec w = zero();
    for (auto& c : w.fund) c = 1;
    return w;
}

WeightVec LatticeContext::from_fund(std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) != rank)
        throw std::domain_error("from_fund: rank mismatch");
    return WeightVec{std::move(coords)};
}

WeightVec LatticeContext::from_alpha(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != rank)
        throw std::domain_error("from_alpha: rank mismatch");
    WeightVec w = zero();
    for (int j = 1; j <= rank; ++j) {
        Rational f;
        for (int i = 1; i <= rank; ++i) f += coords[i - 1] * Rational(cartan(i, j));
        w.fund[j - 1] = f;
    }
    return w;
}

WeightVec LatticeContext::from_alpha_int(const std::vector<long long>& coords) const {
    std::vector<Rational> r(coords.begin(), coords.end());
    return from_alpha(r);
}

std::vector<Rational> LatticeContext::alpha_coords(const WeightVec& w) const {
    check_rank(w);
    // alpha-coords c solve A c = fund; A^{-1} is the fundamental Gram matrix
    std::vector<Rational> c(rank);
    for (int i = 1; i <= rank; ++i) {
        Rational v;
        for (int j = 1; j <= rank; ++j) v += fund_gram(i, j) * w.fund[j - 1];
        c[i - 1] = v;
    }
    return c;
}

bool LatticeContext::in_root_lattice(const WeightVec& w) const {
    for (const auto& c : alpha_coords(w))
        if (!c.is_integer()) return false;
    return true;
}

bool LatticeContext::in_weight_lattice(const WeightVec& w) const {
    check_rank(w);
    for (const auto& f : w.fund)
        if (!f.is_integer()) return false;
    return true;
}

Rational LatticeContext::inner(const WeightVec& u, const WeightVec& v) const {
    check_rank(u);
    check_rank(v);
    Rational s;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) s += u.fund[i - 1] * fund_gram(i, j) * v.fund[j - 1];
    return s;
}

WeightVec LatticeContext::add(const WeightVec& u, const WeightVec& v) const {
    check_rank(u);
    check_rank(v);
    WeightVec w = u;
    for (int i = 0; i < rank; ++i) w.fund[i] += v.fund[i];
    return w;
}

WeightVec LatticeContext::sub(const WeightVec& u, const WeightVec& v) const {
    check_rank(u);
    check_rank(v);
    WeightVec w = u;
    for (int i = 0; i < rank; ++i) w.fund[i] -= v.fund[i];
    return w;
}

WeightVec LatticeContext::scale(const Rational& c, const WeightVec& u) const {
    check_rank(u);
    WeightVec w = u;
    for (auto& f : w.fund) f *= c;
    return w;
}

void LatticeContext::check_rank(const WeightVec& w) const {
    if (w.rank() != rank) throw std::domain_error("WeightVec: rank mismatch with context");
}

long long min_matrix_entry(int s, int t, int k) {
    if (k < 2 || s < 1 || s > k - 1 || t < 1 || t > k - 1)
        throw std::out_of_range("min_matrix_entry: need 1 <= s,t <= k-1, k >= 2");
    return std::min(s, t);
}

Rational inv_cartan_slk_entry(int s, int t, int k) {
    return Rational(min_matrix_entry(s, t, k)) - Rational(static_cast<long long>(s) * t, k);
}

std::vector<std::vector<long long>> lattice_vectors_by_norm(
    const LatticeContext& ctx, const Rational& quad_coeff, const WeightVec& linear,
    const Rational& bound, int radius_scale) {
    ctx.check_rank(linear);
    if (quad_coeff.sign() <= 0) throw std::domain_error("lattice_vectors_by_norm: quad_coeff must be > 0");
    std::vector<std::vector<long long>> out;

    // (quad/2)<a,a> + <a,mu> = (quad/2)<a + mu/quad, a + mu/quad> - <mu,mu>/(2 quad),
    // so admissible points lie in a ball of radius^2 R2 around -mu/quad.
    Rational R2 = (bound + ctx.normsq(linear) / (Rational(2) * quad_coeff)) * Rational(2) / quad_coeff;
    if (R2.sign() < 0) return out;
    R2 *= Rational(radius_scale) * Rational(radius_scale);

    std::vector<Rational> mu_alpha = ctx.alpha_coords(linear);
    const int n = ctx.rank;
    std::vector<long long> lo(n), hi(n);
    for (int i = 1; i <= n; ++i) {
        // |c_i + mu_i/quad| <= sqrt(R2 <Lambda_i,Lambda_i>), Cauchy-Schwarz on
        // the shifted vector against Lambda_i
        long long s = floor_sqrt(R2 * ctx.fund_gram(i, i)) + 1;
        Rational center = -mu_alpha[i - 1] / quad_coeff;
        lo[i - 1] = (center - Rational(s)).ceil();
        hi[i - 1] = (center + Rational(s)).floor();
    }

    std::vector<long long> c(n);
    auto value_ok = [&](const std::vector<long long>& coords) {
        WeightVec a = ctx.from_alpha_int(coords);
        return quad_coeff / Rational(2) * ctx.normsq(a) + ctx.inner(a, linear) <= bound;
    };
    // lexicographic box scan with exact admission
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (value_ok(c)) out.push_back(c);
            return;
        }
        for (long long v = lo[i]; v <= hi[i]; ++v) {
            c[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace qchar
