#pragma once

// The trigonometric algebra of gl_n in degree one and the map psi into the rational
// holonomy algebra of A_n (points 0..n).

#include <string>
#include <utility>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/hamiltonians.hpp"
#include "bethe/matrix.hpp"
#include "bethe/rootsys.hpp"

namespace bethe {

/// Basis: t_ij for 1 <= i < j <= n (lexicographic), then tau(omega_1) .. tau(omega_n)
/// with omega_k = e_1 + ... + e_k.
class GlTrig {
public:
  explicit GlTrig(std::size_t n) : n_(n) {
    require(n >= 1, "precondition", "gl_n needs n >= 1");
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return pairs_.size() + n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }

  std::size_t t_index(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (pairs_[k] == std::make_pair(i, j)) return k;
    fail("precondition", "no t_" + std::to_string(i) + std::to_string(j));
  }
  std::size_t tau_index(std::size_t k) const { return pairs_.size() + k - 1; }

  /// tau(h) for h given by its diagonal entries e_k(h).
  HVec tau(const std::vector<Scalar>& diag) const {
    HVec v(dim());
    for (std::size_t k = 1; k <= n_; ++k) v[tau_index(k)] = diag[k - 1] - (k < n_ ? diag[k] : Scalar(0));
    return v;
  }

  /// BH(C, h) with C = diag(z_1..z_n), e^{e_i - e_j}(C) = z_i/z_j.
  HVec bethe(const std::vector<Scalar>& z, const std::vector<Scalar>& diag) const {
    require(z.size() == n_ && diag.size() == n_, "dimension_mismatch", "gl_n data has wrong length");
    HVec v = tau(diag);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      auto [i, j] = pairs_[k];
      require(z[i - 1] != z[j - 1] && !z[j - 1].is_zero(), "non_regular", "z has repeated or zero entries");
      Scalar u = z[i - 1] / z[j - 1];
      v[k] -= u / (u - Scalar(1)) * (diag[i - 1] - diag[j - 1]);
    }
    return v;
  }

  /// h = e_k as a diagonal vector.
  std::vector<Scalar> unit(std::size_t k) const {
    std::vector<Scalar> d(n_);
    d[k - 1] = Scalar(1);
    return d;
  }
  /// h = omega_k.
  std::vector<Scalar> omega(std::size_t k) const {
    std::vector<Scalar> d(n_);
    for (std::size_t i = 0; i < k; ++i) d[i] = Scalar(1);
    return d;
  }

  ExactMatrix bethe_subspace(const std::vector<Scalar>& z) const {
    ExactMatrix m(0, dim());
    for (std::size_t k = 1; k <= n_; ++k) m.append_row(bethe(z, unit(k)));
    return row_basis(m);
  }

private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Positive root e_c - e_l (0 <= c < l <= n) of A_n.
inline Root typeA_root(std::size_t n, std::size_t c, std::size_t l) {
  Root a(n, 0);
  for (std::size_t k = c; k < l; ++k) a[k] = 1;
  return a;
}

/// psi: t_ij -> t_ij, tau(omega_k) -> -sum_{l <= k} sum_{c < l} t_cl, into the t-part of A_n.
inline HVec psi_typeA(const GlTrig& g, const RootSystem& an, const HVec& v) {
  const std::size_t n = g.n();
  require(an.rank() == n, "precondition", "psi needs the root system A_n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long expect = i == j ? 2 : (i + 1 == j || j + 1 == i) ? -1 : 0;
      require(an.cartan()(i, j) == expect, "precondition", "psi needs a type A root system, got " + an.label());
    }
  require(v.size() == g.dim(), "dimension_mismatch", "vector is not in the gl_n space");
  HVec out = zero_hvec(an);
  auto slot = [&](std::size_t c, std::size_t l) -> Scalar& {
    return out[static_cast<std::size_t>(an.positive_index(typeA_root(n, c, l)))];
  };
  for (std::size_t k = 0; k < g.pairs().size(); ++k) slot(g.pairs()[k].first, g.pairs()[k].second) += v[k];
  for (std::size_t k = 1; k <= n; ++k) {
    const Scalar& c = v[g.tau_index(k)];
    if (c.is_zero()) continue;
    for (std::size_t l = 1; l <= k; ++l)
      for (std::size_t cc = 0; cc < l; ++cc) slot(cc, l) -= c;
  }
  return out;
}

/// chi = (0, z_1, .., z_n) as a point of A_n: alpha_i(chi) = x_{i-1} - x_i.
inline std::vector<Scalar> typeA_chi(const std::vector<Scalar>& z) {
  std::vector<Scalar> x = {Scalar(0)};
  x.insert(x.end(), z.begin(), z.end());
  std::vector<Scalar> chi;
  for (std::size_t i = 1; i < x.size(); ++i) chi.push_back(x[i - 1] - x[i]);
  return chi;
}

/// RREF of psi(Q(C)) and of G(0, z) for C = diag(z).
inline std::pair<ExactMatrix, ExactMatrix> typeA_comparison(const std::vector<Scalar>& z) {
  const std::size_t n = z.size();
  GlTrig g(n);
  RootSystem an = RootSystem::build("A" + std::to_string(n));
  ExactMatrix img(0, hdim(an));
  for (std::size_t k = 1; k <= n; ++k) img.append_row(psi_typeA(g, an, g.bethe(z, g.unit(k))));
  return {row_basis(img), gaudin_subspace(an, typeA_chi(z))};
}

} // namespace bethe
