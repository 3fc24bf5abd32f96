#pragma once

// sl_2 acting on (C^2)^{⊗n}: Casimir tensors, trigonometric Gaudin operators, and the
// image of the gl_n trigonometric algebra.

#include <vector>

#include "bethe/errors.hpp"
#include "bethe/matrix.hpp"
#include "bethe/typea.hpp"

namespace bethe {

using SpinOperator = ExactMatrix;

namespace spin {

// basis v+ (index 0), v- (index 1)
inline ExactMatrix e() { return {{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}}; }
inline ExactMatrix f() { return {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}}; }
inline ExactMatrix h() { return {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}; }

inline ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// x in slot i and y in slot j (1-based, i != j) of n slots.
inline SpinOperator insert(const ExactMatrix& x, std::size_t i, const ExactMatrix& y, std::size_t j, std::size_t n) {
  require(i >= 1 && i <= n && j >= 1 && j <= n && i != j, "precondition", "bad tensor slots");
  ExactMatrix out = ExactMatrix::identity(1);
  for (std::size_t s = 1; s <= n; ++s) out = kron(out, s == i ? x : s == j ? y : ExactMatrix::identity(2));
  return out;
}

inline SpinOperator insert(const ExactMatrix& x, std::size_t i, std::size_t n) {
  require(i >= 1 && i <= n, "precondition", "bad tensor slot");
  ExactMatrix out = ExactMatrix::identity(1);
  for (std::size_t s = 1; s <= n; ++s) out = kron(out, s == i ? x : ExactMatrix::identity(2));
  return out;
}

inline SpinOperator omega_plus(std::size_t i, std::size_t j, std::size_t n) { return insert(e(), i, f(), j, n); }
inline SpinOperator omega_minus(std::size_t i, std::size_t j, std::size_t n) { return insert(f(), i, e(), j, n); }
inline SpinOperator omega_zero(std::size_t i, std::size_t j, std::size_t n) {
  return Scalar::fraction(1, 2) * insert(h(), i, h(), j, n);
}
inline SpinOperator omega(std::size_t i, std::size_t j, std::size_t n) {
  return omega_plus(i, j, n) + omega_minus(i, j, n) + omega_zero(i, j, n);
}

} // namespace spin

struct CasimirSplit {
  ExactMatrix omega, plus, zero, minus;
};

inline CasimirSplit casimir_split() {
  return {spin::omega(1, 2, 2), spin::omega_plus(1, 2, 2), spin::omega_zero(1, 2, 2), spin::omega_minus(1, 2, 2)};
}

/// H_i = theta^{(i)}/z_i + sum_{j != i} Omega^{ij}/(z_i - z_j) - sum_{j != i} Omega_-^{ij}/z_i,
/// with theta = theta_coeff * h.
inline std::vector<SpinOperator> trig_gaudin_ops(const std::vector<Scalar>& z, const Scalar& theta_coeff) {
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    require(!z[i].is_zero(), "non_regular", "z has a zero entry");
    for (std::size_t j = i + 1; j < n; ++j) require(z[i] != z[j], "non_regular", "z has repeated entries");
  }
  std::vector<SpinOperator> out;
  for (std::size_t i = 1; i <= n; ++i) {
    SpinOperator H = (theta_coeff / z[i - 1]) * spin::insert(spin::h(), i, n);
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      H = H + (Scalar(1) / (z[i - 1] - z[j - 1])) * spin::omega(i, j, n);
      H = H - (Scalar(1) / z[i - 1]) * spin::omega_minus(i, j, n);
    }
    out.push_back(std::move(H));
  }
  return out;
}

/// t_ij -> Omega^{ij}; tau(omega_k) -> -sum_{l <= k} sum_{1 <= c < l} Omega^{cl}
/// + sum_{i <= k} sum_{j != i} Omega_-^{ij} - sum_{m <= k} theta^{(m)}.
inline SpinOperator holonomy_image_typeA(const GlTrig& g, const HVec& v, const Scalar& theta_coeff) {
  const std::size_t n = g.n();
  require(v.size() == g.dim(), "dimension_mismatch", "vector is not in the gl_n space");
  const std::size_t D = std::size_t{1} << n;
  SpinOperator out(D, D);
  for (std::size_t k = 0; k < g.pairs().size(); ++k)
    if (!v[k].is_zero()) out = out + v[k] * spin::omega(g.pairs()[k].first, g.pairs()[k].second, n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Scalar& c = v[g.tau_index(k)];
    if (c.is_zero()) continue;
    SpinOperator img(D, D);
    for (std::size_t l = 1; l <= k; ++l)
      for (std::size_t cc = 1; cc < l; ++cc) img = img - spin::omega(cc, l, n);
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (j != i) img = img + spin::omega_minus(i, j, n);
    for (std::size_t m = 1; m <= k; ++m) img = img - theta_coeff * spin::insert(spin::h(), m, n);
    out = out + c * img;
  }
  return out;
}

inline SpinOperator commutator(const SpinOperator& a, const SpinOperator& b) { return a * b - b * a; }

} // namespace bethe
