#pragma once

// Degeneration along a curve of interior points: Bethe subspaces Q(C(eps)) with entries
// polynomial in eps, and their limit as eps -> 0, compared with the limit subspace Q(x).

#include <string>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/hamiltonians.hpp"
#include "bethe/matrix.hpp"
#include "bethe/poly.hpp"

namespace bethe {

using EpsRow = std::vector<Poly>;  // univariate in eps

namespace detail {

inline Poly eps_const(const Scalar& c) { return Poly(1, c); }
inline Poly eps() { return Poly::variable(1, 0); }

inline Poly eps_shift_down(const Poly& p, int k) {
  Poly out(1);
  for (const auto& [e, c] : p.terms()) out += Poly::monomial({e[0] - k}, c);
  return out;
}

inline Poly eps_pow(const Poly& p, long long k) {
  Poly r = eps_const(Scalar(1));
  for (long long i = 0; i < k; ++i) r = r * p;
  return r;
}

} // namespace detail

/// Values a_j = (w alpha_j)(chi), j in I, of a direction chi with gamma(chi) equal to the
/// chart values beta(chi(t)) on the simple roots gamma of Phi_Y. Free coordinates get k + 2.
inline std::vector<Scalar> fiber_direction(const RootSystem& rs, const XPointData& d) {
  const auto& x = d.point();
  const std::size_t m = x.I.size();
  std::vector<Scalar> a(m);
  for (std::size_t j = 0; j < m; ++j) a[j] = Scalar(static_cast<long long>(j) + 2);
  if (!d.chart) return a;
  const NestedChart& ch = *d.chart;
  for (const auto& s : d.t) require(!s.is_zero(), "precondition", "path fixtures need interior fiber coordinates");
  auto target = ch.simple_values(d.t);
  const auto& dy = ch.subsystem().simple_roots();
  IntMatrix wi = rs.inverse(d.w);
  ExactMatrix aug(dy.size(), m + 1);
  for (std::size_t g = 0; g < dy.size(); ++g) {
    Root c = RootSystem::apply(wi, dy[g]);
    for (std::size_t j = 0; j < m; ++j) aug(g, j) = Scalar(c[static_cast<std::size_t>(x.I[j])]);
    aug(g, m) = target[g];
  }
  std::vector<std::size_t> piv;
  ExactMatrix e = rref(aug, &piv);
  require(piv.empty() || piv.back() < m, "precondition", "no direction with the requested chart values");
  std::vector<bool> is_pivot(m, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Scalar v = e(r, m);
    for (std::size_t j = 0; j < m; ++j)
      if (!is_pivot[j]) v -= e(r, j) * a[j];
    a[piv[r]] = v;
  }
  return a;
}

/// Rows BH(C(eps), h_i) times a common denominator, where e^{w alpha_j}(C(eps)) is eps for
/// j outside I and y_j (1 + eps a_j) for j in I.
inline std::vector<EpsRow> bethe_rows_along(const RootSystem& rs, const XPointData& d, const std::vector<Scalar>& a) {
  using namespace detail;
  const auto& x = d.point();
  const std::size_t n = rs.rank();
  const auto& pos = rs.positive_roots();
  std::vector<Poly> coord(n, eps());
  for (std::size_t j = 0; j < x.I.size(); ++j)
    coord[static_cast<std::size_t>(x.I[j])] = eps_const(x.y[j]) * (eps_const(Scalar(1)) + eps_const(a[j]) * eps());
  IntMatrix wi = rs.inverse(d.w);
  std::vector<Poly> num, den;  // u_alpha = num/den, den of u/(u - 1) is num - den
  for (const auto& al : pos) {
    Root b = RootSystem::apply(wi, al);
    Poly N = eps_const(Scalar(1)), D = eps_const(Scalar(1));
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] > 0) N = N * eps_pow(coord[j], b[j]);
      if (b[j] < 0) D = D * eps_pow(coord[j], -b[j]);
    }
    require(N != D, "degenerate_path", "e^alpha is identically 1 along the path for " + root_label(al));
    num.push_back(N);
    den.push_back(N - D);
  }
  Poly all = eps_const(Scalar(1));
  for (const auto& q : den) all = all * q;
  std::vector<Poly> others(pos.size(), eps_const(Scalar(1)));
  for (std::size_t k = 0; k < pos.size(); ++k)
    for (std::size_t l = 0; l < pos.size(); ++l)
      if (l != k) others[k] = others[k] * den[l];
  std::vector<EpsRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    EpsRow r(hdim(rs), Poly(1));
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (pos[k][i] != 0) r[k] = eps_const(Scalar(-pos[k][i])) * num[k] * others[k];
    r[pos.size() + i] = all;
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Limit at eps = 0 of the span of polynomial rows (full rank for small eps != 0):
/// normalize each row by its eps-valuation, and while the leading vectors are dependent,
/// replace one row by the dependent combination, which has higher valuation.
inline ExactMatrix limit_of_span(std::vector<EpsRow> rows) {
  using namespace detail;
  const std::size_t m = rows.size();
  const std::size_t cols = m ? rows[0].size() : 0;
  for (int step = 0; step < 100000; ++step) {
    ExactMatrix lead(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
      int v = -1;
      for (const auto& p : rows[i]) {
        int d = p.min_degree_in(0);
        if (d >= 0 && (v < 0 || d < v)) v = d;
      }
      require(v >= 0, "degenerate_path", "rows become dependent along the whole path");
      for (auto& p : rows[i]) p = eps_shift_down(p, v);
      for (std::size_t c = 0; c < cols; ++c) lead(i, c) = rows[i][c].coeff({0});
    }
    if (rank(lead) == m) return row_basis(lead);
    ExactMatrix dep = nullspace(lead.transpose());
    std::size_t pivot = m;
    for (std::size_t i = 0; i < m; ++i)
      if (!dep(0, i).is_zero()) pivot = i;
    EpsRow combo(cols, Poly(1));
    for (std::size_t i = 0; i < m; ++i)
      if (!dep(0, i).is_zero())
        for (std::size_t c = 0; c < cols; ++c) combo[c] += dep(0, i) * rows[i][c];
    rows[pivot] = std::move(combo);
  }
  fail("degenerate_path", "valuation elimination did not terminate");
}

struct PathLimit {
  ExactMatrix limit, expected;
  bool converged = false;
};

/// Limit of Q(C(eps)) along the path towards x, with Q(x) for comparison.
inline PathLimit epsilon_path_limit(const RootSystem& rs, const XPoint& x) {
  XPointData d(rs, x);
  PathLimit out;
  out.limit = limit_of_span(bethe_rows_along(rs, d, fiber_direction(rs, d)));
  out.expected = limit_subspace(rs, x);
  out.converged = out.limit == out.expected;
  return out;
}

struct PathFixture {
  std::string name, type;
  XPoint point;
};

inline std::vector<PathFixture> path_fixtures() {
  std::vector<PathFixture> f;
  // identity fiber of A2 in the chart {{12},{1}}
  f.push_back({"A2 identity fiber", "A2", XPoint{{}, {0, 1}, {Scalar(1), Scalar(1)}, {{0, 1}, {0}}, {Scalar(1), Scalar::fraction(2, 3)}}});
  // B2 point e^{a1} = 1, e^{a2} = -1 on the two long-root subtori
  f.push_back({"B2 long-root point", "B2", XPoint{{}, {0, 1}, {Scalar(1), Scalar(-1)}, {{0}, {1}}, {Scalar(2), Scalar(-3)}}});
  // A2 boundary: chamber s_1, I = {2}, on the subtorus e^{a1+a2} = 1
  f.push_back({"A2 boundary I={2}, w=s1", "A2", XPoint{{0}, {1}, {Scalar(1)}, {{0}}, {Scalar(2)}}});
  return f;
}

} // namespace bethe
