#pragma once

// The degree-one space of the trigonometric holonomy Lie algebra: Bethe and Gaudin
// Hamiltonians, the Weyl group action, and limit subspaces at chart points.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bethe/arrangement.hpp"
#include "bethe/errors.hpp"
#include "bethe/matrix.hpp"
#include "bethe/nested.hpp"
#include "bethe/rootsys.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

/// Coefficients in the basis [t_alpha for alpha in positive_roots()] ++ [tau(h_1) .. tau(h_n)],
/// where h_i is dual to the simple roots.
using HVec = std::vector<Scalar>;

inline std::size_t hdim(const RootSystem& rs) { return rs.positive_roots().size() + rs.rank(); }

inline std::string root_label(const Root& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

inline std::vector<std::string> basis_labels(const RootSystem& rs) {
  std::vector<std::string> out;
  for (const auto& a : rs.positive_roots()) out.push_back("t" + root_label(a));
  for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back("tau(h" + std::to_string(i + 1) + ")");
  return out;
}

inline std::vector<Scalar> to_scalars(const RatVec& h) { return {h.begin(), h.end()}; }

inline Scalar pair(const Root& a, const std::vector<Scalar>& h) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Scalar(a[i]) * h[i];
  return s;
}

inline HVec zero_hvec(const RootSystem& rs) { return HVec(hdim(rs)); }

inline HVec t_vec(const RootSystem& rs, const Root& a) {
  int k = rs.positive_index(a);
  require(k >= 0, "precondition", "t_alpha needs a positive root, got " + root_label(a));
  HVec v = zero_hvec(rs);
  v[static_cast<std::size_t>(k)] = Scalar(1);
  return v;
}

inline HVec tau(const RootSystem& rs, const std::vector<Scalar>& h) {
  require(h.size() == rs.rank(), "dimension_mismatch", "h has wrong length");
  HVec v = zero_hvec(rs);
  const std::size_t P = rs.positive_roots().size();
  for (std::size_t i = 0; i < h.size(); ++i) v[P + i] = h[i];
  return v;
}

inline HVec& axpy(HVec& y, const Scalar& a, const HVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

inline HVec c_phi(const RootSystem& rs) {
  HVec v = zero_hvec(rs);
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) v[k] = Scalar(1);
  return v;
}

/// delta(h) = tau(h) - 1/2 sum alpha(h) t_alpha.
inline HVec delta(const RootSystem& rs, const std::vector<Scalar>& h) {
  HVec v = tau(rs, h);
  const auto& pos = rs.positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k) v[k] -= Scalar::fraction(1, 2) * pair(pos[k], h);
  return v;
}

inline std::vector<Scalar> basis_h(std::size_t n, std::size_t i) {
  std::vector<Scalar> h(n);
  h[i] = Scalar(1);
  return h;
}

/// BH(C, h) = tau(h) - sum_{alpha > 0} u/(u - 1) alpha(h) t_alpha with u = e^alpha(C).
inline HVec bethe_hamiltonian(const RootSystem& rs, const std::vector<Scalar>& C, const std::vector<Scalar>& h) {
  require(C.size() == rs.rank(), "dimension_mismatch", "torus point has wrong length");
  HVec v = tau(rs, h);
  const auto& pos = rs.positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    Scalar u = evaluate_character(pos[k], C);
    require(u != Scalar(1), "non_regular", "e^alpha(C) = 1 for alpha = " + root_label(pos[k]));
    v[k] -= u / (u - Scalar(1)) * pair(pos[k], h);
  }
  return v;
}

/// The same element written as delta(h) - 1/2 sum (u + 1)/(u - 1) alpha(h) t_alpha.
inline HVec bethe_hamiltonian_delta_form(const RootSystem& rs, const std::vector<Scalar>& C,
                                         const std::vector<Scalar>& h) {
  HVec v = delta(rs, h);
  const auto& pos = rs.positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    Scalar u = evaluate_character(pos[k], C);
    require(u != Scalar(1), "non_regular", "e^alpha(C) = 1 for alpha = " + root_label(pos[k]));
    v[k] -= Scalar::fraction(1, 2) * (u + Scalar(1)) / (u - Scalar(1)) * pair(pos[k], h);
  }
  return v;
}

inline ExactMatrix span_of(const RootSystem& rs, const std::vector<HVec>& vs) {
  ExactMatrix m(0, hdim(rs));
  for (const auto& v : vs) m.append_row(v);
  return row_basis(m);
}

/// Q(C): span of BH(C, h_i), returned as an RREF basis.
inline ExactMatrix bethe_subspace(const RootSystem& rs, const std::vector<Scalar>& C) {
  std::vector<HVec> vs;
  for (std::size_t i = 0; i < rs.rank(); ++i) vs.push_back(bethe_hamiltonian(rs, C, basis_h(rs.rank(), i)));
  return span_of(rs, vs);
}

/// H(h, chi) = sum alpha(h)/alpha(chi) t_alpha.
inline HVec gaudin_hamiltonian(const RootSystem& rs, const std::vector<Scalar>& chi, const std::vector<Scalar>& h) {
  HVec v = zero_hvec(rs);
  const auto& pos = rs.positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    Scalar d = pair(pos[k], chi);
    require(!d.is_zero(), "non_regular", "alpha(chi) = 0 for alpha = " + root_label(pos[k]));
    v[k] = pair(pos[k], h) / d;
  }
  return v;
}

inline ExactMatrix gaudin_subspace(const RootSystem& rs, const std::vector<Scalar>& chi) {
  std::vector<HVec> vs;
  for (std::size_t i = 0; i < rs.rank(); ++i) vs.push_back(gaudin_hamiltonian(rs, chi, basis_h(rs.rank(), i)));
  return span_of(rs, vs);
}

/// The two readings of the Weyl group action on tau(h).
enum class WAction {
  FixedH = 1,         // w.tau(h) = tau(h) - sum_{Phi+ ∩ w Phi-} alpha(h) t_alpha
  Contragredient = 2  // w.tau(h) = tau(wh) - sum_{Phi+ ∩ w Phi-} alpha(wh) t_alpha
};

inline constexpr WAction kSelectedWAction = WAction::Contragredient;

inline std::vector<Scalar> act_on_h(const RootSystem& rs, const IntMatrix& w, const std::vector<Scalar>& h) {
  IntMatrix wi = rs.inverse(w);
  std::vector<Scalar> out(rs.rank());
  for (std::size_t k = 0; k < rs.rank(); ++k)
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (wi(j, k) != 0) out[k] += Scalar(wi(j, k)) * h[j];
  return out;
}

/// w.t_alpha = t_{|w alpha|}; tau part per `variant`.
inline HVec w_action(const RootSystem& rs, const IntMatrix& w, const HVec& v, WAction variant = kSelectedWAction) {
  require(v.size() == hdim(rs), "dimension_mismatch", "vector has wrong length");
  const auto& pos = rs.positive_roots();
  const std::size_t P = pos.size();
  HVec out = zero_hvec(rs);
  for (std::size_t k = 0; k < P; ++k) {
    if (v[k].is_zero()) continue;
    Root img = RootSystem::abs_root(RootSystem::apply(w, pos[k]));
    out[static_cast<std::size_t>(rs.positive_index(img))] += v[k];
  }
  std::vector<Scalar> h(v.begin() + static_cast<long>(P), v.end());
  bool any = std::any_of(h.begin(), h.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (!any) return out;
  std::vector<Scalar> hh = variant == WAction::Contragredient ? act_on_h(rs, w, h) : h;
  for (std::size_t i = 0; i < rs.rank(); ++i) out[P + i] += hh[i];
  for (const auto& a : rs.inversion_set(w)) out[static_cast<std::size_t>(rs.positive_index(a))] -= pair(a, hh);
  return out;
}

// ---------------------------------------------------------------------------
// Chart points of the compactification.

/// (w, I, y, S, t): Weyl element as a word in simple reflections, the boundary
/// subset I (0-based, meaning the simple roots w alpha_j), the values y_j = e^{w alpha_j}
/// for j in I, a maximal nested set on the simple roots of Phi_Y (0-based local vertex
/// lists) and chart coordinates t, one per element of S.
struct XPoint {
  std::vector<int> word;
  std::vector<int> I;
  std::vector<Scalar> y;
  std::vector<std::vector<int>> S;
  std::vector<Scalar> t;
};

/// The interior point C of the torus as a chart point.
inline XPoint interior_point(const RootSystem& rs, const std::vector<Scalar>& C) {
  XPoint x;
  for (std::size_t i = 0; i < rs.rank(); ++i) x.I.push_back(static_cast<int>(i));
  x.y = C;
  return x;
}

/// Levi data of a chart point: Phi_I = w(roots supported on I), the values e^alpha(y)
/// on it, and the centralizer Phi_Y. Checks I and y only.
struct LeviData {
  IntMatrix w;
  RootSet phi_I, phi_Y;
  std::map<Root, Scalar> value;  // e^alpha(y) for alpha in Phi_I
};

inline LeviData levi_data(const RootSystem& rs, const std::vector<int>& word, const std::vector<int>& I,
                          const std::vector<Scalar>& y) {
  const std::size_t n = rs.rank();
  LeviData d;
  d.w = rs.word_matrix(word);
  std::set<int> seen;
  for (int j : I) {
    require(j >= 0 && static_cast<std::size_t>(j) < n, "invalid_point", "I contains an index out of range");
    require(seen.insert(j).second, "invalid_point", "I contains a repeated index");
  }
  require(y.size() == I.size(), "invalid_point", "y needs one value per element of I");
  for (const auto& v : y) require(!v.is_zero(), "invalid_point", "y has a zero coordinate");
  for (const auto& b : rs.roots()) {
    bool inside = true;
    Scalar u(1);
    for (std::size_t k = 0; k < n && inside; ++k) {
      if (b[k] == 0) continue;
      auto it = std::find(I.begin(), I.end(), static_cast<int>(k));
      if (it == I.end()) inside = false;
      else u *= y[static_cast<std::size_t>(it - I.begin())].pow(b[k]);
    }
    if (!inside) continue;
    Root a = RootSystem::apply(d.w, b);
    d.phi_I.push_back(a);
    d.value[a] = u;
    if (u == Scalar(1)) d.phi_Y.push_back(a);
  }
  d.phi_I = normalize(d.phi_I);
  d.phi_Y = normalize(d.phi_Y);
  return d;
}

/// Everything derived from an XPoint, validated.
class XPointData {
public:
  XPointData(const RootSystem& rs, const XPoint& x) : x_(x) {
    LeviData L = levi_data(rs, x.word, x.I, x.y);
    w = std::move(L.w);
    phi_I = std::move(L.phi_I);
    phi_Y = std::move(L.phi_Y);
    value = std::move(L.value);
    inversions = rs.inversion_set(w);
    phi_I_pos = positive_part(rs, phi_I);
    phi_Y_pos = positive_part(rs, phi_Y);

    SubsystemChart Y(rs, phi_Y);
    if (Y.rank() > 0) {
      NestedSet S;
      for (const auto& el : x.S) {
        VertexSet m = 0;
        for (int v : el) {
          require(v >= 0 && static_cast<std::size_t>(v) < Y.rank(), "invalid_nested_set",
                  "vertex " + std::to_string(v + 1) + " outside the simple roots of Phi_Y (rank " +
                      std::to_string(Y.rank()) + ")");
          m |= 1u << v;
        }
        S.elements.push_back(m);
      }
      canonical_order(S.elements);
      require(S.elements.size() == Y.rank() && is_nested_family(Y, S.elements), "invalid_nested_set",
              "S is not a maximal nested set of connected subdiagrams of Phi_Y");
      chart.emplace(Y, S);
      require(x.t.size() == Y.rank(), "invalid_point", "t needs one coordinate per element of S");
      t = x.t;
      // reorder t to follow the canonical element order
      std::vector<VertexSet> given;
      for (const auto& el : x.S) {
        VertexSet m = 0;
        for (int v : el) m |= 1u << v;
        given.push_back(m);
      }
      for (std::size_t p = 0; p < chart->size(); ++p) {
        auto it = std::find(given.begin(), given.end(), chart->element(p));
        t[p] = x.t[static_cast<std::size_t>(it - given.begin())];
      }
      require(chart->generic(t), "chart_violation", "r_alpha(t) vanishes for some root of Phi_Y");
    } else {
      require(x.S.empty() && x.t.empty(), "invalid_nested_set", "Phi_Y is empty, so S and t must be empty");
    }
  }

  const XPoint& point() const noexcept { return x_; }
  bool in_phi_I(const Root& a) const { return std::binary_search(phi_I.begin(), phi_I.end(), a); }
  bool in_phi_Y(const Root& a) const { return std::binary_search(phi_Y.begin(), phi_Y.end(), a); }

  IntMatrix w;
  RootSet phi_I, phi_Y;
  std::vector<Root> phi_I_pos, phi_Y_pos, inversions;
  std::map<Root, Scalar> value;  // e^alpha(y) for alpha in Phi_I
  std::optional<NestedChart> chart;
  std::vector<Scalar> t;  // in the canonical element order of the chart

private:
  XPoint x_;
};

/// tau_w^I(h) = tau(h) - sum over (Phi+ ∩ w Phi-) \ Phi_I of alpha(h) t_alpha.
inline HVec tau_w(const RootSystem& rs, const XPointData& d, const std::vector<Scalar>& h) {
  HVec v = tau(rs, h);
  for (const auto& a : d.inversions)
    if (!d.in_phi_I(a)) v[static_cast<std::size_t>(rs.positive_index(a))] -= pair(a, h);
  return v;
}

/// H_i = sum_{alpha in Phi_Y+} alpha(b_i) w_{beta_i,alpha}(t) t_alpha, one per element of S.
inline std::vector<HVec> gaudin_chart_hamiltonians(const RootSystem& rs, const NestedChart& ch,
                                                   const std::vector<Scalar>& t) {
  std::vector<HVec> out;
  const auto& Y = ch.subsystem();
  for (std::size_t p = 0; p < ch.size(); ++p) {
    const std::size_t i = ch.adapted(p), kb = ch.adapted_root_index(p);
    HVec v = zero_hvec(rs);
    for (std::size_t k = 0; k < Y.positive_roots().size(); ++k) {
      long long c = Y.coords()[k][i];
      if (c == 0) continue;
      v[static_cast<std::size_t>(rs.positive_index(Y.positive_roots()[k]))] = Scalar(c) * ch.ratio(kb, k, t);
    }
    out.push_back(v);
  }
  return out;
}

/// Rows of the three pieces of Q(x), before reduction.
struct LimitParts {
  std::vector<HVec> a, b, c;
};

inline LimitParts limit_parts(const RootSystem& rs, const XPointData& d) {
  const std::size_t n = rs.rank();
  const auto& x = d.point();
  LimitParts parts;
  std::vector<Root> wI;
  for (int j : x.I) wI.push_back(RootSystem::apply(d.w, rs.simple_root(static_cast<std::size_t>(j))));

  // (a) h in the annihilator of the simple roots w alpha_j, j in I
  ExactMatrix rows(0, n);
  for (const auto& r : wI) rows.append_row(std::vector<Scalar>(r.begin(), r.end()));
  ExactMatrix ker = wI.empty() ? ExactMatrix::identity(n) : nullspace(rows);
  for (std::size_t i = 0; i < ker.rows(); ++i) parts.a.push_back(tau_w(rs, d, ker.row(i)));

  // (b) h = sum c_j (w alpha_j)^vee with gamma(h) = 0 on the simple roots of Phi_Y
  std::vector<std::vector<Scalar>> cor;
  for (const auto& r : wI) cor.push_back(to_scalars(rs.coroot(r)));
  const RootSet dy = d.chart ? d.chart->subsystem().simple_roots() : RootSet{};
  ExactMatrix cons(0, wI.size());
  for (const auto& g : dy) {
    std::vector<Scalar> row;
    for (const auto& c : cor) row.push_back(pair(g, c));
    cons.append_row(row);
  }
  ExactMatrix cs = wI.empty() ? ExactMatrix(0, 0) : (dy.empty() ? ExactMatrix::identity(wI.size()) : nullspace(cons));
  for (std::size_t i = 0; i < cs.rows(); ++i) {
    std::vector<Scalar> h(n);
    for (std::size_t j = 0; j < wI.size(); ++j)
      for (std::size_t k = 0; k < n; ++k) h[k] += cs(i, j) * cor[j][k];
    HVec v = tau_w(rs, d, h);
    for (const auto& a : d.phi_I_pos) {
      if (d.in_phi_Y(a)) continue;
      const Scalar& u = d.value.at(a);
      v[static_cast<std::size_t>(rs.positive_index(a))] -= u / (u - Scalar(1)) * pair(a, h);
    }
    parts.b.push_back(v);
  }

  // (c) Gaudin chart Hamiltonians of Phi_Y
  if (d.chart) parts.c = gaudin_chart_hamiltonians(rs, *d.chart, d.t);
  return parts;
}

/// Q(x) as an RREF basis.
inline ExactMatrix limit_subspace(const RootSystem& rs, const XPoint& x) {
  XPointData d(rs, x);
  LimitParts p = limit_parts(rs, d);
  std::vector<HVec> all = p.a;
  all.insert(all.end(), p.b.begin(), p.b.end());
  all.insert(all.end(), p.c.begin(), p.c.end());
  return span_of(rs, all);
}

// ---------------------------------------------------------------------------
// Reading the point back from the subspace.

struct RecoveredData {
  std::vector<Root> phi_Y_pos;
  ExactMatrix gaudin;                   // rows with zero tau part
  std::map<Root, Scalar> profile;       // kappa_alpha for alpha outside the span of Phi_Y
};

inline RecoveredData recover_data(const RootSystem& rs, const ExactMatrix& Q) {
  const std::size_t n = rs.rank(), P = rs.positive_roots().size();
  require(Q.cols() == P + n, "shape", "subspace lives in the wrong space");
  require(rank(Q) == n, "shape", "subspace does not have dimension rk");
  // tau columns first
  ExactMatrix m(Q.rows(), P + n);
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Q(i, P + j);
    for (std::size_t k = 0; k < P; ++k) m(i, n + k) = Q(i, k);
  }
  std::vector<std::size_t> piv;
  ExactMatrix e = rref(m, &piv);
  RecoveredData out;
  out.gaudin = ExactMatrix(0, P + n);
  std::vector<bool> in_support(P, false);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] < n) continue;
    HVec v(P + n);
    for (std::size_t k = 0; k < P; ++k) {
      v[k] = e(i, n + k);
      if (!v[k].is_zero()) in_support[k] = true;
    }
    out.gaudin.append_row(v);
  }
  RootSet phiY;
  for (std::size_t k = 0; k < P; ++k)
    if (in_support[k]) {
      out.phi_Y_pos.push_back(rs.positive_roots()[k]);
      phiY.push_back(rs.positive_roots()[k]);
    }
  // tau-rows: the h they carry span the annihilator of Phi_Y
  for (std::size_t k = 0; k < P; ++k) {
    if (in_support[k]) continue;
    const Root& a = rs.positive_roots()[k];
    if (root_rank(phiY, n) == root_rank([&] { auto s = phiY; s.push_back(a); return s; }(), n)) continue;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (piv[i] >= n) continue;
      std::vector<Scalar> h(n);
      for (std::size_t j = 0; j < n; ++j) h[j] = e(i, j);
      Scalar ah = pair(a, h);
      if (ah.is_zero()) continue;
      out.profile[a] = -e(i, n + k) / ah;
      break;
    }
  }
  return out;
}

/// Identity of the underlying point: the Levi data, the inversions outside Phi_I,
/// the values e^alpha(y), and for each irreducible flat of Phi_Y the projective
/// vector (alpha(z))_alpha read through the chart.
inline std::string point_key(const RootSystem& rs, const XPoint& x) {
  XPointData d(rs, x);
  std::string key = "I:";
  for (const auto& a : d.phi_I) key += root_label(a);
  key += "|N:";
  for (const auto& a : d.inversions)
    if (!d.in_phi_I(a)) key += root_label(a);
  key += "|y:";
  for (const auto& a : d.phi_I_pos) key += d.value.at(a).to_string() + ";";
  if (!d.chart) return key;
  const NestedChart& ch = *d.chart;
  const auto& Y = ch.subsystem();
  const std::size_t m = Y.positive_roots().size();
  // irreducible flats of Phi_Y, as sets of subsystem positive-root indices
  std::set<std::vector<std::size_t>> flats;
  for (unsigned mask = 1; mask < (1u << std::min<std::size_t>(m, 20)); ++mask) {
    RootSet gens;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1u) gens.push_back(Y.positive_roots()[k]);
    const std::size_t r = root_rank(gens, rs.rank());
    if (r != gens.size()) continue;  // only independent generating sets
    std::vector<std::size_t> flat;
    RootSet full;
    for (std::size_t k = 0; k < m; ++k) {
      auto g2 = gens;
      g2.push_back(Y.positive_roots()[k]);
      if (root_rank(g2, rs.rank()) == r) {
        flat.push_back(k);
        full.push_back(Y.positive_roots()[k]);
        full.push_back(RootSystem::negate(Y.positive_roots()[k]));
      }
    }
    if (is_irreducible(rs, normalize(full))) flats.insert(flat);
  }
  for (const auto& flat : flats) {
    std::size_t top = flat[0];
    for (std::size_t k : flat)
      if (std::popcount(ch.element(ch.a_s(k))) > std::popcount(ch.element(ch.a_s(top)))) top = k;
    std::vector<Scalar> v;
    for (std::size_t k : flat) v.push_back(ch.ratio(k, top, d.t));
    Scalar lead;
    for (const auto& s : v)
      if (!s.is_zero()) {
        lead = s;
        break;
      }
    key += "|z";
    for (std::size_t i = 0; i < flat.size(); ++i) key += root_label(Y.positive_roots()[flat[i]]) + "=" + (v[i] / lead).to_string();
  }
  return key;
}

/// Incidence matrix of the chains P ⊆ Q in a maximal nested set (elements in canonical
/// order), with k leading torus coordinates: entry (p, q) is 1 when q = p or q strictly
/// contains p. Lower unitriangular.
inline ExactMatrix chain_matrix(const NestedSet& S, std::size_t torus_coords = 0) {
  std::vector<VertexSet> e = S.elements;
  canonical_order(e);
  const std::size_t k = torus_coords, m = e.size();
  ExactMatrix M = ExactMatrix::identity(k + m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (p != q && (e[p] & e[q]) == e[p]) M(k + p, k + q) = Scalar(1);
  return M;
}

} // namespace bethe
