#pragma once

// Nested sets of connected Coxeter subdiagrams, adapted roots, and the chart
// functions w_{beta,alpha} on the charts of the linear wonderful model.

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/matrix.hpp"
#include "bethe/rootsys.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

using VertexSet = unsigned;  // bitmask over the simple roots of the subsystem

/// A root subsystem with its simple roots (in global positive-root order) and the
/// coordinates of its positive roots in that simple system.
class SubsystemChart {
public:
  SubsystemChart() = default;
  SubsystemChart(const RootSystem& rs, const RootSet& phi) : n_(rs.rank()) {
    simple_ = simple_system(rs, phi);
    positive_ = positive_part(rs, phi);
    require(simple_.size() <= 16, "rank_bound", "subsystem too large for vertex masks");
    const std::size_t m = simple_.size();
    adj_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && rs.inner(simple_[i], simple_[j]) != 0) adj_[i] |= 1u << j;
    for (const auto& a : positive_) coords_.push_back(local_coords(a));
  }

  std::size_t rank() const noexcept { return simple_.size(); }
  const RootSet& simple_roots() const noexcept { return simple_; }
  const RootSet& positive_roots() const noexcept { return positive_; }
  /// Coordinates of positive_roots()[k] in the simple roots of the subsystem.
  const std::vector<IntVec>& coords() const noexcept { return coords_; }
  VertexSet all() const noexcept { return simple_.empty() ? 0u : (1u << simple_.size()) - 1u; }
  VertexSet neighbours(std::size_t v) const { return adj_[v]; }

  VertexSet support(std::size_t k) const {
    VertexSet s = 0;
    for (std::size_t j = 0; j < coords_[k].size(); ++j)
      if (coords_[k][j] != 0) s |= 1u << j;
    return s;
  }

  IntVec local_coords(const Root& a) const {
    const std::size_t m = simple_.size();
    ExactMatrix aug(n_, m + 1);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m; ++j) aug(i, j) = Scalar(simple_[j][i]);
      aug(i, m) = Scalar(a[i]);
    }
    std::vector<std::size_t> piv;
    ExactMatrix e = rref(aug, &piv);
    require(piv.size() == m && (m == 0 || piv.back() < m), "precondition", "root outside the subsystem span");
    IntVec c(m);
    for (std::size_t j = 0; j < m; ++j) {
      Rational q = e(j, m).rational();
      require(q.get_den() == 1, "precondition", "root not integral in the subsystem");
      c[j] = q.get_num().get_si();
    }
    return c;
  }

  /// Connected components of the subdiagram on `s`.
  std::vector<VertexSet> components(VertexSet s) const {
    std::vector<VertexSet> out;
    while (s) {
      VertexSet comp = s & (~s + 1u), grow = comp;
      while (grow) {
        VertexSet next = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v)
          if (grow >> v & 1u) next |= adj_[v];
        next &= s & ~comp;
        comp |= next;
        grow = next;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  }

  bool connected(VertexSet s) const { return s && components(s).size() == 1; }
  bool adjacent(VertexSet a, VertexSet b) const {
    for (std::size_t v = 0; v < adj_.size(); ++v)
      if ((a >> v & 1u) && (adj_[v] & b)) return true;
    return false;
  }

private:
  std::size_t n_ = 0;
  RootSet simple_, positive_;
  std::vector<VertexSet> adj_;
  std::vector<IntVec> coords_;
};

/// Elements ordered by size (descending) then mask; for a maximal nested set the
/// first element of each component is the whole component.
struct NestedSet {
  std::vector<VertexSet> elements;
  friend bool operator==(const NestedSet&, const NestedSet&) = default;
  friend auto operator<=>(const NestedSet&, const NestedSet&) = default;
};

inline void canonical_order(std::vector<VertexSet>& e) {
  std::sort(e.begin(), e.end(), [](VertexSet a, VertexSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
}

/// Two connected subdiagrams are compatible when nested, or disjoint with no edge between them.
inline bool compatible(const SubsystemChart& Y, VertexSet a, VertexSet b) {
  if ((a & b) == a || (a & b) == b) return true;
  return (a & b) == 0 && !Y.adjacent(a, b);
}

inline bool is_nested_family(const SubsystemChart& Y, const std::vector<VertexSet>& f) {
  for (auto a : f)
    if (!Y.connected(a)) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!compatible(Y, f[i], f[j])) return false;
  return true;
}

namespace detail {

inline std::vector<std::vector<VertexSet>> nested_of_connected(const SubsystemChart& Y, VertexSet c);

inline std::vector<std::vector<VertexSet>> nested_of_set(const SubsystemChart& Y, VertexSet s) {
  std::vector<std::vector<VertexSet>> acc{{}};
  for (VertexSet comp : Y.components(s)) {
    auto parts = nested_of_connected(Y, comp);
    std::vector<std::vector<VertexSet>> next;
    for (const auto& a : acc)
      for (const auto& p : parts) {
        auto u = a;
        u.insert(u.end(), p.begin(), p.end());
        next.push_back(std::move(u));
      }
    acc = std::move(next);
  }
  return acc;
}

inline std::vector<std::vector<VertexSet>> nested_of_connected(const SubsystemChart& Y, VertexSet c) {
  std::vector<std::vector<VertexSet>> out;
  for (std::size_t v = 0; v < 32; ++v) {
    if (!(c >> v & 1u)) continue;
    for (auto rest : nested_of_set(Y, c & ~(1u << v))) {
      rest.push_back(c);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

} // namespace detail

/// All maximal nested sets, by recursive removal of one vertex per connected piece.
inline std::vector<NestedSet> maximal_nested_sets(const SubsystemChart& Y) {
  std::set<NestedSet> seen;
  for (auto e : detail::nested_of_set(Y, Y.all())) {
    canonical_order(e);
    seen.insert(NestedSet{e});
  }
  return {seen.begin(), seen.end()};
}

/// Derived data of a maximal nested set: partial order, adapted roots, chart functions.
class NestedChart {
public:
  NestedChart(SubsystemChart Y, NestedSet S) : Y_(std::move(Y)), S_(std::move(S)) {
    const SubsystemChart& Yc = Y_;
    canonical_order(S_.elements);
    const auto& e = S_.elements;
    require(e.size() == Yc.rank(), "precondition", "nested set is not maximal");
    require(is_nested_family(Yc, e), "precondition", "family is not nested");
    adapted_.assign(e.size(), 0);
    for (std::size_t p = 0; p < e.size(); ++p) {
      VertexSet rest = e[p];
      for (std::size_t q = 0; q < e.size(); ++q)
        if (q != p && (e[q] & e[p]) == e[q]) rest &= ~e[q];
      require(std::popcount(rest) >= 1, "precondition", "nested set is not maximal");
      adapted_[p] = static_cast<std::size_t>(std::countr_zero(rest));
    }
    element_of_vertex_.assign(Yc.rank(), 0);
    for (std::size_t v = 0; v < Yc.rank(); ++v) element_of_vertex_[v] = minimal_containing(1u << v);
  }

  const NestedSet& nested_set() const noexcept { return S_; }
  const SubsystemChart& subsystem() const noexcept { return Y_; }
  std::size_t size() const noexcept { return S_.elements.size(); }
  VertexSet element(std::size_t p) const { return S_.elements[p]; }
  /// Local index of the simple root adapted to element p.
  std::size_t adapted(std::size_t p) const { return adapted_[p]; }

  /// Index of the minimal element containing `s`.
  std::size_t minimal_containing(VertexSet s) const {
    std::size_t best = S_.elements.size();
    for (std::size_t p = 0; p < S_.elements.size(); ++p)
      if ((S_.elements[p] & s) == s &&
          (best == S_.elements.size() || std::popcount(S_.elements[p]) < std::popcount(S_.elements[best])))
        best = p;
    require(best < S_.elements.size(), "precondition", "no element of the nested set contains the support");
    return best;
  }

  /// A_S of the k-th positive root of the subsystem.
  std::size_t a_s(std::size_t k) const { return minimal_containing(Y_.support(k)); }

  /// Elements Q with A ⊆ Q ⊊ B (as indices).
  std::vector<std::size_t> between(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    VertexSet A = element(a), B = element(b);
    for (std::size_t q = 0; q < size(); ++q) {
      VertexSet Q = element(q);
      if ((A & Q) == A && (Q & B) == Q && Q != B) out.push_back(q);
    }
    return out;
  }

  /// Elements strictly containing p, listed from the smallest.
  std::vector<std::size_t> ancestors(std::size_t p) const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < size(); ++q)
      if (q != p && (element(p) & element(q)) == element(p)) out.push_back(q);
    std::sort(out.begin(), out.end(),
              [&](std::size_t a, std::size_t b) { return std::popcount(element(a)) < std::popcount(element(b)); });
    return out;
  }

  /// r_alpha(t) = sum_j c_j prod_{A(beta_j) ⊆ Q ⊊ A(alpha)} t_Q for the k-th positive root.
  Scalar r(std::size_t k, const std::vector<Scalar>& t) const {
    const IntVec& c = Y_.coords()[k];
    const std::size_t top = a_s(k);
    Scalar s;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      Scalar term(c[j]);
      for (std::size_t q : between(element_of_vertex_[j], top)) term *= t[q];
      s += term;
    }
    return s;
  }

  /// w_{beta,alpha}(t) for positive roots given by subsystem indices kb, ka.
  Scalar ratio(std::size_t kb, std::size_t ka, const std::vector<Scalar>& t) const {
    check_t(t);
    const std::size_t Ab = a_s(kb), Aa = a_s(ka);
    require((element(Ab) & element(Aa)) == element(Ab), "precondition", "A_S(beta) is not below A_S(alpha)");
    Scalar ra = r(ka, t);
    require(!ra.is_zero(), "chart_violation", "r_alpha vanishes at the chart point");
    Scalar v = r(kb, t) / ra;
    for (std::size_t q : between(Ab, Aa)) v *= t[q];
    return v;
  }

  /// True iff r_alpha(t) != 0 for every positive root.
  bool generic(const std::vector<Scalar>& t) const {
    check_t(t);
    for (std::size_t k = 0; k < Y_.positive_roots().size(); ++k)
      if (r(k, t).is_zero()) return false;
    return true;
  }

  /// beta_j(chi(t)) = prod_{P ⊇ A(beta_j)} t_P, for interior t.
  std::vector<Scalar> simple_values(const std::vector<Scalar>& t) const {
    check_t(t);
    std::vector<Scalar> v(Y_.rank(), Scalar(1));
    for (std::size_t j = 0; j < Y_.rank(); ++j) {
      std::size_t p = element_of_vertex_[j];
      v[j] = t[p];
      for (std::size_t q : ancestors(p)) v[j] *= t[q];
    }
    return v;
  }

  /// Index (into the subsystem positive roots) of the simple root adapted to p.
  std::size_t adapted_root_index(std::size_t p) const {
    IntVec e(Y_.rank(), 0);
    e[adapted_[p]] = 1;
    const auto& cs = Y_.coords();
    return static_cast<std::size_t>(std::find(cs.begin(), cs.end(), e) - cs.begin());
  }

private:
  void check_t(const std::vector<Scalar>& t) const {
    require(t.size() == size(), "dimension_mismatch",
            "chart needs " + std::to_string(size()) + " coordinates, got " + std::to_string(t.size()));
  }

  SubsystemChart Y_;
  NestedSet S_;
  std::vector<std::size_t> adapted_;
  std::vector<std::size_t> element_of_vertex_;
};

/// Vertex sets as 1-based index lists, for reports.
inline std::vector<int> vertex_list(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if (s >> v & 1u) out.push_back(v + 1);
  return out;
}

} // namespace bethe
