#pragma once

// Graded affine Hecke algebra in the normal form sum_w w p_w, with the cross relation
// s_i x_h = x_{s_i h} s_i + t alpha_i(h), and the operators Q_h(q).

#include <map>
#include <string>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/hamiltonians.hpp"
#include "bethe/poly.hpp"
#include "bethe/rootsys.hpp"

namespace bethe {

/// Weyl element index -> polynomial in x_1..x_n, where x_k = x_{h_k}.
struct HeckeElem {
  std::map<std::size_t, Poly> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const HeckeElem&, const HeckeElem&) = default;
};

class HeckeAlgebra {
public:
  static constexpr int kMaxDegree = 4;

  HeckeAlgebra(const RootSystem& rs, Scalar t) : rs_(rs), t_(std::move(t)) {
    require(rs.has_weyl(), "rank_bound", "the Hecke engine needs the Weyl group of " + rs.label());
    const std::size_t n = rs.rank();
    // s_i on variables: x_i -> x_i - sum_k A_ik x_k, others fixed
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Poly> img;
      for (std::size_t a = 0; a < n; ++a) img.push_back(Poly::variable(n, a));
      for (std::size_t k = 0; k < n; ++k) img[i] = img[i] - Scalar(rs.cartan()(i, k)) * Poly::variable(n, k);
      sigma_.push_back(std::move(img));
    }
    const auto& W = rs.weyl();
    for (std::size_t u = 0; u < W.size(); ++u)
      for (std::size_t i = 0; i < n; ++i) right_[{u, i}] = rs.weyl_index(W[u].matrix * rs.simple_reflection(i));
  }

  const RootSystem& root_system() const noexcept { return rs_; }
  const Scalar& t() const noexcept { return t_; }
  std::size_t nvars() const noexcept { return rs_.rank(); }

  HeckeElem zero() const { return {}; }
  HeckeElem scalar(const Scalar& c) const { return poly(Poly(nvars(), c)); }
  HeckeElem poly(const Poly& p) const {
    HeckeElem e;
    if (!p.is_zero()) e.terms[0] = p;
    return e;
  }
  /// x_h for h in coordinates alpha_k(h).
  HeckeElem x(const std::vector<Scalar>& h) const {
    Poly p(nvars());
    for (std::size_t k = 0; k < h.size(); ++k) p += h[k] * Poly::variable(nvars(), k);
    return poly(p);
  }
  HeckeElem group(std::size_t w) const {
    HeckeElem e;
    e.terms[w] = Poly(nvars(), Scalar(1));
    return e;
  }
  HeckeElem simple(std::size_t i) const { return group(rs_.weyl_index(rs_.simple_reflection(i))); }
  HeckeElem reflection(const Root& a) const { return group(rs_.weyl_index(rs_.reflection(a))); }

  HeckeElem add(const HeckeElem& a, const HeckeElem& b) const {
    HeckeElem r = a;
    for (const auto& [w, p] : b.terms) accumulate(r, w, p);
    return r;
  }
  HeckeElem scale(const Scalar& c, const HeckeElem& a) const {
    HeckeElem r;
    for (const auto& [w, p] : a.terms) accumulate(r, w, c * p);
    return r;
  }
  HeckeElem sub(const HeckeElem& a, const HeckeElem& b) const { return add(a, scale(Scalar(-1), b)); }

  /// s_i applied to the variables of p.
  Poly act(std::size_t i, const Poly& p) const { return p.substitute(sigma_[i]); }

  /// p s_i = s_i s_i(p) + D_i(p); D_i(q x_a) = D_i(q) s_i(x_a) + t alpha_i(a) q.
  Poly correction(std::size_t i, const Poly& p) const {
    Poly out(nvars());
    for (const auto& [e, c] : p.terms()) out += c * correction_monomial(i, e);
    return out;
  }

  /// a * s_i.
  HeckeElem right_simple(const HeckeElem& a, std::size_t i) const {
    HeckeElem r;
    for (const auto& [u, p] : a.terms) {
      accumulate(r, right_.at({u, i}), act(i, p));
      accumulate(r, u, correction(i, p));
    }
    return r;
  }

  /// a * w, moving polynomials through the letters of a reduced word of w.
  HeckeElem right_word(HeckeElem a, const std::vector<int>& word) const {
    for (int i : word) a = right_simple(a, static_cast<std::size_t>(i));
    return a;
  }

  HeckeElem mul(const HeckeElem& a, const HeckeElem& b) const {
    HeckeElem r;
    const auto& W = rs_.weyl();
    for (const auto& [v, q] : b.terms) {
      for (const auto& [u, p] : a.terms) {
        // u p v q = u (p v) q
        HeckeElem pv = right_word(poly(p), W[v].word);
        for (const auto& [z, s] : pv.terms) accumulate(r, rs_.weyl_index(W[u].matrix * W[z].matrix), s * q);
      }
    }
    return r;
  }

  HeckeElem commutator(const HeckeElem& a, const HeckeElem& b) const { return sub(mul(a, b), mul(b, a)); }

  std::string to_string(const HeckeElem& a) const {
    if (a.is_zero()) return "0";
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= nvars(); ++k) names.push_back("x" + std::to_string(k));
    std::string s;
    for (const auto& [w, p] : a.terms) {
      std::string word;
      for (int i : rs_.weyl()[w].word) word += "s" + std::to_string(i + 1);
      s += (s.empty() ? "" : " + ") + (word.empty() ? std::string("1") : word) + "*(" + p.to_string(names) + ")";
    }
    return s;
  }

private:
  void accumulate(HeckeElem& r, std::size_t w, const Poly& p) const {
    if (p.is_zero()) return;
    require(p.total_degree() <= kMaxDegree, "degree_cap",
            "Hecke polynomial degree exceeds " + std::to_string(kMaxDegree));
    auto it = r.terms.find(w);
    if (it == r.terms.end()) {
      r.terms.emplace(w, p);
      return;
    }
    it->second += p;
    if (it->second.is_zero()) r.terms.erase(it);
  }

  Poly correction_monomial(std::size_t i, const Poly::Exponents& e) const {
    // peel one variable x_a off the monomial: m = q x_a
    std::size_t a = 0;
    while (a < e.size() && e[a] == 0) ++a;
    if (a == e.size()) return Poly(nvars());
    Poly::Exponents qe = e;
    --qe[a];
    Poly q = Poly::monomial(qe, Scalar(1));
    Poly out = correction_monomial(i, qe) * sigma_[i][a];
    if (a == i) out += t_ * q;
    return out;
  }

  const RootSystem& rs_;
  Scalar t_;
  std::vector<std::vector<Poly>> sigma_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> right_;
};

/// Q_h(q) = x_h + t sum_{alpha > 0} alpha(h) q^alpha/(1 - q^alpha) (s_alpha - 1).
inline HeckeElem bmo_operator(const HeckeAlgebra& H, const std::vector<Scalar>& h, const std::vector<Scalar>& q) {
  const RootSystem& rs = H.root_system();
  HeckeElem r = H.x(h);
  HeckeElem one = H.scalar(Scalar(1));
  for (const auto& a : rs.positive_roots()) {
    Scalar qa = evaluate_character(a, q);
    require(qa != Scalar(1), "non_regular", "q^alpha = 1 for alpha = " + root_label(a));
    Scalar c = H.t() * pair(a, h) * qa / (Scalar(1) - qa);
    if (c.is_zero()) continue;
    r = H.add(r, H.scale(c, H.sub(H.reflection(a), one)));
  }
  return r;
}

/// The algebra receiving the holonomy images: parameter -t.
inline HeckeAlgebra holonomy_target(const RootSystem& rs, const Scalar& t) { return HeckeAlgebra(rs, -t); }

/// t_alpha -> s_alpha - 1, tau(h) -> -t^{-1} x_h.
inline HeckeElem holonomy_to_hecke(const HeckeAlgebra& H, const HVec& v, const Scalar& t) {
  const RootSystem& rs = H.root_system();
  require(!t.is_zero(), "division_by_zero", "holonomy_to_hecke needs t != 0");
  require(v.size() == hdim(rs), "dimension_mismatch", "vector has wrong length");
  const auto& pos = rs.positive_roots();
  HeckeElem r;
  HeckeElem one = H.scalar(Scalar(1));
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (!v[k].is_zero()) r = H.add(r, H.scale(v[k], H.sub(H.reflection(pos[k]), one)));
  std::vector<Scalar> h(v.begin() + static_cast<long>(pos.size()), v.end());
  return H.add(r, H.scale(-Scalar(1) / t, H.x(h)));
}

} // namespace bethe
