#pragma once

// Sparse multivariate polynomials with exact scalar coefficients.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

class Poly {
public:
  using Exponents = std::vector<int>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : n_(nvars) {}
  Poly(std::size_t nvars, const Scalar& c) : n_(nvars) {
    if (!c.is_zero()) t_[Exponents(nvars, 0)] = c;
  }

  static Poly monomial(const Exponents& e, const Scalar& c) {
    Poly p(e.size());
    if (!c.is_zero()) p.t_[e] = c;
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e, Scalar(1));
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::map<Exponents, Scalar>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }

  Scalar coeff(const Exponents& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Scalar() : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  /// Smallest exponent of variable i over all terms; -1 for the zero polynomial.
  int min_degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : t_)
      if (d < 0 || e[i] < d) d = e[i];
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    adopt(o);
    for (const auto& [e, c] : o.t_) {
      Scalar& slot = t_[e];
      slot += c;
      if (slot.is_zero()) t_.erase(e);
    }
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(std::max(a.n_, b.n_));
    if (a.n_ != b.n_ && !a.t_.empty() && !b.t_.empty())
      fail("dimension_mismatch", "polynomials in different variable sets");
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        Scalar& slot = r.t_[e];
        slot += ca * cb;
        if (slot.is_zero()) r.t_.erase(e);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Scalar& s, const Poly& p) {
    Poly r(p.n_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.t_) r.t_[e] = s * c;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    return std::lexicographical_compare(a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(),
                                        [](const auto& x, const auto& y) {
                                          if (x.first != y.first) return x.first < y.first;
                                          return x.second < y.second;
                                        });
  }

  Scalar evaluate(const std::vector<Scalar>& at) const {
    require(at.size() == n_, "dimension_mismatch", "evaluation point has wrong length");
    Scalar s;
    for (const auto& [e, c] : t_) {
      Scalar m = c;
      for (std::size_t i = 0; i < n_; ++i)
        if (e[i] != 0) m *= at[i].pow(e[i]);
      s += m;
    }
    return s;
  }

  /// Replace variable i by images[i] (all images share one variable set).
  Poly substitute(const std::vector<Poly>& images) const {
    require(images.size() == n_, "dimension_mismatch", "substitution needs one image per variable");
    std::size_t m = images.empty() ? 0 : images[0].nvars();
    Poly out(m);
    for (const auto& [e, c] : t_) {
      Poly term(m, c);
      for (std::size_t i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) term *= images[i];
      out += term;
    }
    return out;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += c.to_string();
      } else if (c.is_one()) {
        out += mono;
      } else {
        out += "(" + c.to_string() + ")*" + mono;
      }
    }
    return out;
  }

private:
  void adopt(const Poly& o) {
    if (n_ == o.n_ || o.t_.empty()) return;
    require(t_.empty(), "dimension_mismatch", "polynomials in different variable sets");
    n_ = o.n_;
  }

  std::size_t n_ = 0;
  std::map<Exponents, Scalar> t_;
};

} // namespace bethe
