#pragma once

// Exact scalars: rationals (GMP) and elements of the cyclotomic field Q(zeta_N).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bethe/errors.hpp"

namespace bethe {

using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
inline std::vector<long long> cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = cyclotomic_polynomial(d);
    // exact division by a monic polynomial
    const std::size_t dq = q.size() - 1;
    std::vector<long long> quot(p.size() - dq, 0);
    for (std::size_t k = p.size(); k-- > dq;) {
      long long c = p[k];
      quot[k - dq] = c;
      for (std::size_t j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
    }
    p = std::move(quot);
  }
  return p;
}

struct CyclotomicField {
  int order = 1;
  int degree = 1;                 // Euler phi of order
  std::vector<Rational> modulus;  // monic, size degree + 1
};

} // namespace detail

/// Interned field data; the returned reference stays valid for the process lifetime.
inline const detail::CyclotomicField& cyclotomic_field(int order) {
  require(order >= 1, "precondition", "field order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<detail::CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) {
    auto f = std::make_unique<detail::CyclotomicField>();
    f->order = order;
    for (long long c : detail::cyclotomic_polynomial(order)) f->modulus.emplace_back(make_rational(c));
    f->degree = static_cast<int>(f->modulus.size()) - 1;
    slot = std::move(f);
  }
  return *slot;
}

/// Element of Q(zeta_N) stored as a polynomial in z = zeta_N of degree < phi(N).
///
/// A scalar without a field is a plain rational and combines with any field.
/// Coefficients never carry trailing zeros, so equality is coefficient comparison.
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : Scalar(make_rational(v)) {}        // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(make_rational(v)) {}       // NOLINT(google-explicit-constructor)
  Scalar(long long v) : Scalar(make_rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational q) {                               // NOLINT(google-explicit-constructor)
    q.canonicalize();
    if (q != 0) c_.push_back(std::move(q));
  }

  static Scalar fraction(long long num, long long den) { return Scalar(make_rational(num, den)); }

  /// zeta_N^k. Orders 1 and 2 give rationals.
  static Scalar root_of_unity(long long k, int order) {
    require(order >= 1, "precondition", "field order must be positive");
    long long e = ((k % order) + order) % order;
    if (order <= 2) return Scalar(e == 0 ? 1 : -1);
    const auto& f = cyclotomic_field(order);
    std::vector<Rational> p(static_cast<std::size_t>(e) + 1);
    p[static_cast<std::size_t>(e)] = 1;
    return Scalar(&f, std::move(p));
  }

  int field_order() const noexcept { return field_ ? field_->order : 0; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_rational() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  Rational rational() const {
    require(is_rational(), "precondition", "scalar is not rational: " + to_string());
    return c_.empty() ? Rational(0) : c_[0];
  }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    const auto* f = common_field(a, b);
    std::vector<Rational> p(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) p[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) p[i] += b.c_[i];
    return Scalar(f, std::move(p));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto* f = common_field(a, b);
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return Scalar(f, std::move(p));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    require(!is_zero(), "division_by_zero", "division by zero");
    if (is_rational()) return Scalar(Rational(1) / c_[0]);
    // Solve (multiplication by *this) x = 1 in the power basis.
    const int d = field_->degree;
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(d) + 1));
    Scalar basis = Scalar(1);
    const Scalar z = root_of_unity(1, field_->order);
    for (int j = 0; j < d; ++j) {
      Scalar col = *this * basis;
      for (std::size_t i = 0; i < col.c_.size(); ++i) m[i][static_cast<std::size_t>(j)] = col.c_[i];
      basis = basis * z;
    }
    m[0][static_cast<std::size_t>(d)] = 1;
    solve_in_place(m);
    std::vector<Rational> x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
    return Scalar(field_, std::move(x));
  }

  Scalar pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.c_.size() > 1 && b.c_.size() > 1 && a.field_ != b.field_) return false;
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for deterministic sorting.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
      Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
      if (x != y) return x < y;
    }
    return false;
  }

  /// "c0 + c1*z + c2*z^2" with rational coefficients "p/q"; zero prints as "0".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Rational mag = abs(c_[k]);
      bool neg = c_[k] < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

  /// Inverse of to_string(). `order` is the field that z refers to.
  static Scalar parse(std::string_view text, int order) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    require(!s.empty(), "parse_error", "empty scalar string");
    Scalar total;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        fail("parse_error", "expected '+' or '-' in scalar '" + std::string(text) + "'");
      }
      std::size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      total += Scalar(sign) * parse_term(s.substr(pos, end - pos), order, text);
      pos = end;
    }
    return total;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
  Scalar(const detail::CyclotomicField* f, std::vector<Rational> p) : field_(f), c_(std::move(p)) {
    if (field_ && static_cast<int>(c_.size()) > field_->degree) reduce();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static const detail::CyclotomicField* common_field(const Scalar& a, const Scalar& b) {
    if (!a.field_ || a.c_.size() <= 1) return b.field_ ? b.field_ : a.field_;
    if (!b.field_ || b.c_.size() <= 1 || a.field_ == b.field_) return a.field_;
    fail("field_mismatch", "scalars from Q(zeta_" + std::to_string(a.field_->order) + ") and Q(zeta_" +
                               std::to_string(b.field_->order) + ") cannot be combined");
  }

  void reduce() {
    const auto& m = field_->modulus;
    const std::size_t d = static_cast<std::size_t>(field_->degree);
    for (std::size_t k = c_.size(); k-- > d;) {
      if (c_[k] == 0) continue;
      Rational c = c_[k];
      for (std::size_t j = 0; j <= d; ++j) c_[k - d + j] -= c * m[j];
    }
    c_.resize(d);
  }

  static void solve_in_place(std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      require(piv < n, "division_by_zero", "singular multiplication map");
      std::swap(m[piv], m[col]);
      Rational inv = Rational(1) / m[col][col];
      for (auto& v : m[col]) v *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rational f = m[r][col];
        for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
      }
    }
  }

  static Scalar parse_term(const std::string& term, int order, std::string_view whole) {
    require(!term.empty(), "parse_error", "dangling sign in scalar '" + std::string(whole) + "'");
    std::string coef = term, mono;
    if (auto star = term.find('*'); star != std::string::npos) {
      coef = term.substr(0, star);
      mono = term.substr(star + 1);
    } else if (term[0] == 'z') {
      coef = "1";
      mono = term;
    }
    Rational q;
    try {
      q = Rational(coef);
      q.canonicalize();
    } catch (const std::invalid_argument&) {
      fail("parse_error", "bad coefficient '" + coef + "' in scalar '" + std::string(whole) + "'");
    }
    require(q.get_den() != 0, "parse_error", "zero denominator in '" + std::string(whole) + "'");
    if (mono.empty()) return Scalar(q);
    require(mono[0] == 'z', "parse_error", "unknown symbol in scalar '" + std::string(whole) + "'");
    long long k = 1;
    if (mono.size() > 1) {
      require(mono.size() > 2 && mono[1] == '^', "parse_error", "bad power in '" + std::string(whole) + "'");
      try {
        k = std::stoll(mono.substr(2));
      } catch (const std::exception&) {
        fail("parse_error", "bad exponent in '" + std::string(whole) + "'");
      }
    }
    return Scalar(q) * root_of_unity(k, order);
  }

  const detail::CyclotomicField* field_ = nullptr;
  std::vector<Rational> c_;
};

} // namespace bethe
