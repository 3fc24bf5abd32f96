#pragma once

// Finite root systems in the simple-root basis, Weyl groups, root subsystems.

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/lattice.hpp"
#include "bethe/matrix.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

using Root = IntVec;
using RatVec = std::vector<Rational>;

struct WeylElement {
  IntMatrix matrix;        // acts on root coordinates (columns are images of simple roots)
  std::vector<int> word;   // shortest word, matrix = s_{word[0]} ... s_{word[k-1]}
};

class RootSystem {
public:
  /// Labels: A1.., B2.., C2.., D3.., E6-E8, F4, G2, products joined by 'x'
  /// (e.g. "A1xA1"), or a raw Cartan matrix "[[2,-1],[-1,2]]".
  static RootSystem build(const std::string& label, std::size_t max_weyl_rank = 4) {
    RootSystem rs;
    rs.label_ = label;
    rs.gram_ = gram_for_label(label);
    rs.finish(max_weyl_rank);
    return rs;
  }

  /// Root system of a symmetrizable Cartan matrix.
  static RootSystem from_cartan(const IntMatrix& A, std::size_t max_weyl_rank = 4) {
    RootSystem rs;
    rs.label_ = cartan_label(A);
    rs.gram_ = symmetrize(A);
    rs.finish(max_weyl_rank);
    return rs;
  }

  /// Root system with the given Gram matrix (used for Levi subsystems).
  static RootSystem from_gram(const IntMatrix& G, std::string label, std::size_t max_weyl_rank = 4) {
    RootSystem rs;
    rs.label_ = std::move(label);
    rs.gram_ = G;
    rs.finish(max_weyl_rank);
    return rs;
  }

  /// The Levi subsystem spanned by the simple roots in `I`, in its own coordinates.
  RootSystem levi(const std::vector<int>& I) const {
    IntMatrix g(I.size(), I.size());
    std::string lab = label_ + "[";
    for (std::size_t a = 0; a < I.size(); ++a) {
      lab += (a ? "," : "") + std::to_string(I[a] + 1);
      for (std::size_t b = 0; b < I.size(); ++b)
        g(a, b) = gram_(static_cast<std::size_t>(I[a]), static_cast<std::size_t>(I[b]));
    }
    return from_gram(g, lab + "]");
  }

  const std::string& label() const noexcept { return label_; }
  std::size_t rank() const noexcept { return n_; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  /// Positive roots in the fixed order: height ascending, then coordinates descending.
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  bool has_weyl() const noexcept { return !weyl_.empty(); }
  const std::vector<WeylElement>& weyl() const {
    require(has_weyl(), "rank_bound", "Weyl group of " + label_ + " is not enumerated");
    return weyl_;
  }

  Root simple_root(std::size_t i) const {
    Root r(n_, 0);
    r[i] = 1;
    return r;
  }

  bool is_root(const Root& v) const { return root_set_.count(v) > 0; }

  /// Index of a positive root in positive_roots(), or -1.
  int positive_index(const Root& v) const {
    auto it = pos_index_.find(v);
    return it == pos_index_.end() ? -1 : it->second;
  }

  long long inner(const Root& a, const Root& b) const {
    long long s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) s += a[i] * gram_(i, j) * b[j];
    return s;
  }

  static bool is_positive(const Root& v) {
    return std::all_of(v.begin(), v.end(), [](long long a) { return a >= 0; });
  }
  static Root negate(Root v) {
    for (auto& a : v) a = -a;
    return v;
  }
  static Root abs_root(const Root& v) { return is_positive(v) ? v : negate(v); }
  static int height(const Root& v) { return static_cast<int>(std::accumulate(v.begin(), v.end(), 0LL)); }

  IntMatrix simple_reflection(std::size_t i) const {
    IntMatrix s = IntMatrix::identity(n_);
    for (std::size_t j = 0; j < n_; ++j) s(i, j) -= cartan_(i, j);
    return s;
  }

  /// s_a(v) = v - (2(a,v)/(a,a)) a as a matrix on root coordinates.
  IntMatrix reflection(const Root& a) const {
    const long long aa = inner(a, a);
    IntMatrix s = IntMatrix::identity(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      long long c = 2 * inner(a, simple_root(j));
      require(c % aa == 0, "precondition", "reflection vector is not a root");
      for (std::size_t i = 0; i < n_; ++i) s(i, j) -= a[i] * (c / aa);
    }
    return s;
  }

  IntMatrix word_matrix(const std::vector<int>& word) const {
    IntMatrix w = IntMatrix::identity(n_);
    for (int i : word) {
      require(i >= 0 && static_cast<std::size_t>(i) < n_, "precondition",
              "simple reflection index " + std::to_string(i + 1) + " out of range");
      w = w * simple_reflection(static_cast<std::size_t>(i));
    }
    return w;
  }

  static Root apply(const IntMatrix& w, const Root& v) {
    Root r(w.rows(), 0);
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) r[i] += w(i, j) * v[j];
    return r;
  }

  /// Inverse of a Weyl group matrix.
  IntMatrix inverse(const IntMatrix& w) const {
    if (!weyl_.empty()) {
      auto it = weyl_index_.find(flatten(w));
      if (it != weyl_index_.end()) return weyl_inverse_[it->second];
    }
    // w preserves the Gram form: w^{-1} = G^{-1} w^T G, computed exactly.
    ExactMatrix g(n_, n_), wt(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        g(i, j) = Scalar(gram_(i, j));
        wt(i, j) = Scalar(w(j, i));
      }
    ExactMatrix aug(n_, 2 * n_);
    ExactMatrix rhs = wt * g;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        aug(i, j) = g(i, j);
        aug(i, n_ + j) = rhs(i, j);
      }
    ExactMatrix e = rref(aug);
    IntMatrix inv(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Rational q = e(i, n_ + j).rational();
        require(q.get_den() == 1, "precondition", "matrix is not in the Weyl group");
        inv(i, j) = q.get_num().get_si();
      }
    return inv;
  }

  /// Contragredient action on h given by coordinates (alpha_1(h), ..., alpha_n(h)):
  /// alpha(w h) = (w^{-1} alpha)(h).
  RatVec act_on_h(const IntMatrix& w, const RatVec& h) const {
    IntMatrix wi = inverse(w);
    RatVec out(n_, Rational(0));
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t j = 0; j < n_; ++j) out[k] += Rational(static_cast<long>(wi(j, k))) * h[j];
    return out;
  }

  /// alpha(h) for h in simple-coroot-dual coordinates.
  static Rational pair(const Root& a, const RatVec& h) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(static_cast<long>(a[i])) * h[i];
    return s;
  }

  /// Coordinates of the coroot b^vee: alpha_k(b^vee) = 2 (alpha_k, b)/(b, b).
  RatVec coroot(const Root& b) const {
    RatVec h(n_);
    const long long bb = inner(b, b);
    for (std::size_t k = 0; k < n_; ++k) h[k] = make_rational(2 * inner(simple_root(k), b), bb);
    for (auto& q : h) q.canonicalize();
    return h;
  }

  /// Positive roots a with w^{-1} a negative, i.e. Phi+ intersected with w Phi-.
  std::vector<Root> inversion_set(const IntMatrix& w) const {
    IntMatrix wi = inverse(w);
    std::vector<Root> out;
    for (const auto& a : positive_)
      if (!is_positive(apply(wi, a))) out.push_back(a);
    return out;
  }

  /// Index in weyl() of the element with this matrix.
  std::size_t weyl_index(const IntMatrix& w) const {
    auto it = weyl_index_.find(flatten(w));
    require(it != weyl_index_.end(), "precondition", "matrix is not in the Weyl group");
    return it->second;
  }

private:
  static std::vector<long long> flatten(const IntMatrix& w) {
    std::vector<long long> f;
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) f.push_back(w(i, j));
    return f;
  }

  static IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    IntMatrix g(n, n);
    std::size_t o = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) g(o + i, o + j) = b(i, j);
      o += b.rows();
    }
    return g;
  }

  // Gram matrix for an irreducible type, Bourbaki numbering, short roots of length 2.
  static IntMatrix gram_irreducible(char type, std::size_t n) {
    auto bad = [&] { fail("unsupported_label", std::string("unsupported root system ") + type + std::to_string(n)); };
    IntMatrix g(n, n);
    auto link = [&](std::size_t i, std::size_t j, long long v) { g(i, j) = g(j, i) = v; };
    switch (type) {
      case 'A':
        if (n < 1) bad();
        for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
      case 'B':
        if (n < 2) bad();
        for (std::size_t i = 0; i < n; ++i) g(i, i) = i + 1 < n ? 4 : 2;
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
      case 'C':
        if (n < 2) bad();
        for (std::size_t i = 0; i < n; ++i) g(i, i) = i + 1 < n ? 2 : 4;
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, i + 2 < n ? -1 : -2);
        break;
      case 'D':
        if (n < 3) bad();
        for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
      case 'E':
        if (n < 6 || n > 8) bad();
        for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
      case 'F':
        if (n != 4) bad();
        g(0, 0) = g(1, 1) = 4;
        g(2, 2) = g(3, 3) = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
      case 'G':
        if (n != 2) bad();
        g(0, 0) = 2;
        g(1, 1) = 6;
        link(0, 1, -3);
        break;
      default:
        bad();
    }
    return g;
  }

  static IntMatrix gram_for_label(const std::string& raw) {
    std::string label;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) label.push_back(c);
    require(!label.empty(), "unsupported_label", "empty root system label");
    if (label[0] == '[') return symmetrize(parse_cartan(label));
    std::vector<IntMatrix> blocks;
    std::size_t pos = 0;
    while (pos < label.size()) {
      std::size_t end = label.find_first_of("x*", pos);
      if (end == std::string::npos) end = label.size();
      std::string part = label.substr(pos, end - pos);
      require(part.size() >= 2 && std::isalpha(static_cast<unsigned char>(part[0])), "unsupported_label",
              "cannot parse root system label '" + raw + "'");
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(part.substr(1), &used);
        require(used + 1 == part.size(), "unsupported_label", "cannot parse root system label '" + raw + "'");
      } catch (const std::logic_error&) {
        fail("unsupported_label", "cannot parse root system label '" + raw + "'");
      }
      blocks.push_back(gram_irreducible(static_cast<char>(std::toupper(static_cast<unsigned char>(part[0]))), n));
      pos = end + 1;
    }
    return block_diag(blocks);
  }

  static IntMatrix parse_cartan(const std::string& s) {
    std::vector<std::vector<long long>> rows;
    std::size_t i = 0;
    require(s.size() >= 4 && s[0] == '[' && s.back() == ']', "unsupported_label", "malformed Cartan matrix '" + s + "'");
    i = 1;
    while (i < s.size() - 1) {
      if (s[i] == ',') {
        ++i;
        continue;
      }
      require(s[i] == '[', "unsupported_label", "malformed Cartan matrix '" + s + "'");
      std::size_t close = s.find(']', i);
      require(close != std::string::npos, "unsupported_label", "malformed Cartan matrix '" + s + "'");
      std::vector<long long> row;
      std::string body = s.substr(i + 1, close - i - 1);
      std::size_t p = 0;
      while (p <= body.size()) {
        std::size_t q = body.find(',', p);
        if (q == std::string::npos) q = body.size();
        try {
          row.push_back(std::stoll(body.substr(p, q - p)));
        } catch (const std::logic_error&) {
          fail("unsupported_label", "malformed Cartan matrix '" + s + "'");
        }
        p = q + 1;
      }
      rows.push_back(row);
      i = close + 1;
    }
    require(!rows.empty(), "unsupported_label", "empty Cartan matrix");
    return IntMatrix::from_rows(rows, rows.size());
  }

  // Gram matrix d_i A_ij / 2 with d chosen so that the shortest root of each component has length 2.
  static IntMatrix symmetrize(const IntMatrix& A) {
    const std::size_t n = A.rows();
    require(A.cols() == n, "unsupported_label", "Cartan matrix must be square");
    std::vector<Rational> d(n, Rational(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
      require(A(s, s) == 2, "unsupported_label", "Cartan matrix needs 2 on the diagonal");
      if (comp[s] >= 0) continue;
      d[s] = 1;
      comp[s] = ncomp;
      std::deque<std::size_t> q{s};
      while (!q.empty()) {
        std::size_t i = q.front();
        q.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || A(i, j) == 0) continue;
          require(A(j, i) != 0 && A(i, j) < 0, "unsupported_label", "Cartan matrix is not symmetrizable");
          Rational dj = d[i] * make_rational(A(i, j), A(j, i));
          dj.canonicalize();
          if (comp[j] < 0) {
            comp[j] = ncomp;
            d[j] = dj;
            q.push_back(j);
          } else {
            require(d[j] == dj, "unsupported_label", "Cartan matrix is not symmetrizable");
          }
        }
      }
      ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
      Rational mn(0);
      for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == c && (mn == 0 || d[i] < mn)) mn = d[i];
      for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == c) d[i] = d[i] * 2 / mn;
    }
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational v = d[i] * Rational(static_cast<long>(A(i, j))) / 2;
        v.canonicalize();
        require(v.get_den() == 1, "unsupported_label", "Cartan matrix does not give an integral form");
        g(i, j) = v.get_num().get_si();
      }
    return g;
  }

  static std::string cartan_label(const IntMatrix& A) {
    std::string s = "[";
    for (std::size_t i = 0; i < A.rows(); ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < A.cols(); ++j) s += (j ? "," : "") + std::to_string(A(i, j));
      s += "]";
    }
    return s + "]";
  }

  void finish(std::size_t max_weyl_rank) {
    n_ = gram_.rows();
    cartan_ = IntMatrix(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        long long num = 2 * gram_(i, j);
        require(gram_(i, i) > 0 && num % gram_(i, i) == 0, "unsupported_label", "non-crystallographic form");
        cartan_(i, j) = num / gram_(i, i);
      }
    // Roots: orbit of the simple roots under simple reflections.
    std::vector<IntMatrix> refl;
    for (std::size_t i = 0; i < n_; ++i) refl.push_back(simple_reflection(i));
    std::deque<Root> q;
    for (std::size_t i = 0; i < n_; ++i) {
      root_set_.insert(simple_root(i));
      q.push_back(simple_root(i));
    }
    while (!q.empty()) {
      Root r = q.front();
      q.pop_front();
      require(root_set_.size() < 100000, "unsupported_label", "Cartan matrix is not of finite type");
      for (const auto& s : refl) {
        Root v = apply(s, r);
        if (root_set_.insert(v).second) q.push_back(v);
      }
    }
    for (const auto& r : root_set_) {
      require(is_positive(r) || is_positive(negate(r)), "unsupported_label", "Cartan matrix is not of finite type");
      if (is_positive(r)) positive_.push_back(r);
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
      int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a > b;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) pos_index_[positive_[k]] = static_cast<int>(k);
    for (const auto& r : positive_) roots_.push_back(r);
    for (const auto& r : positive_) roots_.push_back(negate(r));

    // Weyl group by breadth-first search; words are shortest.
    bool enumerate = n_ <= max_weyl_rank;
    if (!enumerate) return;
    WeylElement e{IntMatrix::identity(n_), {}};
    weyl_index_[flatten(e.matrix)] = 0;
    weyl_.push_back(e);
    for (std::size_t k = 0; k < weyl_.size(); ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        IntMatrix m = weyl_[k].matrix * refl[i];
        auto key = flatten(m);
        if (weyl_index_.count(key)) continue;
        std::vector<int> word = weyl_[k].word;
        word.push_back(static_cast<int>(i));
        weyl_index_[key] = weyl_.size();
        weyl_.push_back({m, word});
        require(weyl_.size() <= 100000, "rank_bound", "Weyl group too large to enumerate");
      }
    }
    for (const auto& el : weyl_) {
      std::vector<int> rev(el.word.rbegin(), el.word.rend());
      weyl_inverse_.push_back(word_matrix(rev));
    }
  }

  std::string label_;
  std::size_t n_ = 0;
  IntMatrix cartan_, gram_;
  std::vector<Root> roots_, positive_;
  std::set<Root> root_set_;
  std::map<Root, int> pos_index_;
  std::vector<WeylElement> weyl_;
  std::vector<IntMatrix> weyl_inverse_;
  std::map<std::vector<long long>, std::size_t> weyl_index_;
};

// ---------------------------------------------------------------------------
// Subsystems. A subsystem is a set of roots closed under negation, stored sorted.

using RootSet = std::vector<Root>;

inline RootSet normalize(RootSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline RootSet positive_part(const RootSystem& rs, const RootSet& s) {
  RootSet out;
  for (const auto& a : rs.positive_roots())
    if (std::binary_search(s.begin(), s.end(), a)) out.push_back(a);
  return out;
}

/// alpha, beta in S and alpha + beta a root imply alpha + beta in S; S = -S.
inline bool is_closed(const RootSystem& rs, const RootSet& s) {
  for (const auto& a : s) {
    if (!std::binary_search(s.begin(), s.end(), RootSystem::negate(a))) return false;
    for (const auto& b : s) {
      Root c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
      if (rs.is_root(c) && !std::binary_search(s.begin(), s.end(), c)) return false;
    }
  }
  return true;
}

inline std::size_t root_rank(const RootSet& s, std::size_t n) {
  IntMatrix m(0, n);
  for (const auto& a : s) m.append_row(a);
  return s.empty() ? 0 : int_rank(m);
}

inline std::vector<RootSet> rank2_full_subsystems(const RootSystem& rs) {
  std::set<RootSet> seen;
  const auto& pos = rs.positive_roots();
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      RootSet plane;
      for (const auto& g : rs.roots())
        if (root_rank({pos[i], pos[j], g}, rs.rank()) == 2) plane.push_back(g);
      seen.insert(normalize(plane));
    }
  return {seen.begin(), seen.end()};
}

inline std::vector<RootSet> rank2_closed_subsystems(const RootSystem& rs) {
  std::set<RootSet> seen;
  for (const auto& plane : rank2_full_subsystems(rs)) {
    RootSet pos = positive_part(rs, plane);
    for (unsigned mask = 1; mask < (1u << pos.size()); ++mask) {
      RootSet s;
      for (std::size_t k = 0; k < pos.size(); ++k)
        if (mask >> k & 1u) {
          s.push_back(pos[k]);
          s.push_back(RootSystem::negate(pos[k]));
        }
      s = normalize(s);
      if (root_rank(s, rs.rank()) == 2 && is_closed(rs, s)) seen.insert(s);
    }
  }
  return {seen.begin(), seen.end()};
}

/// e^alpha at the point with e^{alpha_i} = c[i].
inline Scalar evaluate_character(const Root& a, const std::vector<Scalar>& c) {
  Scalar v(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) v *= c[i].pow(a[i]);
  return v;
}

inline RootSet centralizer_subsystem(const RootSystem& rs, const std::vector<Scalar>& point) {
  require(point.size() == rs.rank(), "dimension_mismatch", "torus point has wrong length");
  for (const auto& c : point) require(!c.is_zero(), "precondition", "torus point has a zero coordinate");
  RootSet out;
  for (const auto& a : rs.roots())
    if (evaluate_character(a, point) == Scalar(1)) out.push_back(a);
  return normalize(out);
}

/// Simple roots of the subsystem with respect to the positive roots it contains,
/// in the global positive-root order. Requires s to be a root system.
inline RootSet simple_system(const RootSystem& rs, const RootSet& s) {
  RootSet pos = positive_part(rs, s), out;
  for (const auto& b : pos) {
    IntMatrix r = rs.reflection(b);
    int flipped = 0;
    for (const auto& a : pos)
      if (!RootSystem::is_positive(RootSystem::apply(r, a))) ++flipped;
    if (flipped == 1) out.push_back(b);
  }
  return out;
}

/// Splits a subsystem into mutually orthogonal irreducible pieces (each normalized).
inline std::vector<RootSet> irreducible_components(const RootSystem& rs, const RootSet& s) {
  std::vector<int> comp(s.size(), -1);
  std::vector<RootSet> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (comp[k] >= 0) continue;
    RootSet part;
    std::deque<std::size_t> q{k};
    comp[k] = static_cast<int>(out.size());
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop_front();
      part.push_back(s[i]);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (comp[j] < 0 && rs.inner(s[i], s[j]) != 0) {
          comp[j] = comp[k];
          q.push_back(j);
        }
    }
    out.push_back(normalize(part));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_irreducible(const RootSystem& rs, const RootSet& s) {
  return !s.empty() && irreducible_components(rs, s).size() == 1;
}

} // namespace bethe
