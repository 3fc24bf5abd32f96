#pragma once

// Integer lattices: Smith and Hermite normal forms, saturation, torsion components.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/matrix.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

using IntMatrix = Matrix<long long>;
using IntVec = std::vector<long long>;

struct SmithForm {
  IntMatrix U, D, V;      // U * M * V = D
  IntMatrix Vinv;         // rows form a basis of Z^n adapted to the row lattice of M
  std::vector<long long> divisors;  // diagonal of D, length min(rows, cols), d1 | d2 | ...
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += k * row_src
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, long long k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}
// col_dst += k * col_src
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, long long k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long long mod(long long a, long long n) { return ((a % n) + n) % n; }

} // namespace detail

/// Smith normal form by elementary operations with smallest-pivot selection.
inline SmithForm smith_normal_form(const IntMatrix& M) {
  using namespace detail;
  const std::size_t m = M.rows(), n = M.cols();
  SmithForm s{IntMatrix::identity(m), M, IntMatrix::identity(n), IntMatrix::identity(n), {}};
  IntMatrix& D = s.D;
  // Column ops on D are mirrored on V (same op) and on Vinv (inverse op on rows).
  auto col_add = [&](std::size_t dst, std::size_t src, long long k) {
    add_col(D, dst, src, k);
    add_col(s.V, dst, src, k);
    add_row(s.Vinv, src, dst, -k);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    swap_cols(D, a, b);
    swap_cols(s.V, a, b);
    swap_rows(s.Vinv, a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, long long k) {
    add_row(D, dst, src, k);
    add_row(s.U, dst, src, k);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    swap_rows(D, a, b);
    swap_rows(s.U, a, b);
  };

  const std::size_t k = std::min(m, n);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      long long best = 0;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (best == 0 || std::llabs(D(i, j)) < best)) {
            best = std::llabs(D(i, j));
            bi = i;
            bj = j;
          }
      if (best == 0) break;
      row_swap(t, bi);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        long long q = floor_div(D(i, t), D(t, t));
        row_add(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        long long q = floor_div(D(t, j), D(t, t));
        col_add(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the rest of the block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) s.U(t, j) = -s.U(t, j);
    }
  }
  for (std::size_t t = 0; t < k; ++t) s.divisors.push_back(D(t, t));
  return s;
}

/// Row-style Hermite normal form with zero rows dropped: positive pivots,
/// entries above each pivot reduced into [0, pivot). Canonical for the row lattice.
inline IntMatrix hermite_normal_form(IntMatrix A) {
  using namespace detail;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    for (;;) {
      std::size_t p = A.rows();
      for (std::size_t i = r; i < A.rows(); ++i)
        if (A(i, c) != 0 && (p == A.rows() || std::llabs(A(i, c)) < std::llabs(A(p, c)))) p = i;
      if (p == A.rows()) break;
      swap_rows(A, r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < A.rows(); ++i) {
        add_row(A, i, r, -floor_div(A(i, c), A(r, c)));
        if (A(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (A(r, c) == 0) continue;
    if (A(r, c) < 0)
      for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) = -A(r, j);
    for (std::size_t i = 0; i < r; ++i) add_row(A, i, r, -floor_div(A(i, c), A(r, c)));
    ++r;
  }
  IntMatrix out(0, A.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(A.row(i));
  return out;
}

inline std::size_t int_rank(const IntMatrix& M) { return hermite_normal_form(M).rows(); }

/// HNF basis of {v in Z^n : k v in rowspace_Z(M) for some k >= 1}.
inline IntMatrix saturation(const IntMatrix& M) {
  SmithForm s = smith_normal_form(M);
  IntMatrix basis(0, M.cols());
  for (std::size_t j = 0; j < s.divisors.size(); ++j)
    if (s.divisors[j] != 0) basis.append_row(s.Vinv.row(j));
  return hermite_normal_form(basis);
}

/// Elementary divisors greater than one of the torsion of Z^n / rowspace(M).
inline std::vector<long long> torsion_divisors(const IntMatrix& M) {
  std::vector<long long> out;
  for (long long d : smith_normal_form(M).divisors)
    if (d > 1) out.push_back(d);
  return out;
}

/// Points C with C(row) = 1 for every row of M, one per connected component of
/// that subgroup of the torus. A point is given by exponents e with
/// C(alpha_i) = zeta_N^{e_i}; the list is sorted lexicographically.
inline std::vector<IntVec> torsion_components(const IntMatrix& M, int N) {
  require(N >= 1, "precondition", "field order must be positive");
  SmithForm s = smith_normal_form(M);
  const std::size_t n = M.cols();
  std::vector<long long> d(n, 0);
  for (std::size_t j = 0; j < s.divisors.size(); ++j) d[j] = s.divisors[j];
  for (long long dj : d)
    if (dj > 1 && N % dj != 0)
      fail("field_too_small", "torsion of order " + std::to_string(dj) + " needs roots of unity missing from Q(zeta_" +
                                  std::to_string(N) + "); rerun with a field order divisible by " +
                                  std::to_string(std::lcm(static_cast<long long>(N), dj)));
  std::vector<IntVec> out;
  IntVec a(n, 0), m(n, 0);
  for (;;) {
    IntVec e(n, 0);
    for (std::size_t j = 0; j < n; ++j) a[j] = d[j] > 1 ? (N / d[j]) * m[j] : 0;
    for (std::size_t i = 0; i < n; ++i) {
      long long v = 0;
      for (std::size_t j = 0; j < n; ++j) v += s.V(i, j) * a[j];
      e[i] = detail::mod(v, N);
    }
    out.push_back(std::move(e));
    std::size_t j = 0;
    while (j < n) {
      if (d[j] > 1 && ++m[j] < d[j]) break;
      m[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Value of zeta_N^k as an exact scalar.
inline Scalar zeta_power(long long k, int N) { return Scalar::root_of_unity(k, N); }

inline long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace bethe
