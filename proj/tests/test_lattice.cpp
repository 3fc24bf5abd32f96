#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bethe/lattice.hpp"

using namespace bethe;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

long long int_det(const IntMatrix& m) {
  ExactMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Scalar(m(i, j));
  return det(q).rational().get_num().get_si();
}

// Number of x in (Z/N)^n with M x = 0 mod N.
long long count_solutions(const IntMatrix& M, int N) {
  const std::size_t n = M.cols();
  std::vector<int> x(n, 0);
  long long count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < M.rows() && ok; ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += M(i, j) * x[j];
      ok = s % N == 0;
    }
    count += ok;
    std::size_t j = 0;
    while (j < n && ++x[j] == N) x[j++] = 0;
    if (j == n) break;
  }
  return count;
}

bool in_int_span(const IntMatrix& hnf, IntVec v) {
  // HNF is echelon with positive pivots: reduce greedily.
  std::size_t r = 0;
  for (std::size_t c = 0; c < v.size() && r < hnf.rows(); ++c) {
    if (hnf(r, c) == 0) continue;
    if (v[c] % hnf(r, c) != 0) return false;
    long long q = v[c] / hnf(r, c);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * hnf(r, j);
    ++r;
  }
  return std::all_of(v.begin(), v.end(), [](long long a) { return a == 0; });
}

// Brute force: saturated lattice members with small coordinates.
std::set<IntVec> saturated_members(const IntMatrix& M, int box) {
  IntMatrix h = hermite_normal_form(M);
  std::set<IntVec> out;
  const std::size_t n = M.cols();
  IntVec v(n, -box);
  for (;;) {
    for (int k = 1; k <= 12; ++k) {
      IntVec kv = v;
      for (auto& a : kv) a *= k;
      if (in_int_span(h, kv)) {
        out.insert(v);
        break;
      }
    }
    std::size_t j = 0;
    while (j < n && ++v[j] > box) v[j++] = -box;
    if (j == n) break;
  }
  return out;
}

} // namespace

TEST(Smith, Examples) {
  IntMatrix b2{{1, 0}, {1, 2}};
  EXPECT_EQ(smith_normal_form(b2).divisors, (std::vector<long long>{1, 2}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).D, IntMatrix::identity(3));
  IntMatrix g2{{0, 1}, {3, 1}};
  EXPECT_EQ(smith_normal_form(g2).divisors, (std::vector<long long>{1, 3}));
}

TEST(Smith, RandomMatricesAgainstBruteForce) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int it = 0; it < 500; ++it) {
    std::size_t r = static_cast<std::size_t>(dim(rng)) + 1, c = static_cast<std::size_t>(dim(rng));
    IntMatrix M = random_int_matrix(rng, r, c, 3);
    SmithForm s = smith_normal_form(M);
    ASSERT_EQ(s.U * M * s.V, s.D);
    ASSERT_EQ(std::llabs(int_det(s.U)), 1);
    ASSERT_EQ(std::llabs(int_det(s.V)), 1);
    ASSERT_EQ(s.V * s.Vinv, IntMatrix::identity(c));
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) { ASSERT_EQ(s.D(i, j), 0); }
    for (std::size_t k = 0; k + 1 < s.divisors.size(); ++k) {
      ASSERT_GE(s.divisors[k], 0);
      if (s.divisors[k] == 0)
        ASSERT_EQ(s.divisors[k + 1], 0);
      else
        ASSERT_EQ(s.divisors[k + 1] % s.divisors[k], 0);
    }
    // Torsion order against solution counting, with N a multiple of every divisor.
    long long N = 1;
    std::size_t free_rank = c;
    for (long long d : s.divisors)
      if (d != 0) {
        N = std::lcm(N, d);
        --free_rank;
      }
    if (N > 12 || (N == 1 && free_rank == 0)) continue;
    if (N == 1) N = 2;
    long long torsion = 1;
    for (long long d : s.divisors)
      if (d > 1) torsion *= d;
    long long expected = torsion;
    for (std::size_t k = 0; k < free_rank; ++k) expected *= N;
    ASSERT_EQ(count_solutions(M, static_cast<int>(N)), expected);
    auto comps = torsion_components(M, static_cast<int>(N));
    ASSERT_EQ(static_cast<long long>(comps.size()), torsion);
    for (const auto& e : comps)
      for (std::size_t i = 0; i < M.rows(); ++i) ASSERT_EQ(dot(M.row(i), e) % N, 0);
  }
}

TEST(Saturation, Examples) {
  IntMatrix b2{{1, 0}, {1, 2}};
  EXPECT_EQ(saturation(b2), IntMatrix::identity(2));
  IntMatrix twice{{2, 0}};
  EXPECT_EQ(saturation(twice), (IntMatrix{{1, 0}}));
  IntMatrix uni{{1, 1}, {0, 1}};
  EXPECT_EQ(saturation(uni), hermite_normal_form(uni));
}

TEST(Saturation, RandomAgainstBruteForce) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 500; ++it) {
    IntMatrix M = random_int_matrix(rng, 1 + it % 2, 3, 3);
    IntMatrix S = saturation(M);
    ASSERT_EQ(saturation(S), S);
    ASSERT_EQ(S.rows(), int_rank(M));
    if (it % 10 != 0) continue;  // the box search is the slow part
    std::set<IntVec> members = saturated_members(M, 2);
    for (const auto& v : members) ASSERT_TRUE(in_int_span(S, v));
    for (std::size_t i = 0; i < S.rows(); ++i) {
      IntVec row = S.row(i);
      bool small = std::all_of(row.begin(), row.end(), [](long long a) { return std::llabs(a) <= 2; });
      if (small) { ASSERT_TRUE(members.count(row)); }
    }
  }
}

TEST(Torsion, Components) {
  IntMatrix b2{{1, 0}, {1, 2}};
  auto c = torsion_components(b2, 6);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (IntVec{0, 0}));
  EXPECT_EQ(c[1], (IntVec{0, 3}));  // e^{a1} = 1, e^{a2} = -1
  IntMatrix g2{{0, 1}, {3, 1}};
  auto g = torsion_components(g2, 6);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], (IntVec{0, 0}));
  EXPECT_EQ(torsion_components(IntMatrix::identity(2), 6).size(), 1u);
  EXPECT_EQ(torsion_divisors(g2), (std::vector<long long>{3}));
}

TEST(Torsion, FieldTooSmall) {
  IntMatrix m{{5}};
  try {
    torsion_components(m, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "field_too_small");
  }
  EXPECT_EQ(torsion_components(m, 10).size(), 5u);
}
