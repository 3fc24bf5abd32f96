#include <gtest/gtest.h>

#include <random>

#include "bethe/matrix.hpp"
#include "bethe/poly.hpp"
#include "bethe/scalar.hpp"

using namespace bethe;

namespace {

Scalar random_field_element(std::mt19937_64& rng, int N) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pw(0, N - 1);
  Scalar s;
  for (int k = 0; k < 3; ++k) s += Scalar::fraction(num(rng), den(rng)) * Scalar::root_of_unity(pw(rng), N);
  return s;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

// Largest k such that some k x k minor is nonzero.
std::size_t rank_by_minors(const ExactMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  for (std::size_t k = std::min(R, C); k > 0; --k) {
    std::vector<bool> rs(R, false), cs(C, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        ExactMatrix sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < R; ++i) {
          if (!rs[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < C; ++j)
            if (cs[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        if (!det(sub).is_zero()) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

} // namespace

TEST(Scalar, SixthRootIdentity) {
  Scalar z = Scalar::root_of_unity(1, 6);
  EXPECT_EQ(z + z.inverse(), Scalar(1));
  EXPECT_EQ(z.pow(6), Scalar(1));
  EXPECT_NE(z.pow(3), Scalar(1));
  EXPECT_EQ(z.pow(3), Scalar(-1));
}

TEST(Scalar, TrivialCases) {
  Scalar a = Scalar::fraction(3, 7) + Scalar::root_of_unity(2, 6);
  EXPECT_TRUE((a * Scalar(0)).is_zero());
  EXPECT_EQ(Scalar(-1) * Scalar(-1), Scalar(1));
  EXPECT_EQ(Scalar::root_of_unity(1, 2), Scalar(-1));
  EXPECT_TRUE(Scalar::root_of_unity(5, 2).is_rational());
}

TEST(Scalar, DivisionByZeroIsNamed) {
  try {
    (void)(Scalar(1) / Scalar(0));
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "division_by_zero");
  }
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int N : {6, 5, 12}) {
    for (int it = 0; it < 1000; ++it) {
      Scalar a = random_field_element(rng, N), b = random_field_element(rng, N), c = random_field_element(rng, N);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * b, b * a);
      ASSERT_TRUE((a + (-a)).is_zero());
      if (!a.is_zero()) { ASSERT_EQ(a * a.inverse(), Scalar(1)); }
    }
  }
}

TEST(Scalar, StringRoundTrip) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    Scalar a = random_field_element(rng, 6);
    EXPECT_EQ(Scalar::parse(a.to_string(), 6), a) << a.to_string();
  }
  EXPECT_EQ(Scalar::root_of_unity(1, 6).to_string(), "z");
  EXPECT_EQ((Scalar::fraction(-1, 2) + Scalar(3) * Scalar::root_of_unity(1, 6)).to_string(), "-1/2 + 3*z");
  EXPECT_EQ(Scalar::parse("z^2", 6), Scalar::root_of_unity(2, 6));
  EXPECT_EQ(Scalar::parse("-z^3", 6), Scalar(1));
  EXPECT_THROW(Scalar::parse("1 + y", 6), Error);
  EXPECT_THROW(Scalar::parse("", 6), Error);
}

TEST(Scalar, MixedFieldsRejected) {
  Scalar a = Scalar::root_of_unity(1, 6), b = Scalar::root_of_unity(1, 5);
  EXPECT_THROW((void)(a + b), Error);
  EXPECT_EQ(a + Scalar(1), Scalar(1) + a);
}

TEST(Rref, Examples) {
  ExactMatrix id = ExactMatrix::identity(3);
  EXPECT_EQ(rref(id), id);
  ExactMatrix m{{1, 2}, {2, 4}};
  ExactMatrix expect{{1, 2}, {0, 0}};
  EXPECT_EQ(rref(m), expect);
  EXPECT_EQ(rank(m), 1u);
  ExactMatrix p{{0, 1, 1}, {1, 0, 2}}, q{{1, 0, 2}, {0, 1, 1}};
  EXPECT_EQ(rref(p), rref(q));
}

TEST(Rref, RowspaceEqualExamples) {
  ExactMatrix a{{1, 2, 3}, {0, 1, 5}};
  EXPECT_TRUE(rowspace_equal(a, Scalar(3) * a));
  ExactMatrix e1{{1, 0}}, e2{{0, 1}};
  EXPECT_FALSE(rowspace_equal(e1, e2));
  ExactMatrix s{{1, 1}, {0, 1}};
  EXPECT_TRUE(rowspace_equal(s, ExactMatrix::identity(2)));
  ExactMatrix wide{{1, 0, 0}};
  EXPECT_THROW(rowspace_equal(e1, wide), Error);
}

TEST(Rref, IdempotentAndRankMatchesMinors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int it = 0; it < 300; ++it) {
    ExactMatrix m = random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)), -1, 1);
    ExactMatrix e = rref(m);
    ASSERT_EQ(rref(e), e);
    ASSERT_EQ(rank(m), rank_by_minors(m));
  }
}

TEST(Rref, InvariantUnderInvertibleLeftFactor) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 100; ++it) {
    ExactMatrix m = random_matrix(rng, 4, 5);
    ExactMatrix g = random_matrix(rng, 4, 4, -3, 3);
    if (det(g).is_zero()) continue;
    ASSERT_EQ(rref(g * m), rref(m));
  }
}

TEST(Rref, CyclotomicEntries) {
  Scalar w = Scalar::root_of_unity(2, 6);  // primitive cube root
  ExactMatrix m{{1, w}, {w, w * w}};
  EXPECT_EQ(rank(m), 1u);
  EXPECT_TRUE(det(m).is_zero());
}

TEST(Matrix, NullspaceAndTriangularity) {
  ExactMatrix m{{1, 1, 0}, {0, 1, 1}};
  ExactMatrix k = nullspace(m);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_TRUE((m * k.transpose()).is_zero());
  ExactMatrix l{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}};
  EXPECT_TRUE(is_unitriangular(l));
  l(0, 2) = 1;
  EXPECT_FALSE(is_unitriangular(l));
}

TEST(Poly, RingAxiomsOnSamples) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
  auto random_poly = [&] {
    Poly p(2);
    for (int k = 0; k < 4; ++k) p += Poly::monomial({e(rng), e(rng)}, Scalar(c(rng)));
    return p;
  };
  for (int it = 0; it < 200; ++it) {
    Poly a = random_poly(), b = random_poly(), d = random_poly();
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
  }
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly s = (x + y) * (x - y);
  EXPECT_EQ(s, x * x - y * y);
  EXPECT_EQ(s.terms().size(), 2u);  // zero coefficients are dropped
  EXPECT_EQ(s.evaluate({Scalar(3), Scalar(2)}), Scalar(5));
}
