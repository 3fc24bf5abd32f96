#include <gtest/gtest.h>

#include <random>

#include "bethe/rootsys.hpp"

using namespace bethe;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                         "D4", "G2", "F4", "A1xA1", "A1xB2"};

RatVec random_h(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9), q(1, 5);
  RatVec h(n);
  for (auto& x : h) x = make_rational(d(rng), q(rng));
  return h;
}

} // namespace

TEST(RootSystem, ClassicalCounts) {
  struct Case {
    std::string label;
    std::size_t roots, weyl;
  };
  for (const auto& c : std::vector<Case>{{"A1", 2, 2},
                                         {"A2", 6, 6},
                                         {"A3", 12, 24},
                                         {"B2", 8, 8},
                                         {"B3", 18, 48},
                                         {"C3", 18, 48},
                                         {"D4", 24, 192},
                                         {"G2", 12, 12},
                                         {"F4", 48, 1152},
                                         {"A1xA1", 4, 4}}) {
    RootSystem rs = RootSystem::build(c.label);
    EXPECT_EQ(rs.roots().size(), c.roots) << c.label;
    EXPECT_EQ(rs.weyl().size(), c.weyl) << c.label;
  }
  EXPECT_EQ(RootSystem::build("E6").roots().size(), 72u);
  EXPECT_EQ(RootSystem::build("E8").roots().size(), 240u);
  EXPECT_FALSE(RootSystem::build("E6").has_weyl());
}

TEST(RootSystem, B2PositiveRootsAndConventions) {
  RootSystem rs = RootSystem::build("B2");
  std::vector<Root> expect = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  EXPECT_EQ(rs.positive_roots(), expect);
  EXPECT_EQ(rs.cartan(), (IntMatrix{{2, -1}, {-2, 2}}));
  EXPECT_EQ(rs.inner({1, 0}, {1, 0}), 4);  // alpha_1 long
  RootSystem g2 = RootSystem::build("G2");
  EXPECT_EQ(g2.inner({1, 0}, {1, 0}), 2);
  EXPECT_EQ(g2.inner({0, 1}, {0, 1}), 6);
}

TEST(RootSystem, RawCartanMatchesLabel) {
  RootSystem a = RootSystem::build("[[2,-1],[-2,2]]");
  RootSystem b = RootSystem::build("B2");
  EXPECT_EQ(a.positive_roots(), b.positive_roots());
  EXPECT_EQ(a.gram(), b.gram());
  EXPECT_THROW(RootSystem::build("Q7"), Error);
  EXPECT_THROW(RootSystem::build("[[2,-3],[-3,2]]"), Error);  // affine-like, infinite
}

TEST(RootSystem, Invariants) {
  for (const auto& label : kTypes) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& a : rs.roots()) {
      ASSERT_TRUE(rs.is_root(RootSystem::negate(a)));
      ASSERT_TRUE(RootSystem::is_positive(a) || RootSystem::is_positive(RootSystem::negate(a)));
      long long aa = rs.inner(a, a);
      ASSERT_TRUE(aa == 2 || aa == 4 || aa == 6) << label;
      IntMatrix s = rs.reflection(a);
      for (const auto& b : rs.roots()) {
        ASSERT_TRUE(rs.is_root(RootSystem::apply(s, b)));
        ASSERT_EQ((2 * rs.inner(a, b)) % aa, 0);
      }
    }
    if (rs.rank() <= 3 || label == "B4") {
      for (const auto& w : rs.weyl())
        for (const auto& a : rs.roots()) ASSERT_TRUE(rs.is_root(RootSystem::apply(w.matrix, a)));
    }
    for (const auto& sub : rank2_full_subsystems(rs)) ASSERT_TRUE(is_closed(rs, sub));
  }
}

TEST(Subsystems, Rank2Full) {
  EXPECT_EQ(rank2_full_subsystems(RootSystem::build("A2")).size(), 1u);
  EXPECT_EQ(rank2_full_subsystems(RootSystem::build("A1xA1")).size(), 1u);
  // Brute force for A3: distinct planes through pairs of non-proportional roots.
  RootSystem a3 = RootSystem::build("A3");
  std::set<RootSet> planes;
  for (const auto& a : a3.roots())
    for (const auto& b : a3.roots()) {
      if (root_rank({a, b}, 3) != 2) continue;
      RootSet p;
      for (const auto& g : a3.roots())
        if (root_rank({a, b, g}, 3) == 2) p.push_back(g);
      planes.insert(normalize(p));
    }
  EXPECT_EQ(rank2_full_subsystems(a3).size(), planes.size());
  EXPECT_EQ(planes.size(), 7u);
}

TEST(Subsystems, Rank2Closed) {
  RootSystem b2 = RootSystem::build("B2");
  RootSet longs = normalize({{1, 0}, {-1, 0}, {1, 2}, {-1, -2}});
  auto closed = rank2_closed_subsystems(b2);
  EXPECT_TRUE(std::find(closed.begin(), closed.end(), longs) != closed.end());
  RootSet shorts = normalize({{0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  EXPECT_TRUE(std::find(closed.begin(), closed.end(), shorts) == closed.end());
  EXPECT_EQ(rank2_closed_subsystems(RootSystem::build("A2")).size(), 1u);
  RootSystem g2 = RootSystem::build("G2");
  RootSet g2long;
  for (const auto& a : g2.roots())
    if (g2.inner(a, a) == 6) g2long.push_back(a);
  g2long = normalize(g2long);
  auto gc = rank2_closed_subsystems(g2);
  EXPECT_TRUE(std::find(gc.begin(), gc.end(), g2long) != gc.end());
  EXPECT_EQ(simple_system(g2, g2long).size(), 2u);
  for (const auto& label : kTypes) {
    RootSystem rs = RootSystem::build(label);
    auto full = rank2_full_subsystems(rs);
    auto cl = rank2_closed_subsystems(rs);
    for (const auto& f : full) ASSERT_TRUE(std::find(cl.begin(), cl.end(), f) != cl.end()) << label;
  }
}

TEST(Subsystems, Centralizer) {
  RootSystem b2 = RootSystem::build("B2");
  EXPECT_EQ(centralizer_subsystem(b2, {Scalar(1), Scalar(1)}).size(), 8u);
  RootSet c = centralizer_subsystem(b2, {Scalar(-1), Scalar(-1)});
  // e^{a1} = -1, e^{a2} = -1: e^{a1+a2} = 1, e^{a1+2a2} = -1.
  EXPECT_EQ(c, normalize({{1, 1}, {-1, -1}}));
  EXPECT_TRUE(is_closed(b2, c));
  RootSystem g2 = RootSystem::build("G2");
  Scalar w = Scalar::root_of_unity(2, 6);
  RootSet cg = centralizer_subsystem(g2, {w, Scalar(1)});
  for (const auto& a : cg) EXPECT_EQ(g2.inner(a, a), 6);
  EXPECT_EQ(cg.size(), 6u);
  for (const auto& a : g2.roots())
    if (g2.inner(a, a) == 2) {
      Scalar v = evaluate_character(a, {w, Scalar(1)});
      EXPECT_TRUE(v == w || v == w * w);
    }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> e(0, 5);
  for (const auto& label : {"A2", "B2", "B3", "G2", "C3"}) {
    RootSystem rs = RootSystem::build(label);
    for (int it = 0; it < 30; ++it) {
      std::vector<Scalar> p;
      for (std::size_t i = 0; i < rs.rank(); ++i) p.push_back(Scalar::root_of_unity(e(rng), 6));
      ASSERT_TRUE(is_closed(rs, centralizer_subsystem(rs, p)));
    }
  }
}

TEST(Weyl, ActionOnH) {
  std::mt19937_64 rng(8);
  for (const auto& label : {"A2", "B3", "G2", "C3"}) {
    RootSystem rs = RootSystem::build(label);
    const auto& W = rs.weyl();
    RatVec h = random_h(rng, rs.rank());
    EXPECT_EQ(rs.act_on_h(W[0].matrix, h), h);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      IntMatrix s = rs.simple_reflection(i);
      EXPECT_EQ(rs.act_on_h(s, rs.act_on_h(s, h)), h);
    }
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    for (int it = 0; it < 100; ++it) {
      const IntMatrix& w = W[pick(rng)].matrix;
      RatVec x = random_h(rng, rs.rank());
      RatVec wx = rs.act_on_h(w, x);
      IntMatrix wi = rs.inverse(w);
      for (const auto& a : rs.roots()) ASSERT_EQ(RootSystem::pair(a, wx), RootSystem::pair(RootSystem::apply(wi, a), x));
    }
  }
}

TEST(Weyl, WordsAreShortestAndInversionsMatchLength) {
  for (const auto& label : {"A3", "B3", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& w : rs.weyl()) {
      ASSERT_EQ(rs.word_matrix(w.word), w.matrix);
      ASSERT_EQ(rs.inversion_set(w.matrix).size(), w.word.size());
    }
  }
}

TEST(Subsystems, SimpleSystemAndComponents) {
  RootSystem b2 = RootSystem::build("B2");
  RootSet longs = normalize({{1, 0}, {-1, 0}, {1, 2}, {-1, -2}});
  EXPECT_EQ(simple_system(b2, longs), (RootSet{{1, 0}, {1, 2}}));
  EXPECT_EQ(irreducible_components(b2, longs).size(), 2u);
  EXPECT_TRUE(is_irreducible(b2, RootSet(b2.roots().begin(), b2.roots().end())));
  EXPECT_FALSE(is_irreducible(b2, {}));
  RootSystem a3 = RootSystem::build("A3");
  RootSet all(a3.roots().begin(), a3.roots().end());
  EXPECT_EQ(simple_system(a3, normalize(all)), (RootSet{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}
