#include <gtest/gtest.h>

#include <random>

#include "bethe/nested.hpp"

using namespace bethe;

namespace {

SubsystemChart full_chart(const RootSystem& rs) {
  return SubsystemChart(rs, normalize(RootSet(rs.roots().begin(), rs.roots().end())));
}

std::size_t local_index(const SubsystemChart& Y, const IntVec& c) {
  const auto& cs = Y.coords();
  return static_cast<std::size_t>(std::find(cs.begin(), cs.end(), c) - cs.begin());
}

std::vector<Scalar> random_t(std::mt19937_64& rng, std::size_t n, bool allow_zero) {
  std::uniform_int_distribution<int> num(allow_zero ? -6 : 1, 6), den(1, 4), sign(0, 1);
  std::vector<Scalar> t;
  for (std::size_t i = 0; i < n; ++i) {
    int a = num(rng);
    t.push_back(Scalar::fraction(sign(rng) ? a : -a, den(rng)));
  }
  return t;
}

// Index positions of elements in canonical order.
std::size_t index_of(const NestedChart& ch, VertexSet s) {
  for (std::size_t p = 0; p < ch.size(); ++p)
    if (ch.element(p) == s) return p;
  return ch.size();
}

} // namespace

TEST(NestedSets, Counts) {
  EXPECT_EQ(maximal_nested_sets(full_chart(RootSystem::build("A1"))).size(), 1u);
  auto a2 = maximal_nested_sets(full_chart(RootSystem::build("A2")));
  ASSERT_EQ(a2.size(), 2u);
  EXPECT_EQ(a2[0].elements, (std::vector<VertexSet>{0b11, 0b01}));
  EXPECT_EQ(a2[1].elements, (std::vector<VertexSet>{0b11, 0b10}));
  auto a3 = maximal_nested_sets(full_chart(RootSystem::build("A3")));
  std::set<std::vector<VertexSet>> expect = {
      {0b111, 0b011, 0b001}, {0b111, 0b011, 0b010}, {0b111, 0b110, 0b010}, {0b111, 0b110, 0b100}, {0b111, 0b001, 0b100}};
  std::set<std::vector<VertexSet>> got;
  for (const auto& s : a3) got.insert(s.elements);
  EXPECT_EQ(got, expect);
  EXPECT_EQ(maximal_nested_sets(full_chart(RootSystem::build("A1xA1"))).size(), 1u);
  // the B3 and C3 diagrams are paths, like A3
  EXPECT_EQ(maximal_nested_sets(full_chart(RootSystem::build("B3"))).size(), 5u);
  // D4: the star with three leaves
  EXPECT_EQ(maximal_nested_sets(full_chart(RootSystem::build("D4"))).size(), 16u);
}

TEST(NestedSets, MinimalContaining) {
  RootSystem a2 = RootSystem::build("A2");
  NestedChart ch(full_chart(a2), NestedSet{{0b11, 0b01}});
  EXPECT_EQ(ch.element(ch.a_s(local_index(ch.subsystem(), {1, 1}))), 0b11u);
  EXPECT_EQ(ch.element(ch.a_s(local_index(ch.subsystem(), {1, 0}))), 0b01u);
  EXPECT_EQ(ch.adapted(0), 1u);  // alpha_2 is adapted to {12}
  EXPECT_EQ(ch.adapted(1), 0u);

  RootSystem a3 = RootSystem::build("A3");
  NestedChart c3(full_chart(a3), NestedSet{{0b111, 0b001, 0b100}});
  EXPECT_EQ(c3.element(c3.a_s(local_index(c3.subsystem(), {0, 1, 0}))), 0b111u);
  for (std::size_t p = 0; p < c3.size(); ++p)
    EXPECT_EQ(c3.a_s(c3.adapted_root_index(p)), p);
}

TEST(NestedSets, RatioExamples) {
  RootSystem a2 = RootSystem::build("A2");
  NestedChart ch(full_chart(a2), NestedSet{{0b01, 0b11}});
  const auto& Y = ch.subsystem();
  std::size_t b = local_index(Y, {0, 1}), a = local_index(Y, {1, 1});
  std::size_t p1 = index_of(ch, 0b01);
  std::vector<Scalar> t(2, Scalar(1));
  t[p1] = Scalar::fraction(2, 3);
  EXPECT_EQ(ch.ratio(b, a, t), Scalar(1) / (Scalar::fraction(2, 3) + Scalar(1)));
  t[p1] = Scalar(0);
  EXPECT_EQ(ch.ratio(b, a, t), Scalar(1));
  EXPECT_EQ(ch.ratio(a, a, t), Scalar(1));
  // t_{1} = -1 kills r_{a1+a2}
  t[p1] = Scalar(-1);
  EXPECT_FALSE(ch.generic(t));
  EXPECT_THROW(ch.ratio(b, a, t), Error);
  // beta above alpha is a precondition failure
  t[p1] = Scalar(2);
  EXPECT_THROW(ch.ratio(a, local_index(Y, {1, 0}), t), Error);
}

TEST(NestedSets, InteriorConsistency) {
  std::mt19937_64 rng(11);
  for (const auto& label : {"A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"}) {
    RootSystem rs = RootSystem::build(label);
    SubsystemChart Y = full_chart(rs);
    auto sets = maximal_nested_sets(Y);
    std::size_t checked = 0;
    for (int it = 0; checked < 200 && it < 2000; ++it) {
      NestedChart ch(Y, sets[static_cast<std::size_t>(it) % sets.size()]);
      auto t = random_t(rng, ch.size(), false);
      if (!ch.generic(t)) continue;
      auto beta = ch.simple_values(t);
      const std::size_t m = Y.positive_roots().size();
      std::vector<Scalar> val(m);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < beta.size(); ++j) val[k] += Scalar(Y.coords()[k][j]) * beta[j];
      for (std::size_t ka = 0; ka < m; ++ka)
        for (std::size_t kb = 0; kb < m; ++kb) {
          VertexSet A = ch.element(ch.a_s(ka)), B = ch.element(ch.a_s(kb));
          if ((A & B) != B) continue;
          ASSERT_EQ(ch.ratio(kb, ka, t), val[kb] / val[ka]) << label;
        }
      ++checked;
    }
    EXPECT_EQ(checked, 200u) << label;
  }
}

// A family is nested iff every antichain in it spans a direct sum whose roots all
// lie in one summand. Checked over all families of connected subdiagrams.
TEST(NestedSets, AbstractCriterionCrossCheck) {
  for (const auto& label : {"A2", "A3", "B3", "C3", "G2", "A1xA1", "A1xA2"}) {
    RootSystem rs = RootSystem::build(label);
    SubsystemChart Y = full_chart(rs);
    std::vector<VertexSet> conn;
    for (VertexSet s = 1; s <= Y.all(); ++s)
      if (Y.connected(s)) conn.push_back(s);
    for (unsigned fam = 0; fam < (1u << conn.size()); ++fam) {
      std::vector<VertexSet> f;
      for (std::size_t i = 0; i < conn.size(); ++i)
        if (fam >> i & 1u) f.push_back(conn[i]);
      bool abstract = true;
      for (unsigned sub = 1; sub < (1u << f.size()) && abstract; ++sub) {
        std::vector<VertexSet> A;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (sub >> i & 1u) A.push_back(f[i]);
        bool antichain = true;
        for (std::size_t i = 0; i < A.size(); ++i)
          for (std::size_t j = 0; j < A.size(); ++j)
            if (i != j && (A[i] & A[j]) == A[i]) antichain = false;
        if (!antichain || A.size() < 2) continue;
        // direct sum of the spans: the simple-root sets must be independent, i.e. disjoint
        RootSet gens;
        std::size_t dims = 0;
        for (VertexSet s : A) {
          dims += static_cast<std::size_t>(std::popcount(s));
          for (std::size_t v = 0; v < Y.rank(); ++v)
            if (s >> v & 1u) gens.push_back(Y.simple_roots()[v]);
        }
        if (root_rank(gens, rs.rank()) != dims) {
          abstract = false;
          break;
        }
        for (const auto& a : Y.positive_roots()) {
          auto g2 = gens;
          g2.push_back(a);
          if (root_rank(g2, rs.rank()) != root_rank(gens, rs.rank())) continue;
          bool inside_one = false;
          for (VertexSet s : A) {
            RootSet piece;
            for (std::size_t v = 0; v < Y.rank(); ++v)
              if (s >> v & 1u) piece.push_back(Y.simple_roots()[v]);
            std::size_t r = piece.size();
            piece.push_back(a);
            if (root_rank(piece, rs.rank()) == r) inside_one = true;
          }
          if (!inside_one) abstract = false;
        }
      }
      ASSERT_EQ(is_nested_family(Y, f), abstract) << label << " family " << fam;
    }
  }
}

TEST(NestedSets, MaximalSetsAreMaximal) {
  for (const auto& label : {"A3", "B3", "D4", "G2", "A1xA2"}) {
    RootSystem rs = RootSystem::build(label);
    SubsystemChart Y = full_chart(rs);
    for (const auto& S : maximal_nested_sets(Y)) {
      ASSERT_EQ(S.elements.size(), Y.rank());
      ASSERT_TRUE(is_nested_family(Y, S.elements));
      for (VertexSet s = 1; s <= Y.all(); ++s) {
        if (!Y.connected(s) || std::find(S.elements.begin(), S.elements.end(), s) != S.elements.end()) continue;
        auto f = S.elements;
        f.push_back(s);
        ASSERT_FALSE(is_nested_family(Y, f));
      }
      NestedChart ch(Y, S);
      for (std::size_t k = 0; k < Y.positive_roots().size(); ++k) ASSERT_LT(ch.a_s(k), ch.size());
    }
  }
}
