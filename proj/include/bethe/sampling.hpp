#pragma once

// Seeded random points: regular torus points and chart points in each stratum class.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bethe/arrangement.hpp"
#include "bethe/hamiltonians.hpp"
#include "bethe/nested.hpp"
#include "bethe/rootsys.hpp"

namespace bethe {

using Rng = std::mt19937_64;

enum class Stratum { Interior, IdentityFiber, PositiveLayer, TorsionLayer, Boundary };

inline const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::Interior: return "interior";
    case Stratum::IdentityFiber: return "identity-fiber";
    case Stratum::PositiveLayer: return "positive-layer";
    case Stratum::TorsionLayer: return "torsion-layer";
    case Stratum::Boundary: return "boundary";
  }
  return "?";
}

inline const std::vector<Stratum>& all_strata() {
  static const std::vector<Stratum> s = {Stratum::Interior, Stratum::IdentityFiber, Stratum::PositiveLayer,
                                         Stratum::TorsionLayer, Stratum::Boundary};
  return s;
}

/// Nonzero rational with small numerator and denominator.
inline Scalar random_rational(Rng& rng, int max_num = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den), sign(0, 1);
  int a = num(rng);
  return Scalar::fraction(sign(rng) ? a : -a, den(rng));
}

/// A point of the torus with e^alpha != 1 for all roots.
inline std::vector<Scalar> random_regular_point(const RootSystem& rs, Rng& rng) {
  for (;;) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < rs.rank(); ++i) c.push_back(random_rational(rng));
    if (centralizer_subsystem(rs, c).empty()) return c;
  }
}

/// Regular h (alpha(h) != 0 for all roots), usable as a Gaudin parameter chi.
inline std::vector<Scalar> random_regular_h(const RootSystem& rs, Rng& rng) {
  for (;;) {
    std::vector<Scalar> h;
    for (std::size_t i = 0; i < rs.rank(); ++i) h.push_back(random_rational(rng));
    bool ok = true;
    for (const auto& a : rs.positive_roots())
      if (pair(a, h).is_zero()) ok = false;
    if (ok) return h;
  }
}

inline std::vector<int> random_weyl_word(const RootSystem& rs, Rng& rng) {
  if (!rs.has_weyl()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, rs.weyl().size() - 1);
  return rs.weyl()[pick(rng)].word;
}

/// A point of the layer, generic in the sense that its centralizer is exactly L.phi.
inline std::vector<Scalar> random_point_on_layer(const RootSystem& rs, const Layer& L, Rng& rng) {
  const std::size_t n = rs.rank();
  // integer cocharacters m with lambda m = 0
  std::vector<IntVec> kernel;
  if (L.lambda.rows() == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      kernel.push_back(e);
    }
  } else {
    ExactMatrix lam(L.lambda.rows(), n);
    for (std::size_t i = 0; i < L.lambda.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) lam(i, j) = Scalar(L.lambda(i, j));
    ExactMatrix ker = nullspace(lam);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ker(r, j).rational().get_den_mpz_t());
      IntVec e(n);
      for (std::size_t j = 0; j < n; ++j) {
        Rational q = ker(r, j).rational() * l;
        e[j] = q.get_num().get_si();
      }
      kernel.push_back(e);
    }
  }
  auto base = L.point_values();
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Scalar> y = base;
    for (const auto& m : kernel) {
      Scalar s = random_rational(rng, 5, 3);
      for (std::size_t j = 0; j < n; ++j)
        if (m[j] != 0) y[j] *= s.pow(m[j]);
    }
    if (centralizer_subsystem(rs, y) == L.phi) return y;
  }
  fail("sampling", "no generic point found on a layer of " + rs.label());
}

/// Random t for a chart; zero coordinates allowed when `boundary` is set.
inline std::vector<Scalar> random_chart_coords(const NestedChart& ch, Rng& rng, bool boundary) {
  std::uniform_int_distribution<int> coin(0, 2);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Scalar> t;
    for (std::size_t p = 0; p < ch.size(); ++p)
      t.push_back(boundary && coin(rng) == 0 ? Scalar(0) : random_rational(rng, 6, 4));
    if (ch.generic(t)) return t;
  }
  return std::vector<Scalar>(ch.size(), Scalar(1));
}

/// Completes (w, I, y) with a random maximal nested set and chart coordinates.
inline XPoint complete_point(const RootSystem& rs, XPoint x, Rng& rng, bool boundary_t) {
  LeviData L = levi_data(rs, x.word, x.I, x.y);
  SubsystemChart Y(rs, L.phi_Y);
  x.S.clear();
  x.t.clear();
  if (Y.rank() == 0) return x;
  auto sets = maximal_nested_sets(Y);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  NestedChart ch(Y, sets[pick(rng)]);
  for (std::size_t p = 0; p < ch.size(); ++p) {
    std::vector<int> v;
    for (std::size_t b = 0; b < Y.rank(); ++b)
      if (ch.element(p) >> b & 1u) v.push_back(static_cast<int>(b));
    x.S.push_back(v);
  }
  x.t = random_chart_coords(ch, rng, boundary_t);
  return x;
}

/// A random chart point of the given class, or nothing if the type has no such stratum
/// (for example, no torsion layers in type A).
inline std::optional<XPoint> random_xpoint(const RootSystem& rs, Stratum kind, Rng& rng, int N = 6) {
  const std::size_t n = rs.rank();
  XPoint x;
  x.word = random_weyl_word(rs, rng);
  for (std::size_t i = 0; i < n; ++i) x.I.push_back(static_cast<int>(i));
  std::uniform_int_distribution<int> coin(0, 1);
  switch (kind) {
    case Stratum::Interior:
      x.y = random_regular_point(rs, rng);
      return x;
    case Stratum::IdentityFiber:
      x.y.assign(n, Scalar(1));
      return complete_point(rs, x, rng, coin(rng) == 1);
    case Stratum::PositiveLayer:
    case Stratum::TorsionLayer: {
      std::vector<Layer> pool;
      for (auto& L : layers(rs, N)) {
        bool torsion = L.dim == 0 && std::any_of(L.point.begin(), L.point.end(), [](long long e) { return e != 0; });
        if (kind == Stratum::PositiveLayer ? (L.dim > 0 && L.codim() > 0) : torsion) pool.push_back(std::move(L));
      }
      if (pool.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      x.y = random_point_on_layer(rs, pool[pick(rng)], rng);
      return complete_point(rs, x, rng, coin(rng) == 1);
    }
    case Stratum::Boundary: {
      std::uniform_int_distribution<unsigned> mask(0, (1u << n) - 2);
      x.I = subset_from_mask(mask(rng), n);
      if (x.I.empty()) return x;
      RootSystem sub = rs.levi(x.I);
      auto ls = layers(sub, N);
      std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
      x.y = random_point_on_layer(sub, ls[pick(rng)], rng);
      return complete_point(rs, x, rng, coin(rng) == 1);
    }
  }
  return std::nullopt;
}

} // namespace bethe
