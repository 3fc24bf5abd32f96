#pragma once

// Layers of the toric arrangement {e^alpha = 1}, their poset, the building set,
// and the boundary strata indexed by subsets of simple roots.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/lattice.hpp"
#include "bethe/rootsys.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

/// A connected component of an intersection of root subtori.
///
/// `lambda` is the HNF basis of the saturated lattice spanned by phi; `chi` gives the
/// exponents (mod N) of the constant character e^lambda_k on the layer; `point` is
/// a representative with e^{alpha_i} = zeta_N^{point[i]}.
struct Layer {
  IntMatrix lambda;
  IntVec chi;
  IntVec point;
  RootSet phi;
  std::size_t dim = 0;
  bool indecomposable = false;
  int N = 6;

  std::vector<Scalar> point_values() const {
    std::vector<Scalar> v;
    for (long long e : point) v.push_back(Scalar::root_of_unity(e, N));
    return v;
  }
  std::size_t codim() const { return lambda.rows(); }

  friend bool operator==(const Layer& a, const Layer& b) { return a.lambda == b.lambda && a.chi == b.chi; }
};

namespace detail {

// Integer coordinates of v in the row basis B (B must contain v in its Z-span).
inline IntVec lattice_coords(const IntMatrix& B, const IntVec& v) {
  const std::size_t r = B.rows(), n = B.cols();
  ExactMatrix aug(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug(i, k) = Scalar(B(k, i));
    aug(i, r) = Scalar(v[i]);
  }
  std::vector<std::size_t> piv;
  ExactMatrix e = rref(aug, &piv);
  require(piv.size() == r && (piv.empty() || piv.back() < r), "precondition", "vector outside the lattice span");
  IntVec c(r);
  for (std::size_t k = 0; k < r; ++k) {
    Rational q = e(k, r).rational();
    require(q.get_den() == 1, "precondition", "vector outside the lattice");
    c[k] = q.get_num().get_si();
  }
  return c;
}

// A point of the torus whose restriction to the saturated lattice `lambda` is chi.
inline IntVec extend_character(const IntMatrix& lambda, const IntVec& chi, int N) {
  const std::size_t n = lambda.cols();
  if (lambda.rows() == 0) return IntVec(n, 0);
  SmithForm s = smith_normal_form(lambda);
  for (long long d : s.divisors) require(d == 1, "precondition", "lattice is not saturated");
  IntVec a(n, 0);
  for (std::size_t k = 0; k < lambda.rows(); ++k)
    for (std::size_t j = 0; j < lambda.rows(); ++j) a[k] += s.U(k, j) * chi[j];
  IntVec e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long v = 0;
    for (std::size_t j = 0; j < n; ++j) v += s.V(i, j) * a[j];
    e[i] = mod(v, N);
  }
  return e;
}

} // namespace detail

/// Exponent (mod N) of e^alpha at the point with exponents `point`.
inline long long character_exponent(const Root& a, const IntVec& point, int N) {
  return detail::mod(dot(a, point), N);
}

/// All layers of the arrangement of root subtori, ordered by codimension, then
/// lattice, then character. The full torus comes first.
inline std::vector<Layer> layers(const RootSystem& rs, int N = 6, std::size_t max_rank = 4) {
  require(rs.rank() <= max_rank, "rank_bound",
          "layer enumeration is limited to rank " + std::to_string(max_rank) + " (got " + rs.label() + ")");
  const std::size_t n = rs.rank();
  const auto& pos = rs.positive_roots();
  const std::size_t P = pos.size();

  // Flats: sets of positive roots lying in the span of some subset of roots.
  auto span_mask = [&](const std::vector<std::size_t>& gens) {
    IntMatrix m(0, n);
    for (auto g : gens) m.append_row(pos[g]);
    std::size_t r = gens.empty() ? 0 : int_rank(m);
    std::vector<bool> mask(P, false);
    for (std::size_t k = 0; k < P; ++k) {
      if (gens.empty()) break;
      IntMatrix m2 = m;
      m2.append_row(pos[k]);
      mask[k] = int_rank(m2) == r;
    }
    return mask;
  };
  std::set<std::vector<bool>> flats;
  std::vector<std::vector<bool>> frontier{std::vector<bool>(P, false)};
  flats.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& f : frontier) {
      std::vector<std::size_t> gens;
      for (std::size_t k = 0; k < P; ++k)
        if (f[k]) gens.push_back(k);
      for (std::size_t k = 0; k < P; ++k) {
        if (f[k]) continue;
        auto g2 = gens;
        g2.push_back(k);
        auto m = span_mask(g2);
        if (flats.insert(m).second) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }

  struct Key {
    std::size_t codim;
    std::vector<long long> lattice;
    IntVec chi;
    bool operator<(const Key& o) const { return std::tie(codim, lattice, chi) < std::tie(o.codim, o.lattice, o.chi); }
  };
  std::map<Key, Layer> out;

  for (const auto& f : flats) {
    std::vector<Root> V;
    for (std::size_t k = 0; k < P; ++k)
      if (f[k]) V.push_back(pos[k]);
    IntMatrix vm(0, n);
    for (const auto& a : V) vm.append_row(a);
    IntMatrix lambda = V.empty() ? IntMatrix(0, n) : saturation(vm);
    const std::size_t r = lambda.rows();
    std::vector<IntVec> coords;
    for (const auto& a : V) coords.push_back(detail::lattice_coords(lambda, a));

    // Candidate characters on lambda: components of intersections over bases B of the flat.
    std::set<IntVec> chis;
    if (r == 0) {
      chis.insert(IntVec{});
    } else {
      std::vector<bool> sel(V.size(), false);
      std::fill(sel.begin(), sel.begin() + static_cast<long>(r), true);
      do {
        IntMatrix B(0, n);
        for (std::size_t k = 0; k < V.size(); ++k)
          if (sel[k]) B.append_row(V[k]);
        if (int_rank(B) != r) continue;
        for (const auto& e : torsion_components(B, N)) {
          IntVec chi(r);
          for (std::size_t k = 0; k < r; ++k) chi[k] = detail::mod(dot(lambda.row(k), e), N);
          chis.insert(chi);
        }
      } while (std::prev_permutation(sel.begin(), sel.end()));
    }

    for (const auto& chi : chis) {
      RootSet phi;
      for (std::size_t k = 0; k < V.size(); ++k)
        if (detail::mod(dot(coords[k], chi), N) == 0) {
          phi.push_back(V[k]);
          phi.push_back(RootSystem::negate(V[k]));
        }
      phi = normalize(phi);
      if (root_rank(phi, n) != r) continue;
      Layer L;
      L.lambda = lambda;
      L.chi = chi;
      L.point = detail::extend_character(lambda, chi, N);
      L.phi = phi;
      L.dim = n - r;
      L.indecomposable = is_irreducible(rs, phi);
      L.N = N;
      std::vector<long long> flat;
      for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(lambda(i, j));
      out.emplace(Key{r, flat, chi}, L);
    }
  }
  std::vector<Layer> result;
  for (auto& [k, L] : out) result.push_back(std::move(L));
  return result;
}

/// a is contained in b as subvarieties of the torus.
inline bool layer_contained_in(const Layer& a, const Layer& b) {
  if (b.lambda.rows() > a.lambda.rows()) return false;
  // b's lattice must lie in a's lattice.
  IntMatrix both = a.lambda;
  for (std::size_t k = 0; k < b.lambda.rows(); ++k) both.append_row(b.lambda.row(k));
  if (both.rows() > 0 && int_rank(both) != a.lambda.rows()) return false;
  for (std::size_t k = 0; k < b.lambda.rows(); ++k)
    if (detail::mod(dot(b.lambda.row(k), a.point) - b.chi[k], a.N) != 0) return false;
  return true;
}

/// Pairs (i, j) with layers[i] strictly inside layers[j] and nothing in between.
inline std::vector<std::pair<std::size_t, std::size_t>> layer_covers(const std::vector<Layer>& ls) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = 0; j < ls.size(); ++j) {
      if (i == j || !layer_contained_in(ls[i], ls[j]) || ls[i] == ls[j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < ls.size() && cover; ++k)
        if (k != i && k != j && layer_contained_in(ls[i], ls[k]) && layer_contained_in(ls[k], ls[j])) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

inline bool is_indecomposable(const RootSystem& rs, const Layer& L) { return is_irreducible(rs, L.phi); }

inline std::vector<Layer> building_set(const RootSystem& rs, int N = 6) {
  std::vector<Layer> out;
  for (auto& L : layers(rs, N))
    if (L.indecomposable) out.push_back(std::move(L));
  return out;
}

/// Elementary divisors > 1 of the lattice spanned by phi inside its saturation.
inline std::vector<long long> gamma_group(const RootSet& phi, std::size_t n) {
  if (phi.empty()) return {};
  IntMatrix m(0, n);
  for (const auto& a : phi) m.append_row(a);
  return torsion_divisors(m);
}

inline std::vector<long long> gamma_group(const Layer& L) { return gamma_group(L.phi, L.point.size()); }

/// A layer of the Levi subsystem Phi_I inside the torus T_I; coordinates are local to I.
struct BoundaryStratum {
  std::vector<int> I;
  Layer layer;
};

inline std::vector<int> subset_from_mask(unsigned mask, std::size_t n) {
  std::vector<int> I;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) I.push_back(static_cast<int>(i));
  return I;
}

/// Global root coordinates of a root given in the local coordinates of Phi_I.
inline Root embed_levi_root(const Root& local, const std::vector<int>& I, std::size_t n) {
  Root g(n, 0);
  for (std::size_t a = 0; a < I.size(); ++a) g[static_cast<std::size_t>(I[a])] = local[a];
  return g;
}

inline std::vector<BoundaryStratum> boundary_strata(const RootSystem& rs, int N = 6) {
  std::vector<BoundaryStratum> out;
  const std::size_t n = rs.rank();
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (unsigned m : masks) {
    std::vector<int> I = subset_from_mask(m, n);
    RootSystem sub = rs.levi(I);
    for (auto& L : layers(sub, N)) out.push_back({I, std::move(L)});
  }
  return out;
}

} // namespace bethe
