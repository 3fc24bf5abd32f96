#pragma once

// JSON views of library objects. Scalars are written as exact strings and all
// indices in JSON are 1-based (simple root labels).

#include <string>
#include <vector>

#include <json.hpp>

#include "bethe/arrangement.hpp"
#include "bethe/errors.hpp"
#include "bethe/hamiltonians.hpp"
#include "bethe/nested.hpp"
#include "bethe/rootsys.hpp"

namespace bethe::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Scalar& s) { return s.to_string(); }

inline json to_json(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

inline json to_json(const ExactMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    a.push_back(row);
  }
  return a;
}

inline json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  return a;
}

inline json one_based(const std::vector<int>& v) {
  json a = json::array();
  for (int k : v) a.push_back(k + 1);
  return a;
}

inline json envelope(const RootSystem& rs, int N, const std::string& kind) {
  return {{"schema", kSchemaVersion}, {"kind", kind}, {"type", rs.label()}, {"field_order", N}};
}

inline json roots_json(const RootSystem& rs, int N) {
  json j = envelope(rs, N, "roots");
  j["rank"] = rs.rank();
  j["cartan"] = to_json(rs.cartan());
  json pos = json::array();
  for (const auto& a : rs.positive_roots()) pos.push_back(a);
  j["positive_roots"] = pos;
  j["counts"] = {{"roots", rs.roots().size()}, {"positive", rs.positive_roots().size()}};
  if (rs.has_weyl()) j["counts"]["weyl"] = rs.weyl().size();
  return j;
}

inline json layer_json(const Layer& L) {
  json phi = json::array();
  for (const auto& a : L.phi) phi.push_back(a);
  return {{"dim", L.dim},
          {"lambda", to_json(L.lambda)},
          {"character", L.chi},
          {"point", to_json(L.point_values())},
          {"phi", phi},
          {"indecomposable", L.indecomposable},
          {"gamma", gamma_group(L)}};
}

inline json layers_json(const RootSystem& rs, int N, const std::vector<Layer>& ls, const std::string& kind) {
  json j = envelope(rs, N, kind);
  json a = json::array();
  for (std::size_t k = 0; k < ls.size(); ++k) {
    json l = layer_json(ls[k]);
    l["id"] = k;
    a.push_back(l);
  }
  j["layers"] = a;
  json covers = json::array();
  for (auto [lo, hi] : layer_covers(ls)) covers.push_back({lo, hi});
  j["covers"] = covers;
  return j;
}

/// Hasse diagram of the layer poset, smaller layers at the bottom.
inline std::string layers_dot(const RootSystem& rs, const std::vector<Layer>& ls) {
  std::string s = "digraph layers {\n  label=\"" + rs.label() + "\";\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < ls.size(); ++k) {
    std::string pt;
    for (const auto& v : ls[k].point_values()) pt += (pt.empty() ? "" : ", ") + v.to_string();
    s += "  L" + std::to_string(k) + " [label=\"dim " + std::to_string(ls[k].dim) + "\\n|Phi| " +
         std::to_string(ls[k].phi.size()) + "\\n(" + pt + ")\"" + (ls[k].indecomposable ? ", shape=box" : "") +
         "];\n";
  }
  for (auto [lo, hi] : layer_covers(ls)) s += "  L" + std::to_string(lo) + " -> L" + std::to_string(hi) + ";\n";
  return s + "}\n";
}

inline json nested_set_json(const NestedSet& S) {
  // as a forest: each element with its maximal proper sub-elements
  json a = json::array();
  for (VertexSet e : S.elements) {
    json children = json::array();
    for (VertexSet c : S.elements) {
      if (c == e || (c & e) != c) continue;
      bool maximal = true;
      for (VertexSet d : S.elements)
        if (d != e && d != c && (d & e) == d && (c & d) == c) maximal = false;
      if (maximal) children.push_back(one_based(vertex_list(c)));
    }
    a.push_back({{"element", one_based(vertex_list(e))}, {"children", children}});
  }
  return a;
}

inline json nested_sets_json(const RootSystem& rs, int N) {
  SubsystemChart Y(rs, normalize(RootSet(rs.roots().begin(), rs.roots().end())));
  json j = envelope(rs, N, "nested-sets");
  json a = json::array();
  for (const auto& S : maximal_nested_sets(Y)) a.push_back(nested_set_json(S));
  j["nested_sets"] = a;
  j["count"] = a.size();
  return j;
}

inline json boundary_strata_json(const RootSystem& rs, int N) {
  json j = envelope(rs, N, "boundary-strata");
  json a = json::array();
  for (const auto& b : boundary_strata(rs, N)) {
    json l = layer_json(b.layer);
    l["I"] = one_based(b.I);
    a.push_back(l);
  }
  j["strata"] = a;
  return j;
}

inline json subspace_json(const RootSystem& rs, int N, const ExactMatrix& rref) {
  json j = envelope(rs, N, "subspace");
  j["basis_labels"] = basis_labels(rs);
  j["rref"] = to_json(rref);
  j["dim"] = rref.rows();
  return j;
}

inline json point_json(const XPoint& x) {
  json S = json::array();
  for (const auto& s : x.S) S.push_back(one_based(s));
  return {{"w", one_based(x.word)}, {"I", one_based(x.I)}, {"y", to_json(x.y)}, {"S", S}, {"t", to_json(x.t)}};
}

namespace detail {

inline const json& field(const json& j, const char* name) {
  require(j.contains(name), "schema", std::string("missing field '") + name + "'");
  return j.at(name);
}

inline std::vector<int> index_list(const json& j, const char* name, std::size_t n) {
  require(j.is_array(), "schema", std::string("'") + name + "' must be an array of indices");
  std::vector<int> out;
  for (const auto& v : j) {
    require(v.is_number_integer(), "schema", std::string("'") + name + "' entries must be integers");
    int k = v.get<int>();
    require(k >= 1 && static_cast<std::size_t>(k) <= n, "schema",
            std::string("'") + name + "' entry " + std::to_string(k) + " is outside 1.." + std::to_string(n));
    out.push_back(k - 1);
  }
  return out;
}

inline std::vector<Scalar> scalar_list(const json& j, const char* name, int N) {
  require(j.is_array(), "schema", std::string("'") + name + "' must be an array of scalar strings");
  std::vector<Scalar> out;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      out.emplace_back(v.get<long long>());
      continue;
    }
    require(v.is_string(), "schema", std::string("'") + name + "' entries must be strings");
    out.push_back(Scalar::parse(v.get<std::string>(), N));
  }
  return out;
}

} // namespace detail

/// Parses an XPoint spec; structural problems raise "schema", semantic ones are left
/// to XPointData (invalid_point, invalid_nested_set, chart_violation).
inline XPoint parse_point(const json& j, const RootSystem& rs, int N) {
  require(j.is_object(), "schema", "point spec must be a JSON object");
  const std::size_t n = rs.rank();
  XPoint x;
  x.word = detail::index_list(detail::field(j, "w"), "w", n);
  x.I = detail::index_list(detail::field(j, "I"), "I", n);
  x.y = detail::scalar_list(detail::field(j, "y"), "y", N);
  const json& S = detail::field(j, "S");
  require(S.is_array(), "schema", "'S' must be an array of vertex sets");
  for (const auto& s : S) x.S.push_back(detail::index_list(s, "S", n));
  x.t = detail::scalar_list(detail::field(j, "t"), "t", N);
  require(x.y.size() == x.I.size(), "schema", "'y' needs one value per index in 'I'");
  return x;
}

} // namespace bethe::io
