#pragma once

// JSON schemas for the combinatorial inputs and results.
//
//   poset       {"kind":"poset","elements":[...],"less_than":[[i,j],...]}
//   digraph     {"kind":"digraph","vertices":[...],"edges":[[i,j],...]}
//   expression  {"kind":"tensor","factors":[...]} | {"kind":"join","bottom":..,"top":..}
//               | {"kind":"suspension","of":..} | {"kind":"stabilize","of":..}
//               | {"kind":"nest"} | poset | digraph
//   labeling    {"pairs":[[i,j,"p/q"],...]}
//   complex     {"vertices":[...],"simplices":[[...],...]}
//   groups      {"rank":r,"torsion":[d1,...]} and the grammar string "Z^r + Z/d"
//
// Serialization is canonical: keys are emitted in sorted order, posets list
// all strict pairs, digraphs list their full transitive closure without
// loops, complexes list their inclusion-maximal simplices, and expression
// tensors are flattened into factor lists.  Re-parsing emitted JSON and
// serializing again reproduces the bytes exactly.  Parse errors carry the
// path of the offending value.

#include "abelian.hpp"
#include "cocycle.hpp"
#include "complex.hpp"
#include "engine.hpp"
#include "poset.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spechom {

using Json = nlohmann::json;

struct JsonSchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void schema_fail(const std::string& where, const std::string& what) {
  throw JsonSchemaError(where + ": " + what);
}

inline void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_fail(where, "expected an object");
}

inline const Json& expect_member(const Json& j, const char* key, const std::string& where) {
  expect_object(j, where);
  auto it = j.find(key);
  if (it == j.end()) schema_fail(where, std::string("missing member '") + key + "'");
  return *it;
}

inline std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_fail(where, "expected a string");
  return j.get<std::string>();
}

inline int expect_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_fail(where, "expected an integer index");
  return j.get<int>();
}

inline std::vector<std::string> expect_labels(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_fail(where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(expect_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::pair<int, int>> expect_pairs(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_fail(where, "expected an array of index pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Json& entry = j[i];
    if (!entry.is_array() || entry.size() != 2) schema_fail(at, "expected a pair [i, j]");
    out.emplace_back(expect_index(entry[0], at + "[0]"), expect_index(entry[1], at + "[1]"));
  }
  return out;
}

}  // namespace detail

// --- posets -----------------------------------------------------------------

inline Json poset_to_json(const Poset& p) {
  Json pairs = Json::array();
  for (auto [i, j] : p.strict_pairs()) pairs.push_back(Json::array({i, j}));
  return Json{{"kind", "poset"}, {"elements", p.labels()}, {"less_than", pairs}};
}

inline Poset poset_from_json(const Json& j, const std::string& where = "poset") {
  const std::string kind = detail::expect_string(detail::expect_member(j, "kind", where), where + ".kind");
  if (kind != "poset") detail::schema_fail(where + ".kind", "expected \"poset\", got \"" + kind + "\"");
  auto labels = detail::expect_labels(detail::expect_member(j, "elements", where), where + ".elements");
  auto pairs = detail::expect_pairs(detail::expect_member(j, "less_than", where), where + ".less_than");
  try {
    return Poset::from_relations(std::move(labels), pairs);
  } catch (const std::invalid_argument& e) {
    detail::schema_fail(where, e.what());
  }
}

// --- digraphs ---------------------------------------------------------------

inline Json digraph_to_json(const TransitiveDigraph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges())
    if (i != j) edges.push_back(Json::array({i, j}));
  return Json{{"kind", "digraph"}, {"vertices", g.labels()}, {"edges", edges}};
}

inline TransitiveDigraph digraph_from_json(const Json& j, const std::string& where = "digraph") {
  const std::string kind = detail::expect_string(detail::expect_member(j, "kind", where), where + ".kind");
  if (kind != "digraph")
    detail::schema_fail(where + ".kind", "expected \"digraph\", got \"" + kind + "\"");
  auto labels = detail::expect_labels(detail::expect_member(j, "vertices", where), where + ".vertices");
  auto edges = detail::expect_pairs(detail::expect_member(j, "edges", where), where + ".edges");
  try {
    return transitive_closure(std::move(labels), edges);
  } catch (const std::invalid_argument& e) {
    detail::schema_fail(where, e.what());
  }
}

// --- space expressions -------------------------------------------------------

inline Json expr_to_json(const SpaceExpr& e);

namespace detail {

inline void flatten_tensor_json(const SpaceExpr& e, Json& factors) {
  if (const auto* t = std::get_if<TensorNode>(&e.node())) {
    flatten_tensor_json(*t->left, factors);
    flatten_tensor_json(*t->right, factors);
  } else {
    factors.push_back(expr_to_json(e));
  }
}

}  // namespace detail

inline Json expr_to_json(const SpaceExpr& e) {
  return std::visit(
      detail::Overloaded{
          [](const DigraphAlgebraNode& n) { return digraph_to_json(n.graph); },
          [](const FinitePosetNode& n) { return poset_to_json(n.poset); },
          [](const ContinuousNestNode&) { return Json{{"kind", "nest"}}; },
          [&](const TensorNode&) {
            Json factors = Json::array();
            detail::flatten_tensor_json(e, factors);
            return Json{{"kind", "tensor"}, {"factors", factors}};
          },
          [](const JoinNode& n) {
            return Json{{"kind", "join"},
                        {"bottom", expr_to_json(*n.bottom)},
                        {"top", expr_to_json(*n.top)}};
          },
          [](const SuspensionNode& n) {
            return Json{{"kind", "suspension"}, {"of", expr_to_json(*n.of)}};
          },
          [](const StabilizeNode& n) {
            return Json{{"kind", "stabilize"}, {"of", expr_to_json(*n.of)}};
          },
      },
      e.node());
}

inline Json expr_to_json(const SpaceExprPtr& e) { return expr_to_json(*e); }

inline SpaceExprPtr expr_from_json(const Json& j, const std::string& where = "expression") {
  const std::string kind = detail::expect_string(detail::expect_member(j, "kind", where), where + ".kind");
  if (kind == "poset") return finite_poset(poset_from_json(j, where));
  if (kind == "digraph") return digraph_algebra(digraph_from_json(j, where));
  if (kind == "nest") return continuous_nest();
  if (kind == "tensor") {
    const Json& factors = detail::expect_member(j, "factors", where);
    if (!factors.is_array() || factors.size() < 2)
      detail::schema_fail(where + ".factors", "expected an array of at least two factors");
    SpaceExprPtr acc = expr_from_json(factors[0], where + ".factors[0]");
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = tensor(std::move(acc), expr_from_json(factors[i], where + ".factors[" + std::to_string(i) + "]"));
    return acc;
  }
  if (kind == "join")
    return join(expr_from_json(detail::expect_member(j, "bottom", where), where + ".bottom"),
                expr_from_json(detail::expect_member(j, "top", where), where + ".top"));
  if (kind == "suspension")
    return suspension(expr_from_json(detail::expect_member(j, "of", where), where + ".of"));
  if (kind == "stabilize")
    return stabilize(expr_from_json(detail::expect_member(j, "of", where), where + ".of"));
  detail::schema_fail(where + ".kind", "unknown kind \"" + kind + "\"");
}

// --- edge labelings -----------------------------------------------------------

inline Json labeling_to_json(const EdgeLabeling& e) {
  Json pairs = Json::array();
  for (const auto& [key, value] : e.labels())
    pairs.push_back(Json::array({key.first, key.second, value.str()}));
  return Json{{"pairs", pairs}};
}

inline Rational rational_from_string(const std::string& s, const std::string& where) {
  const auto bad = [&]() { detail::schema_fail(where, "expected a rational \"p/q\", got \"" + s + "\""); };
  const auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) bad();
    if (s[from] == '-') ++from;
    if (from >= to) bad();
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') bad();
  };
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    digits(0, s.size());
    return Rational(Int(s));
  }
  digits(0, slash);
  digits(slash + 1, s.size());
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) detail::schema_fail(where, "zero denominator in \"" + s + "\"");
  return Rational(num, den);
}

inline EdgeLabeling labeling_from_json(const Poset& p, const Json& j,
                                       const std::string& where = "labels") {
  const Json& pairs = detail::expect_member(j, "pairs", where);
  if (!pairs.is_array()) detail::schema_fail(where + ".pairs", "expected an array of triples");
  EdgeLabeling e(p);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = where + ".pairs[" + std::to_string(i) + "]";
    const Json& entry = pairs[i];
    if (!entry.is_array() || entry.size() != 3)
      detail::schema_fail(at, "expected a triple [i, j, \"p/q\"]");
    const int a = detail::expect_index(entry[0], at + "[0]");
    const int b = detail::expect_index(entry[1], at + "[1]");
    const Rational v = rational_from_string(detail::expect_string(entry[2], at + "[2]"), at + "[2]");
    try {
      e.set(a, b, v);
    } catch (const std::invalid_argument& err) {
      detail::schema_fail(at, err.what());
    }
  }
  return e;
}

// --- simplicial complexes -------------------------------------------------------

inline Json complex_to_json(const SimplicialComplex& k) {
  // Inclusion-maximal simplices, dimension-major, each level already sorted.
  Json simplices = Json::array();
  for (int d = 0; d <= k.dimension(); ++d) {
    std::set<std::vector<int>> covered;
    for (const std::vector<int>& s : k.simplices(d + 1)) {
      std::vector<int> face(s.begin() + 1, s.end());
      for (std::size_t drop = 0;; ++drop) {
        covered.insert(face);
        if (drop == s.size() - 1) break;
        face[drop] = s[drop];
      }
    }
    for (const std::vector<int>& s : k.simplices(d))
      if (!covered.count(s)) simplices.push_back(s);
  }
  return Json{{"vertices", k.vertex_labels()}, {"simplices", simplices}};
}

inline SimplicialComplex complex_from_json(const Json& j, const std::string& where = "complex") {
  auto labels = detail::expect_labels(detail::expect_member(j, "vertices", where), where + ".vertices");
  const Json& arr = detail::expect_member(j, "simplices", where);
  if (!arr.is_array()) detail::schema_fail(where + ".simplices", "expected an array of simplices");
  std::vector<std::vector<int>> simplices;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + ".simplices[" + std::to_string(i) + "]";
    if (!arr[i].is_array()) detail::schema_fail(at, "expected an array of vertex indices");
    std::vector<int> s;
    for (std::size_t v = 0; v < arr[i].size(); ++v)
      s.push_back(detail::expect_index(arr[i][v], at + "[" + std::to_string(v) + "]"));
    simplices.push_back(std::move(s));
  }
  try {
    return SimplicialComplex::from_simplices(std::move(labels), simplices);
  } catch (const std::invalid_argument& e) {
    detail::schema_fail(where, e.what());
  }
}

// --- groups and signatures -------------------------------------------------------

inline Json group_to_json(const FgAbGroup& g) {
  Json torsion = Json::array();
  for (const Int& d : g.torsion()) torsion.push_back(d.convert_to<long long>());
  return Json{{"rank", g.rank()}, {"torsion", torsion}};
}

inline Json homology_to_json(const HomologySignature& s, std::size_t up_to) {
  Json j = Json::object();
  for (std::size_t d = 0; d <= up_to; ++d) j["H" + std::to_string(d)] = s.at(d).to_string();
  return j;
}

// Canonical text form: two-space indent, sorted keys, trailing newline.
inline std::string to_json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spechom
