#pragma once

// Multiplicative edge labelings on a poset's comparability graph, and the
// coboundary decision: either every label splits as a quotient of vertex
// potentials (lambda_ij = g_j / g_i), in which case a spanning tree recovers
// the potentials, or some closed walk has holonomy different from 1, in
// which case that walk is returned as a certificate.
//
// The coefficient group is the multiplicative group of nonzero rationals;
// exact arithmetic throughout.

#include "complex.hpp"
#include "poset.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spechom {

using Rational = boost::multiprecision::cpp_rational;

// One nonzero rational label per strictly comparable pair (stored on the
// ascending orientation; descending traversals use the inverse).
class EdgeLabeling {
 public:
  explicit EdgeLabeling(Poset p) : poset_(std::move(p)) {
    for (auto [i, j] : poset_.strict_pairs()) labels_[{i, j}] = 1;
  }

  // lambda_ij = g_j / g_i for given nonzero vertex potentials g.
  static EdgeLabeling from_potentials(Poset p, const std::vector<Rational>& g) {
    if (g.size() != p.size())
      throw std::invalid_argument("from_potentials: one potential per element required");
    for (const Rational& v : g)
      if (v == 0) throw std::invalid_argument("from_potentials: potentials must be nonzero");
    EdgeLabeling e(std::move(p));
    for (auto& [pair, value] : e.labels_) {
      value = Rational(g[std::size_t(pair.second)] / g[std::size_t(pair.first)]);
    }
    return e;
  }

  const Poset& poset() const { return poset_; }

  const Rational& label(int i, int j) const {
    auto it = labels_.find({i, j});
    if (it == labels_.end())
      throw std::invalid_argument("label: (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not an ascending comparable pair");
    return it->second;
  }

  void set(int i, int j, const Rational& value) {
    if (value == 0) throw std::invalid_argument("set: labels must be nonzero");
    auto it = labels_.find({i, j});
    if (it == labels_.end())
      throw std::invalid_argument("set: (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not an ascending comparable pair");
    it->second = value;
  }

  // Multiplicative step from one vertex to a strictly comparable neighbour.
  Rational step(int from, int to) const {
    if (poset_.less(from, to)) return label(from, to);
    if (poset_.less(to, from)) return Rational(1 / label(to, from));
    throw std::invalid_argument("step: vertices are not strictly comparable");
  }

  const std::map<std::pair<int, int>, Rational>& labels() const { return labels_; }

  bool operator==(const EdgeLabeling& other) const = default;

 private:
  Poset poset_;
  std::map<std::pair<int, int>, Rational> labels_;
};

// Product of labels along a closed walk (a vertex sequence whose first and
// last entries agree), inverting labels traversed downward.
inline Rational holonomy(const EdgeLabeling& e, const std::vector<int>& walk) {
  if (walk.empty()) return 1;
  if (walk.front() != walk.back()) throw std::invalid_argument("holonomy: walk is not closed");
  Rational h = 1;
  for (std::size_t s = 0; s + 1 < walk.size(); ++s)
    h = Rational(h * e.step(walk[s], walk[s + 1]));
  return h;
}

// Which end of each comparable pair the spanning tree explores first.
enum class TreeOrder { ascending, descending };

struct Certificate {
  std::vector<int> walk;  // closed vertex sequence, walk.front() == walk.back()
  Rational holonomy;      // != 1
  // Set when an ambient poset was supplied: whether the walk is a boundary
  // among the ambient order complex's triangles.  A bounding walk is a hard
  // coherence violation; a non-bounding one escapes into ambient homology.
  std::optional<bool> bounds_in_ambient;
};

struct Trivialization {
  std::optional<std::vector<Rational>> potentials;  // one per element on success
  std::optional<Certificate> certificate;           // on failure
  bool success() const { return potentials.has_value(); }
};

namespace detail {

// Fundamental cycle of the off-tree pair (i, j): the tree path i -> j
// followed by the direct step back to i.
inline std::vector<int> fundamental_cycle(int i, int j, const std::vector<int>& parent,
                                          const std::vector<int>& depth) {
  std::vector<int> up_i{i}, up_j{j};
  int a = i, b = j;
  while (depth[std::size_t(a)] > depth[std::size_t(b)]) up_i.push_back(a = parent[std::size_t(a)]);
  while (depth[std::size_t(b)] > depth[std::size_t(a)]) up_j.push_back(b = parent[std::size_t(b)]);
  while (a != b) {
    up_i.push_back(a = parent[std::size_t(a)]);
    up_j.push_back(b = parent[std::size_t(b)]);
  }
  std::vector<int> walk(up_i);  // i ... lca
  for (std::size_t t = up_j.size() - 1; t-- > 0;) walk.push_back(up_j[t]);  // ... j
  walk.push_back(i);
  return walk;
}

}  // namespace detail

inline Trivialization trivialize(const EdgeLabeling& e, TreeOrder order = TreeOrder::ascending) {
  const Poset& p = e.poset();
  const int n = int(p.size());
  std::vector<int> parent(std::size_t(n), -1), depth(std::size_t(n), 0);
  std::vector<char> visited(std::size_t(n), 0);
  std::vector<Rational> g(std::size_t(n), 1);

  for (int root = 0; root < n; ++root) {
    if (visited[std::size_t(root)]) continue;
    visited[std::size_t(root)] = 1;  // the least element of each component anchors g = 1
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int step = 0; step < n; ++step) {
        int v = order == TreeOrder::ascending ? step : n - 1 - step;
        if (visited[std::size_t(v)] || !p.comparable(u, v)) continue;
        visited[std::size_t(v)] = 1;
        parent[std::size_t(v)] = u;
        depth[std::size_t(v)] = depth[std::size_t(u)] + 1;
        g[std::size_t(v)] = Rational(g[std::size_t(u)] * e.step(u, v));
        queue.push_back(v);
      }
    }
  }

  std::vector<std::pair<int, int>> pairs = p.strict_pairs();
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) {
    if (e.label(i, j) == Rational(g[std::size_t(j)] / g[std::size_t(i)])) continue;
    std::vector<int> walk = detail::fundamental_cycle(i, j, parent, depth);
    Rational h = holonomy(e, walk);
    if (abs(h) < 1) {  // canonical direction: prefer the larger magnitude
      std::reverse(walk.begin(), walk.end());
      h = Rational(1 / h);
    }
    // canonical starting point: the least vertex on the walk
    std::size_t at = 0;
    for (std::size_t t = 0; t + 1 < walk.size(); ++t)
      if (walk[t] < walk[at]) at = t;
    std::vector<int> rotated;
    for (std::size_t t = 0; t + 1 < walk.size(); ++t)
      rotated.push_back(walk[(at + t) % (walk.size() - 1)]);
    rotated.push_back(rotated.front());
    return {std::nullopt, Certificate{std::move(rotated), std::move(h), std::nullopt}};
  }
  return {std::move(g), std::nullopt};
}

// Ambient variant: the labeled poset's elements embed into a larger poset
// via `inclusion` (an order embedding).  A violating walk is additionally
// classified by whether it bounds among the ambient complex's triangles;
// only bounding walks contradict coherent ambient data, while non-bounding
// ones carry nontrivial ambient homology and are merely reported.
inline Trivialization trivialize(const EdgeLabeling& e, const Poset& ambient,
                                 const std::vector<int>& inclusion,
                                 TreeOrder order = TreeOrder::ascending) {
  const Poset& p = e.poset();
  const int n = int(p.size());
  if (inclusion.size() != p.size())
    throw std::invalid_argument("trivialize: one ambient image per element required");
  std::vector<char> seen(ambient.size(), 0);
  for (int v : inclusion) {
    if (v < 0 || std::size_t(v) >= ambient.size() || seen[std::size_t(v)])
      throw std::invalid_argument("trivialize: inclusion is not injective into the ambient poset");
    seen[std::size_t(v)] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j) != ambient.less(inclusion[std::size_t(i)], inclusion[std::size_t(j)]))
        throw std::invalid_argument("trivialize: inclusion is not an order embedding");

  Trivialization t = trivialize(e, order);
  if (!t.success()) {
    SimplicialComplex y = order_complex(ambient, 2);
    std::vector<Int> z(y.count(1), 0);
    const std::vector<int>& walk = t.certificate->walk;
    for (std::size_t s = 0; s + 1 < walk.size(); ++s) {
      int a = inclusion[std::size_t(walk[s])], b = inclusion[std::size_t(walk[s + 1])];
      std::ptrdiff_t idx = y.index_of(1, {std::min(a, b), std::max(a, b)});
      z[std::size_t(idx)] += a < b ? 1 : -1;
    }
    t.certificate->bounds_in_ambient = solve_boundary(y, 2, z).has_value();
  }
  return t;
}

}  // namespace spechom
