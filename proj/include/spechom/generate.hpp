#pragma once

// Seeded random instances.  Both the property-test suites and the CLI verify
// command draw from these generators, so they avoid std:: distributions
// (whose output is implementation-defined) and use the raw engine directly:
// a seed then selects the same instances on every platform.

#include "poset.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace spechom {

struct InstanceRng {
  std::mt19937_64 engine;
  explicit InstanceRng(std::uint64_t seed) : engine(seed) {}
  int below(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int num, int den) { return below(den) < num; }
};

// Random DAG closed into a strict order; edge density is chosen so small
// instances still show antichains, disconnected pieces and longer chains.
inline Poset random_poset(InstanceRng& rng, int max_elements, int min_elements = 1) {
  const int n = rng.range(min_elements, max_elements);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> strict;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(2, 5)) strict.emplace_back(i, j);
  return Poset::from_relations(std::move(labels), strict);
}

// Random directed edges (loops implicit) closed reflexively-transitively;
// mutual edges appear naturally, so reduction is exercised.
inline TransitiveDigraph random_transitive_digraph(InstanceRng& rng, int max_vertices,
                                                   int min_vertices = 1) {
  const int n = rng.range(min_vertices, max_vertices);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.chance(1, 4)) edges.emplace_back(i, j);
  return transitive_closure(std::move(labels), edges);
}

}  // namespace spechom
