#pragma once

// Named instances used by the bundled data files, the documentation and the
// test suites.  Keeping them as code (rather than only as JSON) gives every
// layer one source of truth.

#include "complex.hpp"
#include "poset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace spechom::instances {

inline Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> strict;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) strict.emplace_back(i, i + 1);
  return Poset::from_relations(std::move(labels), strict);
}

inline Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return Poset::from_relations(std::move(labels), {});
}

// Two minimal elements under two maximal ones; the comparability graph is a
// 4-cycle, the order complex a circle.
inline Poset four_cycle_poset() {
  return Poset::from_relations({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// The 4-cycle digraph: matrix units e13, e14, e23, e24 above the diagonal.
// Its reduced graph is four_cycle_poset up to labels.
inline TransitiveDigraph d4_digraph() {
  return transitive_closure({"1", "2", "3", "4"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Alternating zigzag x0 < x1 > x2 < x3 > ...; the comparability graph is a
// path, so all higher homology vanishes.
inline Poset staircase(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> strict;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    if (i % 2 == 1) strict.emplace_back(i - 1, i);
    else strict.emplace_back(i, i - 1);
  }
  return Poset::from_relations(std::move(labels), strict);
}

// Four chains glued at their endpoints around a square, orientations
// alternating: corners c0, c2 are minima and c1, c3 maxima.  `interior` is
// the number of points strictly inside each side.
inline Poset fibre_square(int interior = 1) {
  std::vector<std::string> labels = {"c0", "c1", "c2", "c3"};
  std::vector<std::pair<int, int>> strict;
  // side s runs from corner lo(s) up to corner hi(s)
  const int lo[4] = {0, 2, 2, 0};
  const int hi[4] = {1, 1, 3, 3};
  int next = 4;
  for (int s = 0; s < 4; ++s) {
    int prev = lo[s];
    for (int k = 0; k < interior; ++k, ++next) {
      labels.push_back("m" + std::to_string(s) + "_" + std::to_string(k));
      strict.emplace_back(prev, next);
      prev = next;
    }
    strict.emplace_back(prev, hi[s]);
  }
  return Poset::from_relations(std::move(labels), strict);
}

// Triangulated Klein bottle: a 3x3 grid of squares, each split into two
// triangles along its up-right diagonal, with the top edge glued straight to
// the bottom ((i,3) ~ (i,0)) and the right edge glued to the left with a
// flip ((3,j) ~ (0,3-j)).  Nine vertices, 27 edges, 18 triangles; the glued
// surface is closed and nonorientable with Euler characteristic zero (the
// tests verify all of that directly rather than trusting this comment).
inline SimplicialComplex klein_complex() {
  const int N = 3;
  auto vertex = [&](int i, int j) {
    if (i == N) { i = 0; j = N - j; }
    if (j == N) j = 0;
    return N * i + j;
  };
  std::vector<std::string> labels;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      labels.push_back("g" + std::to_string(i) + std::to_string(j));
  std::vector<std::vector<int>> triangles;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      triangles.push_back({vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1)});
      triangles.push_back({vertex(i, j), vertex(i, j + 1), vertex(i + 1, j + 1)});
    }
  return SimplicialComplex::from_simplices(std::move(labels), triangles);
}

// Face poset of the triangulated Klein bottle (54 elements, height 3).  Its
// order complex is the barycentric subdivision, so its homology is that of
// the Klein bottle; this is the workhorse example with torsion.
inline Poset klein_poset() { return face_poset(klein_complex()); }

}  // namespace spechom::instances
