#pragma once

// Finite strict partial orders, reflexive-transitive digraphs, and the order
// constructions the homology layer consumes: reduction of a digraph to its
// partial order of equivalence classes, componentwise products, ordinal
// joins (everything in the first factor below everything in the second) and
// the two-point suspension.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spechom {

namespace detail {

inline void require_unique_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const std::string& l : labels)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate label: " + l);
}

// Deterministic collision repair: primes are appended until the label is new.
inline std::string fresh_label(std::string base, std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  taken.insert(base);
  return base;
}

}  // namespace detail

// Irreflexive, transitive, antisymmetric by construction (cycles are
// rejected when the relation is closed).
class Poset {
public:
  Poset() = default;

  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<int, int>>& strict_pairs) {
    detail::require_unique_labels(labels);
    const std::size_t n = labels.size();
    std::vector<char> lt(n * n, 0);
    for (auto [i, j] : strict_pairs) {
      if (i < 0 || j < 0 || std::size_t(i) >= n || std::size_t(j) >= n)
        throw std::invalid_argument("relation index out of range");
      lt[std::size_t(i) * n + j] = 1;
    }
    // Warshall closure, then irreflexivity = acyclicity
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (!lt[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (lt[k * n + j]) lt[i * n + j] = 1;
      }
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i * n + i])
        throw std::invalid_argument("relation has a cycle through: " + labels[i]);
    Poset p;
    p.labels_ = std::move(labels);
    p.lt_ = std::move(lt);
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool less(std::size_t i, std::size_t j) const { return lt_[i * size() + j] != 0; }
  bool leq(std::size_t i, std::size_t j) const { return i == j || less(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }

  std::vector<std::pair<int, int>> strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (less(i, j)) out.emplace_back(int(i), int(j));
    return out;
  }

  // Covering relations: i < j with nothing strictly between.
  std::vector<std::pair<int, int>> hasse_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        if (!less(i, j)) continue;
        bool covered = true;
        for (std::size_t k = 0; k < size() && covered; ++k)
          if (less(i, k) && less(k, j)) covered = false;
        if (covered) out.emplace_back(int(i), int(j));
      }
    return out;
  }

  bool operator==(const Poset& o) const = default;

private:
  std::vector<std::string> labels_;
  std::vector<char> lt_;
};

// Reflexive and transitive; the normal form every raw edge list is brought
// into before any lattice is read off.
class TransitiveDigraph {
public:
  TransitiveDigraph() = default;

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool edge(std::size_t i, std::size_t j) const { return e_[i * size() + j] != 0; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (edge(i, j)) out.emplace_back(int(i), int(j));
    return out;
  }

  friend TransitiveDigraph transitive_closure(std::vector<std::string>,
                                              const std::vector<std::pair<int, int>>&);

private:
  std::vector<std::string> labels_;
  std::vector<char> e_;
};

inline TransitiveDigraph transitive_closure(std::vector<std::string> vertices,
                                            const std::vector<std::pair<int, int>>& edges) {
  detail::require_unique_labels(vertices);
  const std::size_t n = vertices.size();
  std::vector<char> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || std::size_t(i) >= n || std::size_t(j) >= n)
      throw std::invalid_argument("edge index out of range");
    e[std::size_t(i) * n + j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!e[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (e[k * n + j]) e[i * n + j] = 1;
    }
  TransitiveDigraph g;
  g.labels_ = std::move(vertices);
  g.e_ = std::move(e);
  return g;
}

// Quotient by the mutual-edge equivalence; the result is a strict order on
// the classes.  Class labels list their members joined with '|'.
inline Poset reduced_graph(const TransitiveDigraph& g) {
  const std::size_t n = g.size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int c = int(members.size());
    members.push_back({});
    for (std::size_t j = i; j < n; ++j)
      if (cls[j] < 0 && g.edge(i, j) && g.edge(j, i)) {
        cls[j] = c;
        members[c].push_back(j);
      }
  }
  std::vector<std::string> labels;
  for (const auto& m : members) {
    std::string l = g.label(m[0]);
    for (std::size_t k = 1; k < m.size(); ++k) l += "|" + g.label(m[k]);
    labels.push_back(std::move(l));
  }
  std::vector<std::pair<int, int>> strict;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (a == b) continue;
      if (g.edge(members[a][0], members[b][0])) strict.emplace_back(int(a), int(b));
    }
  return Poset::from_relations(std::move(labels), strict);
}

// Componentwise product order on pairs.
inline Poset product(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  labels.reserve(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::vector<std::pair<int, int>> strict;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t k = 0; k < p.size(); ++k)
        for (std::size_t l = 0; l < q.size(); ++l) {
          if (i == k && j == l) continue;
          if (p.leq(i, k) && q.leq(j, l))
            strict.emplace_back(int(i * q.size() + j), int(k * q.size() + l));
        }
  return Poset::from_relations(std::move(labels), strict);
}

// Ordinal join: a disjoint union with every element of p below every element
// of q.  Colliding labels on the q side are primed.
inline Poset join_order(const Poset& p, const Poset& q) {
  std::set<std::string> taken;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i)
    labels.push_back(detail::fresh_label(p.label(i), taken));
  for (std::size_t j = 0; j < q.size(); ++j)
    labels.push_back(detail::fresh_label(q.label(j), taken));
  std::vector<std::pair<int, int>> strict;
  const int np = int(p.size());
  for (auto [i, j] : p.strict_pairs()) strict.emplace_back(i, j);
  for (auto [i, j] : q.strict_pairs()) strict.emplace_back(np + i, np + j);
  for (int i = 0; i < np; ++i)
    for (std::size_t j = 0; j < q.size(); ++j) strict.emplace_back(i, np + int(j));
  return Poset::from_relations(std::move(labels), strict);
}

// Two fresh mutually incomparable points placed below everything.
inline Poset suspension_order(const Poset& p) {
  std::set<std::string> taken(p.labels().begin(), p.labels().end());
  std::vector<std::string> labels = p.labels();
  labels.push_back(detail::fresh_label("s1", taken));
  labels.push_back(detail::fresh_label("s2", taken));
  const int n = int(p.size());
  std::vector<std::pair<int, int>> strict = p.strict_pairs();
  for (int i = 0; i < n; ++i) {
    strict.emplace_back(n, i);
    strict.emplace_back(n + 1, i);
  }
  return Poset::from_relations(std::move(labels), strict);
}

// Every element of a lies (non-strictly) below every element of b.
inline bool blocks_comparable(const Poset& p, const std::vector<int>& a,
                              const std::vector<int>& b) {
  for (int x : a)
    if (x < 0 || std::size_t(x) >= p.size()) throw std::invalid_argument("block index out of range");
  for (int y : b)
    if (y < 0 || std::size_t(y) >= p.size()) throw std::invalid_argument("block index out of range");
  for (int x : a)
    for (int y : b)
      if (!p.leq(std::size_t(x), std::size_t(y))) return false;
  return true;
}

// Connected components of the comparability graph.
inline std::vector<int> comparability_components(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (comp[w] < 0 && p.comparable(v, w)) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  return comp;
}

inline std::size_t comparability_component_count(const Poset& p) {
  std::vector<int> comp = comparability_components(p);
  return comp.empty() ? 0 : std::size_t(*std::max_element(comp.begin(), comp.end())) + 1;
}

// Exact backtracking matcher.  Only meant for test-sized posets; the guard
// keeps accidental big inputs from hanging a properties run.
inline bool is_order_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  const std::size_t n = p.size();
  if (n > 10) throw std::invalid_argument("is_order_isomorphic: guarded to <= 10 elements");
  if (n == 0) return true;

  auto signature = [](const Poset& r, std::size_t v) {
    int below = 0, above = 0;
    for (std::size_t w = 0; w < r.size(); ++w) {
      if (r.less(w, v)) ++below;
      if (r.less(v, w)) ++above;
    }
    return std::pair<int, int>(below, above);
  };
  std::vector<std::pair<int, int>> sp(n), sq(n);
  for (std::size_t v = 0; v < n; ++v) { sp[v] = signature(p, v); sq[v] = signature(q, v); }
  {
    auto mp = sp, mq = sq;
    std::sort(mp.begin(), mp.end());
    std::sort(mq.begin(), mq.end());
    if (mp != mq) return false;
  }

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t v, std::size_t w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (img[u] < 0) continue;
      if (p.less(u, v) != q.less(std::size_t(img[u]), w)) return false;
      if (p.less(v, u) != q.less(w, std::size_t(img[u]))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sp[v] != sq[w] || !consistent(v, w)) continue;
      img[v] = int(w);
      used[w] = 1;
      if (self(self, v + 1)) return true;
      img[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace spechom
