#pragma once

// Finite simplicial complexes and their integral homology.
//
// Complexes are stored face-closed, one sorted list of sorted vertex-id
// tuples per dimension.  A complex may carry a dimension cap: simplices
// above the cap are dropped and the complex remembers it was truncated, so
// homology requests that would need the missing cells fail loudly instead
// of silently returning wrong groups.
//
// Builders: explicit simplex lists, flag (clique) complexes, order complexes
// of posets, the comparability model of a product order, a finite sampling
// model for a poset paired with a dense linear order, joins, and face posets
// (whose order complexes are barycentric subdivisions).
//
// Homology is computed from boundary-matrix invariant factors; a canonical
// coordinate system on each homology group supports maps induced by
// simplicial vertex maps and an isomorphism test.

#include <spechom/abelian.hpp>
#include <spechom/poset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spechom {

class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // Builds the face closure of the given simplices over the given vertex
  // set.  Every vertex is a 0-simplex whether or not it is listed.  With a
  // nonnegative `dim_cap`, faces above that dimension are dropped and the
  // complex is marked truncated.
  static SimplicialComplex from_simplices(std::vector<std::string> vertex_labels,
                                          const std::vector<std::vector<int>>& simplices,
                                          int dim_cap = -1) {
    detail::require_unique_labels(vertex_labels);
    SimplicialComplex k;
    k.labels_ = std::move(vertex_labels);
    k.dim_cap_ = dim_cap;
    std::vector<std::set<std::vector<int>>> acc;
    for (const std::vector<int>& raw : simplices) {
      std::vector<int> s = raw;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("simplex has a repeated vertex");
      for (int v : s)
        if (v < 0 || std::size_t(v) >= k.labels_.size())
          throw std::invalid_argument("simplex vertex out of range");
      if (s.empty()) continue;
      if (dim_cap >= 0 && int(s.size()) > dim_cap + 1) {
        k.truncated_ = true;
        for (const std::vector<int>& f : subsets_of_size(s, std::size_t(dim_cap) + 1))
          close_insert(acc, f);
      } else {
        close_insert(acc, s);
      }
    }
    k.adopt(std::move(acc));
    return k;
  }

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::string& vertex_label(std::size_t v) const { return labels_[v]; }
  bool is_empty() const { return labels_.empty(); }

  // Dimension of the complex; -1 when there are no vertices at all.
  int dimension() const { return int(by_dim_.size()) - 1; }
  int dim_cap() const { return dim_cap_; }
  bool truncated() const { return truncated_; }

  std::size_t count(int d) const {
    if (d < 0 || d >= int(by_dim_.size())) return 0;
    return by_dim_[std::size_t(d)].size();
  }

  const std::vector<std::vector<int>>& simplices(int d) const {
    static const std::vector<std::vector<int>> none;
    if (d < 0 || d >= int(by_dim_.size())) return none;
    return by_dim_[std::size_t(d)];
  }

  // Position of a (sorted) simplex in its dimension's list, or -1.
  std::ptrdiff_t index_of(int d, const std::vector<int>& s) const {
    const std::vector<std::vector<int>>& level = simplices(d);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return it - level.begin();
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * (long long)count(d);
    return chi;
  }

  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && by_dim_ == o.by_dim_;
  }

private:
  friend SimplicialComplex build_flag_complex(std::vector<std::string>,
                                              const std::vector<std::vector<char>>&, int);
  friend SimplicialComplex simplicial_join(const SimplicialComplex&, const SimplicialComplex&,
                                           int);

  static std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& s,
                                                       std::size_t m) {
    std::vector<std::vector<int>> out;
    if (m == 0 || m > s.size()) return out;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
      std::vector<int> pick(m);
      for (std::size_t i = 0; i < m; ++i) pick[i] = s[idx[i]];
      out.push_back(std::move(pick));
      std::size_t i = m;
      while (i > 0 && idx[i - 1] == s.size() - m + (i - 1)) --i;
      if (i == 0) return out;
      ++idx[i - 1];
      for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  static void close_insert(std::vector<std::set<std::vector<int>>>& acc,
                           const std::vector<int>& s) {
    std::size_t d = s.size() - 1;
    if (acc.size() <= d) acc.resize(d + 1);
    if (!acc[d].insert(s).second) return;
    if (s.size() == 1) return;
    std::vector<int> face(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      for (std::size_t i = 0, j = 0; i < s.size(); ++i)
        if (i != drop) face[j++] = s[i];
      close_insert(acc, face);
    }
  }

  void adopt(std::vector<std::set<std::vector<int>>> acc) {
    by_dim_.clear();
    if (!labels_.empty()) {
      by_dim_.emplace_back();
      for (std::size_t v = 0; v < labels_.size(); ++v)
        by_dim_[0].push_back({int(v)});
    }
    for (std::size_t d = 1; d < acc.size(); ++d) {
      by_dim_.emplace_back(acc[d].begin(), acc[d].end());
    }
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<int>>> by_dim_;
  int dim_cap_ = -1;
  bool truncated_ = false;
};

// Flag (clique) complex of an undirected graph given as a symmetric
// adjacency matrix (diagonal ignored).  Cliques are grown one vertex at a
// time in ascending id order, so every level comes out sorted and no set
// machinery is needed.  With a nonnegative cap, growth stops at that
// dimension and the complex is marked truncated if anything was cut.
inline SimplicialComplex build_flag_complex(std::vector<std::string> labels,
                                            const std::vector<std::vector<char>>& adj,
                                            int dim_cap = -1) {
  detail::require_unique_labels(labels);
  const std::size_t n = labels.size();
  if (adj.size() != n) throw std::invalid_argument("flag complex: adjacency size mismatch");
  for (const std::vector<char>& row : adj)
    if (row.size() != n) throw std::invalid_argument("flag complex: adjacency size mismatch");

  SimplicialComplex k;
  k.labels_ = std::move(labels);
  k.dim_cap_ = dim_cap;
  if (n == 0) return k;

  k.by_dim_.emplace_back();
  for (std::size_t v = 0; v < n; ++v) k.by_dim_[0].push_back({int(v)});

  while (true) {
    const std::vector<std::vector<int>>& level = k.by_dim_.back();
    int d = int(k.by_dim_.size()) - 1;
    bool extendable = false;
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& c : level) {
      for (std::size_t v = std::size_t(c.back()) + 1; v < n; ++v) {
        bool ok = true;
        for (int u : c)
          if (!adj[std::size_t(u)][v]) { ok = false; break; }
        if (!ok) continue;
        if (dim_cap >= 0 && d + 1 > dim_cap) { extendable = true; break; }
        next.push_back(c);
        next.back().push_back(int(v));
      }
      if (extendable) break;
    }
    if (extendable) { k.truncated_ = true; break; }
    if (next.empty()) break;
    k.by_dim_.push_back(std::move(next));
  }
  return k;
}

// Order complex: simplices are the chains of the poset.
inline SimplicialComplex order_complex(const Poset& p, int dim_cap = -1) {
  const std::size_t n = p.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = p.comparable(i, j) ? 1 : 0;
  return build_flag_complex(p.labels(), adj, dim_cap);
}

// One factor of an edge product: labeled vertices together with a set of
// directed edges, loops allowed.  An edge x -> y asserts that x sits weakly
// below y; a loop x -> x that x sits weakly below itself (true for points of
// a discrete order, false for points of a dense linear order, where every
// neighbourhood of x contains points on both sides).
struct EdgeFactor {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> edges;  // edges[x][y] == 1 iff directed edge x -> y
};

// A finite poset with its order edges: x -> y iff x <= y (loops included).
inline EdgeFactor order_edge_factor(const Poset& p) {
  const std::size_t n = p.size();
  EdgeFactor f{p.labels(), std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.edges[i][j] = p.leq(i, j) ? 1 : 0;
  return f;
}

// k points sampled from a dense linear order: strictly increasing edges
// only.  No loops: around any sample there are smaller and larger points.
inline EdgeFactor sample_edge_factor(int k) {
  if (k < 1) throw std::invalid_argument("sample factor needs at least one sample");
  const std::size_t n = std::size_t(k);
  EdgeFactor f{{}, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  for (std::size_t s = 0; s < n; ++s) {
    f.labels.push_back("t" + std::to_string(s + 1));
    for (std::size_t u = s + 1; u < n; ++u) f.edges[s][u] = 1;
  }
  return f;
}

// Edge product: vertices are pairs (x, y), indexed x*|g| + y; two distinct
// pairs span an edge when one dominates the other coordinatewise, i.e.
// (x1,y1) ~ (x2,y2) iff x1 -> x2 and y1 -> y2, or x2 -> x1 and y2 -> y1.
// Simplices are the cliques of that adjacency.
inline SimplicialComplex edge_product_complex(const EdgeFactor& f, const EdgeFactor& g,
                                              int dim_cap = -1) {
  const std::size_t nf = f.labels.size(), ng = g.labels.size(), n = nf * ng;
  if (f.edges.size() != nf || g.edges.size() != ng)
    throw std::invalid_argument("edge product: factor size mismatch");
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < nf; ++x)
    for (std::size_t y = 0; y < ng; ++y)
      labels[x * ng + y] = "(" + f.labels[x] + "," + g.labels[y] + ")";
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t x1 = 0; x1 < nf; ++x1)
    for (std::size_t y1 = 0; y1 < ng; ++y1)
      for (std::size_t x2 = 0; x2 < nf; ++x2)
        for (std::size_t y2 = 0; y2 < ng; ++y2) {
          if (x1 == x2 && y1 == y2) continue;
          bool below = f.edges[x1][x2] && g.edges[y1][y2];
          bool above = f.edges[x2][x1] && g.edges[y2][y1];
          adj[x1 * ng + y1][x2 * ng + y2] = (below || above) ? 1 : 0;
        }
  return build_flag_complex(std::move(labels), adj, dim_cap);
}

// Both factors finite posets: the cliques are exactly the chains of
// product(p, q), so this equals the order complex of the product order,
// labeled and indexed the same way ((i, j) -> i*|q| + j).
inline SimplicialComplex edge_product_complex(const Poset& p, const Poset& q,
                                              int dim_cap = -1) {
  return edge_product_complex(order_edge_factor(p), order_edge_factor(q), dim_cap);
}

// Finite model for a poset tensored with a dense linear order, sampled at k
// points: vertices are (sample, element) pairs, indexed t*|p| + i, and
// (s, x) ~ (t, y) iff s < t and x <= y (or the reverse).  Cliques carry a
// strictly increasing sample sequence along a weakly increasing chain of p,
// so for large k the complex computes the homology of the order complex of
// p; for k below the longest chain length of p extra cycles can survive
// (a 3-chain at k = 2 already yields a spurious 1-cycle).
inline SimplicialComplex nest_tensor_approximation(const Poset& p, int k,
                                                   int dim_cap = -1) {
  if (k < 1) throw std::invalid_argument("nest approximation needs at least one sample");
  return edge_product_complex(sample_edge_factor(k), order_edge_factor(p), dim_cap);
}

// Join: one simplex per pair (simplex-or-empty of a, simplex-or-empty of b),
// both empty excluded.  Vertex labels of b are freshened on collision.
inline SimplicialComplex simplicial_join(const SimplicialComplex& a,
                                         const SimplicialComplex& b, int dim_cap = -1) {
  SimplicialComplex k;
  k.dim_cap_ = dim_cap;
  std::set<std::string> taken;
  for (const std::string& l : a.vertex_labels()) {
    k.labels_.push_back(l);
    taken.insert(l);
  }
  for (const std::string& l : b.vertex_labels())
    k.labels_.push_back(detail::fresh_label(l, taken));

  const int off = int(a.vertex_count());
  std::vector<std::set<std::vector<int>>> acc;
  auto emit = [&](const std::vector<int>* sa, const std::vector<int>* sb) {
    std::vector<int> s;
    if (sa) s = *sa;
    if (sb)
      for (int v : *sb) s.push_back(v + off);
    if (s.empty()) return;
    if (dim_cap >= 0 && int(s.size()) > dim_cap + 1) {
      k.truncated_ = true;
      return;
    }
    std::size_t d = s.size() - 1;
    if (acc.size() <= d) acc.resize(d + 1);
    acc[d].insert(std::move(s));
  };

  for (int da = 0; da <= a.dimension(); ++da)
    for (const std::vector<int>& sa : a.simplices(da)) emit(&sa, nullptr);
  for (int db = 0; db <= b.dimension(); ++db)
    for (const std::vector<int>& sb : b.simplices(db)) emit(nullptr, &sb);
  for (int da = 0; da <= a.dimension(); ++da)
    for (const std::vector<int>& sa : a.simplices(da))
      for (int db = 0; db <= b.dimension(); ++db)
        for (const std::vector<int>& sb : b.simplices(db)) emit(&sa, &sb);

  k.truncated_ = k.truncated_ || a.truncated() || b.truncated();
  k.adopt(std::move(acc));
  return k;
}

// Poset of all simplices ordered by strict face containment.  Its order
// complex is the barycentric subdivision of the input.
inline Poset face_poset(const SimplicialComplex& k) {
  std::vector<std::string> labels;
  std::vector<std::size_t> first(std::size_t(k.dimension() + 2), 0);
  for (int d = 0; d <= k.dimension(); ++d) {
    first[std::size_t(d)] = labels.size();
    for (const std::vector<int>& s : k.simplices(d)) {
      std::string l = "{";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) l += ",";
        l += k.vertex_label(std::size_t(s[i]));
      }
      l += "}";
      labels.push_back(l);
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (int d = 1; d <= k.dimension(); ++d) {
    const std::vector<std::vector<int>>& level = k.simplices(d);
    std::vector<int> face(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < level.size(); ++j) {
      const std::vector<int>& s = level[j];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        for (std::size_t i = 0, t = 0; i < s.size(); ++i)
          if (i != drop) face[t++] = s[i];
        std::ptrdiff_t fi = k.index_of(d - 1, face);
        covers.push_back({int(first[std::size_t(d - 1)] + std::size_t(fi)),
                          int(first[std::size_t(d)] + j)});
      }
    }
  }
  return Poset::from_relations(std::move(labels), covers);
}

// Boundary matrix of degree d: rows index (d-1)-simplices, columns index
// d-simplices; the column of [v0..vd] has (-1)^i at the face dropping vi.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  if (d < 1) return IntegerMatrix(0, k.count(0));
  IntegerMatrix m(k.count(d - 1), k.count(d));
  const std::vector<std::vector<int>>& level = k.simplices(d);
  std::vector<int> face(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < level.size(); ++j) {
    const std::vector<int>& s = level[j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      for (std::size_t i = 0, t = 0; i < s.size(); ++i)
        if (i != drop) face[t++] = s[i];
      std::ptrdiff_t fi = k.index_of(d - 1, face);
      m(std::size_t(fi), j) += (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

namespace detail {

inline SparseInvariants boundary_invariants(const SimplicialComplex& k, int d) {
  if (d < 1 || k.count(d) == 0 || k.count(d - 1) == 0) return {};
  SparseIntMatrix m(k.count(d - 1), k.count(d));
  const std::vector<std::vector<int>>& level = k.simplices(d);
  std::vector<int> face(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < level.size(); ++j) {
    const std::vector<int>& s = level[j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      for (std::size_t i = 0, t = 0; i < s.size(); ++i)
        if (i != drop) face[t++] = s[i];
      std::ptrdiff_t fi = k.index_of(d - 1, face);
      m.add(std::size_t(fi), j, (drop % 2 == 0) ? 1 : -1);
    }
  }
  return std::move(m).invariants();
}

}  // namespace detail

// Homology groups by degree, trailing trivial groups trimmed so that equal
// signatures compare equal regardless of how far each was computed.
class HomologySignature {
public:
  HomologySignature() = default;
  explicit HomologySignature(std::vector<FgAbGroup> groups) : groups_(std::move(groups)) {
    while (!groups_.empty() && groups_.back().is_trivial()) groups_.pop_back();
  }

  const FgAbGroup& at(std::size_t d) const {
    static const FgAbGroup trivial;
    return d < groups_.size() ? groups_[d] : trivial;
  }
  const std::vector<FgAbGroup>& groups() const { return groups_; }
  std::size_t size() const { return groups_.size(); }

  bool operator==(const HomologySignature& o) const = default;

  std::string to_string() const {
    if (groups_.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < groups_.size(); ++d) {
      if (d) out += ", ";
      out += "H" + std::to_string(d) + "=" + groups_[d].to_string();
    }
    return out;
  }

private:
  std::vector<FgAbGroup> groups_;
};

// Integral homology in degrees 0..up_to.  The complex must either be
// untruncated or capped at degree up_to+1 or higher: a harder truncation
// has discarded cells whose boundaries these groups need.
inline HomologySignature homology(const SimplicialComplex& k, std::size_t up_to) {
  if (k.truncated() && k.dim_cap() < int(up_to) + 1)
    throw std::invalid_argument(
        "homology: complex was truncated below degree " + std::to_string(up_to + 1) +
        "; rebuild it with a dimension cap of at least that");
  std::vector<std::size_t> rank(up_to + 2, 0);
  std::vector<std::vector<Int>> torsion(up_to + 2);
  for (std::size_t d = 1; d <= up_to + 1; ++d) {
    detail::SparseInvariants inv = detail::boundary_invariants(k, int(d));
    rank[d] = inv.rank;
    torsion[d] = std::move(inv.nontrivial);
  }
  std::vector<FgAbGroup> groups;
  for (std::size_t d = 0; d <= up_to; ++d) {
    std::size_t cells = k.count(int(d));
    std::size_t free = cells - rank[d] - rank[d + 1];
    groups.push_back(FgAbGroup::of(free, std::move(torsion[d + 1])));
  }
  return HomologySignature(std::move(groups));
}

// Order-complex homology of a poset, building only the simplices the
// requested degrees can see.
inline HomologySignature poset_homology(const Poset& p, std::size_t up_to) {
  return homology(order_complex(p, int(up_to) + 1), up_to);
}

// One d-chain x with (boundary of x) == b, if any exists.
inline std::optional<std::vector<Int>> solve_boundary(const SimplicialComplex& k, int d,
                                                      const std::vector<Int>& b) {
  return solve_linear(boundary_matrix(k, d), b);
}

namespace detail {

// Canonical coordinates on one homology group.
//
// Kernel of the boundary: with left*D*right the Smith decomposition of
// boundary_d, the columns of `right` past the rank form a basis of the cycle
// lattice, and the matching rows of right^-1 read off cycle coordinates.
// Relations: each column of boundary_{d+1} lies in the cycle lattice; pushing
// the relation matrix through its own Smith decomposition (u * M * v = D)
// turns u into the change of basis under which the group splits as
// Z/d_1 + ... + Z/d_r + Z^f.  A canonical coordinate is kept for every
// torsion factor > 1 (in divisibility order) followed by every free factor,
// matching the group's printed form.
struct HomologyCoords {
  std::size_t cells = 0;
  IntegerMatrix kernel_basis;   // cells x k
  IntegerMatrix kernel_coords;  // k x cells
  IntegerMatrix u, u_inv;       // k x k
  FgAbGroup group;
  std::vector<std::size_t> coord_rows;  // rows of u holding canonical coords
  std::vector<Int> coord_mods;          // torsion modulus, 0 for free coords

  std::size_t coord_count() const { return coord_rows.size(); }

  // Coordinates of a cycle (caller guarantees it is one).
  std::vector<Int> cycle_coords(const std::vector<Int>& z) const {
    std::vector<Int> w = u * (kernel_coords * z);
    std::vector<Int> out(coord_rows.size());
    for (std::size_t i = 0; i < coord_rows.size(); ++i) {
      Int v = w[coord_rows[i]];
      if (coord_mods[i] != 0) {
        v %= coord_mods[i];
        if (v < 0) v += coord_mods[i];
      }
      out[i] = v;
    }
    return out;
  }

  // A cycle representing the i-th canonical generator.
  std::vector<Int> generator_chain(std::size_t i) const {
    std::vector<Int> w(u.rows(), 0);
    if (!w.empty()) w[coord_rows[i]] = 1;
    return kernel_basis * (u_inv * w);
  }
};

inline HomologyCoords homology_coords(const SimplicialComplex& k, std::size_t degree) {
  if (k.truncated() && k.dim_cap() < int(degree) + 1)
    throw std::invalid_argument("homology coordinates need cells one degree above");
  HomologyCoords out;
  out.cells = k.count(int(degree));
  SmithData lower = smith_reduce(boundary_matrix(k, int(degree)), /*track=*/true);
  const std::size_t n = out.cells, kr = n - lower.rank;

  out.kernel_basis = IntegerMatrix(n, kr);
  out.kernel_coords = IntegerMatrix(kr, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < kr; ++j) {
      out.kernel_basis(i, j) = lower.right(i, lower.rank + j);
      out.kernel_coords(j, i) = lower.right_inv(lower.rank + j, i);
    }

  IntegerMatrix rel = out.kernel_coords * boundary_matrix(k, int(degree) + 1);
  SmithData upper = smith_reduce(rel, /*track=*/true);
  out.u = std::move(upper.left);
  out.u_inv = std::move(upper.left_inv);

  std::vector<Int> torsion;
  for (std::size_t i = 0; i < upper.rank; ++i) {
    if (upper.diagonal[i] > 1) {
      out.coord_rows.push_back(i);
      out.coord_mods.push_back(upper.diagonal[i]);
      torsion.push_back(upper.diagonal[i]);
    }
  }
  for (std::size_t i = upper.rank; i < kr; ++i) {
    out.coord_rows.push_back(i);
    out.coord_mods.push_back(0);
  }
  out.group = FgAbGroup::of(kr - upper.rank, std::move(torsion));
  return out;
}

}  // namespace detail

// A homomorphism between two homology groups, written in their canonical
// coordinates (torsion factors first, then free factors).
struct HomMap {
  FgAbGroup domain, codomain;
  IntegerMatrix matrix;  // codomain coords x domain coords
};

// Chain map of a simplicial vertex map in one degree: simplices whose image
// degenerates map to 0, the rest to the sorted image with the sign of the
// sorting permutation.
inline IntegerMatrix chain_map_matrix(const SimplicialComplex& from,
                                      const SimplicialComplex& to,
                                      const std::vector<int>& vertex_map, int d) {
  IntegerMatrix m(to.count(d), from.count(d));
  const std::vector<std::vector<int>>& level = from.simplices(d);
  for (std::size_t j = 0; j < level.size(); ++j) {
    std::vector<int> img;
    for (int v : level[j]) img.push_back(vertex_map[std::size_t(v)]);
    int sign = 1;
    for (std::size_t a = 1; a < img.size(); ++a)  // insertion sort, tracking parity
      for (std::size_t b = a; b > 0 && img[b - 1] >= img[b]; --b) {
        std::swap(img[b - 1], img[b]);
        sign = -sign;
      }
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;
    std::ptrdiff_t i = to.index_of(d, img);
    if (i < 0) throw std::invalid_argument("vertex map is not simplicial");
    m(std::size_t(i), j) += sign;
  }
  return m;
}

// Map induced on degree-d homology by a simplicial vertex map.
inline HomMap induced_map(const SimplicialComplex& from, const SimplicialComplex& to,
                          const std::vector<int>& vertex_map, std::size_t degree) {
  if (vertex_map.size() != from.vertex_count())
    throw std::invalid_argument("vertex map has the wrong length");
  for (int v : vertex_map)
    if (v < 0 || std::size_t(v) >= to.vertex_count())
      throw std::invalid_argument("vertex map image out of range");
  for (int d = 0; d <= from.dimension(); ++d)
    for (const std::vector<int>& s : from.simplices(d)) {
      std::vector<int> img;
      for (int v : s) img.push_back(vertex_map[std::size_t(v)]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (to.index_of(int(img.size()) - 1, img) < 0)
        throw std::invalid_argument("vertex map is not simplicial");
    }

  detail::HomologyCoords dom = detail::homology_coords(from, degree);
  detail::HomologyCoords cod = detail::homology_coords(to, degree);
  IntegerMatrix chain = chain_map_matrix(from, to, vertex_map, int(degree));

  HomMap out;
  out.domain = dom.group;
  out.codomain = cod.group;
  out.matrix = IntegerMatrix(cod.coord_count(), dom.coord_count());
  for (std::size_t j = 0; j < dom.coord_count(); ++j) {
    std::vector<Int> img = cod.cycle_coords(chain * dom.generator_chain(j));
    for (std::size_t i = 0; i < img.size(); ++i) out.matrix(i, j) = img[i];
  }
  return out;
}

// Isomorphism test.  Finitely generated abelian groups are Hopfian, so a
// surjection between groups that are abstractly equal is automatically an
// isomorphism; surjectivity holds exactly when the map's columns together
// with the codomain's torsion relations generate every coordinate, i.e. the
// stacked matrix has trivial cokernel.
inline bool is_isomorphism(const HomMap& m) {
  if (!(m.domain == m.codomain)) return false;
  const std::size_t rows = m.matrix.rows();
  const std::size_t t = m.codomain.torsion().size();
  IntegerMatrix a(rows, m.matrix.cols() + t);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) a(i, j) = m.matrix(i, j);
  for (std::size_t i = 0; i < t; ++i) a(i, m.matrix.cols() + i) = m.codomain.torsion()[i];
  SmithForm s = smith_normal_form(a);
  std::size_t ones = 0;
  for (const Int& d : s.diagonal)
    if (d == 1) ++ones;
  return ones == rows;
}

}  // namespace spechom
