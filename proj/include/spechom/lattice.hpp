#pragma once

// Completely distributive lattice models.  Finite ones are exactly the
// down-set lattices of finite posets, so a lattice here is a concrete family
// of down-closed vertex subsets of a base poset; the subspace lattice of a
// digraph algebra arises as the down-set lattice of the reduced graph.  The
// meet-irreducible elements, ordered by inclusion, recover the base poset
// (Birkhoff duality) and are the source of every order complex downstream.

#include "poset.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spechom {

using BitSet = boost::dynamic_bitset<>;

// Raised when an enumeration would exceed its configured bound; callers can
// report which guard tripped.
struct GuardError : std::runtime_error {
  std::string guard;
  GuardError(std::string guard_name, const std::string& msg)
      : std::runtime_error(msg), guard(std::move(guard_name)) {}
};

class DownSetLattice {
public:
  DownSetLattice() = default;
  DownSetLattice(Poset base, std::vector<BitSet> sets) : base_(std::move(base)) {
    // canonical element order: by size, then numerically
    std::sort(sets.begin(), sets.end(), [](const BitSet& a, const BitSet& b) {
      if (a.count() != b.count()) return a.count() < b.count();
      return a < b;
    });
    sets_ = std::move(sets);
    for (std::size_t i = 0; i < sets_.size(); ++i) index_[sets_[i]] = i;
  }

  std::size_t size() const { return sets_.size(); }
  const Poset& base() const { return base_; }
  const BitSet& element(std::size_t i) const { return sets_[i]; }

  std::size_t index_of(const BitSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("DownSetLattice: set is not an element");
    return it->second;
  }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return sets_.size() - 1; }

  bool leq(std::size_t i, std::size_t j) const { return sets_[i].is_subset_of(sets_[j]); }
  std::size_t meet(std::size_t i, std::size_t j) const { return index_of(sets_[i] & sets_[j]); }
  std::size_t join(std::size_t i, std::size_t j) const { return index_of(sets_[i] | sets_[j]); }

private:
  Poset base_;
  std::vector<BitSet> sets_;
  std::map<BitSet, std::size_t> index_;
};

// Enumerates all down-closed subsets by repeatedly adjoining an element
// whose strict predecessors are already present.
inline DownSetLattice downset_lattice(const Poset& p, std::size_t bound = std::size_t(1) << 16) {
  const std::size_t n = p.size();
  std::set<BitSet> found;
  std::vector<BitSet> frontier{BitSet(n)};
  found.insert(BitSet(n));
  while (!frontier.empty()) {
    BitSet s = frontier.back();
    frontier.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (s.test(x)) continue;
      bool addable = true;
      for (std::size_t y = 0; y < n && addable; ++y)
        if (p.less(y, x) && !s.test(y)) addable = false;
      if (!addable) continue;
      BitSet t = s;
      t.set(x);
      if (found.insert(t).second) {
        if (found.size() > bound)
          throw GuardError("downset_lattice bound",
                           "down-set enumeration exceeded the bound of " + std::to_string(bound));
        frontier.push_back(std::move(t));
      }
    }
  }
  return DownSetLattice(p, std::vector<BitSet>(found.begin(), found.end()));
}

// The invariant-subspace lattice of the digraph algebra: vertex subsets S
// with (x,y) an edge and y in S forcing x in S.  Those are exactly the
// down-closed unions of mutual-edge classes, i.e. the down-sets of the
// reduced graph, which is what we enumerate.
inline DownSetLattice digraph_algebra_lattice(const TransitiveDigraph& g,
                                              std::size_t bound = std::size_t(1) << 16) {
  return downset_lattice(reduced_graph(g), bound);
}

// The meet-irreducible elements (not the top, not a meet of two strictly
// larger elements) ordered by inclusion, with their witnessing down-sets.
struct MirrPoset {
  Poset poset;
  std::vector<BitSet> witness;              // witness[i] realizes poset element i
  std::vector<std::size_t> lattice_index;   // position of witness[i] in the source lattice
};

inline MirrPoset meet_irreducibles(const DownSetLattice& l) {
  std::vector<std::size_t> mi;
  for (std::size_t m = 0; m < l.size(); ++m) {
    if (m == l.top()) continue;
    bool irreducible = true;
    for (std::size_t a = 0; a < l.size() && irreducible; ++a) {
      if (!(l.leq(m, a)) || a == m) continue;
      for (std::size_t b = a; b < l.size(); ++b) {
        if (!(l.leq(m, b)) || b == m) continue;
        if (l.meet(a, b) == m) { irreducible = false; break; }
      }
    }
    if (irreducible) mi.push_back(m);
  }
  MirrPoset out;
  std::vector<std::string> labels;
  for (std::size_t m : mi) {
    const BitSet& s = l.element(m);
    std::string label = "{";
    bool first = true;
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (!s.test(v)) continue;
      if (!first) label += ",";
      label += l.base().label(v);
      first = false;
    }
    label += "}";
    labels.push_back(std::move(label));
    out.witness.push_back(s);
    out.lattice_index.push_back(m);
  }
  std::vector<std::pair<int, int>> strict;
  for (std::size_t i = 0; i < mi.size(); ++i)
    for (std::size_t j = 0; j < mi.size(); ++j)
      if (i != j && l.leq(mi[i], mi[j])) strict.emplace_back(int(i), int(j));
  out.poset = Poset::from_relations(std::move(labels), strict);
  return out;
}

// L-: the union of all lattice elements that do not contain e.
inline std::size_t lower_map(const DownSetLattice& l, std::size_t e) {
  BitSet acc(l.base().size());
  for (std::size_t m = 0; m < l.size(); ++m)
    if (!l.element(e).is_subset_of(l.element(m))) acc |= l.element(m);
  return l.index_of(acc);
}

// L+: the intersection of all lattice elements not contained in e.
inline std::size_t upper_map(const DownSetLattice& l, std::size_t e) {
  BitSet acc(l.base().size());
  acc.set();  // empty meet is the top
  for (std::size_t m = 0; m < l.size(); ++m)
    if (!l.element(m).is_subset_of(l.element(e))) acc &= l.element(m);
  return l.index_of(acc);
}

// Complete distributivity in the form used throughout: every nonzero L is
// the join of the G+ over all G whose (G+)- does not absorb L.
inline bool check_complete_distributivity_identity(const DownSetLattice& l) {
  for (std::size_t e = 0; e < l.size(); ++e) {
    if (e == l.bottom()) continue;
    BitSet acc(l.base().size());
    for (std::size_t g = 0; g < l.size(); ++g) {
      std::size_t up = upper_map(l, g);
      std::size_t updown = lower_map(l, up);
      if (!l.leq(e, updown)) acc |= l.element(up);
    }
    if (acc != l.element(e)) return false;
  }
  return true;
}

inline bool is_nest(const MirrPoset& m) {
  for (std::size_t i = 0; i < m.poset.size(); ++i)
    for (std::size_t j = i + 1; j < m.poset.size(); ++j)
      if (!m.poset.comparable(i, j)) return false;
  return true;
}

inline std::size_t component_count(const MirrPoset& m) {
  return comparability_component_count(m.poset);
}

}  // namespace spechom
