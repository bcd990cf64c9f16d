#pragma once

// Space expressions and their spectral homology.
//
// An expression composes base spaces (finite posets, transitive digraphs,
// one dense linear order) with tensor, join, suspension and stabilization.
// Homology is evaluated by structural recursion: Künneth for tensors, the
// reduced join rule with torsion products for joins, the shift rule for
// suspensions, and direct order-complex computation at the leaves.  For
// nest-free expressions the finite comparability model is also available,
// so every formula can be cross-checked against a direct chain computation.

#include "abelian.hpp"
#include "complex.hpp"
#include "generate.hpp"
#include "poset.hpp"

#include <memory>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace spechom {

class SpaceExpr;
using SpaceExprPtr = std::shared_ptr<const SpaceExpr>;

struct DigraphAlgebraNode {
  TransitiveDigraph graph;
};
struct FinitePosetNode {
  Poset poset;
};
struct ContinuousNestNode {};
struct TensorNode {
  SpaceExprPtr left, right;
};
struct JoinNode {
  SpaceExprPtr bottom, top;
};
struct SuspensionNode {
  SpaceExprPtr of;
};
struct StabilizeNode {
  SpaceExprPtr of;
};

namespace detail {
template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;
}  // namespace detail

class SpaceExpr {
 public:
  using Node = std::variant<DigraphAlgebraNode, FinitePosetNode, ContinuousNestNode, TensorNode,
                            JoinNode, SuspensionNode, StabilizeNode>;

  explicit SpaceExpr(Node node) : node_(std::move(node)), key_(make_key(node_)) {}

  const Node& node() const { return node_; }

  // Canonical structural key: equal keys evaluate to equal homology.
  // Stabilization is transparent, so it contributes nothing to the key.
  const std::string& key() const { return key_; }

 private:
  static std::string make_key(const Node& node) {
    return std::visit(
        detail::Overloaded{
            [](const DigraphAlgebraNode& n) {
              std::string k = "G" + std::to_string(n.graph.size()) + ":";
              for (auto [i, j] : n.graph.edges())
                k += std::to_string(i) + ">" + std::to_string(j) + ";";
              return k;
            },
            [](const FinitePosetNode& n) {
              std::string k = "P" + std::to_string(n.poset.size()) + ":";
              for (auto [i, j] : n.poset.strict_pairs())
                k += std::to_string(i) + "<" + std::to_string(j) + ";";
              return k;
            },
            [](const ContinuousNestNode&) { return std::string("N"); },
            [](const TensorNode& n) { return "T(" + n.left->key() + "," + n.right->key() + ")"; },
            [](const JoinNode& n) { return "J(" + n.bottom->key() + "," + n.top->key() + ")"; },
            [](const SuspensionNode& n) { return "S(" + n.of->key() + ")"; },
            [](const StabilizeNode& n) { return n.of->key(); },
        },
        node);
  }

  Node node_;
  std::string key_;
};

inline SpaceExprPtr digraph_algebra(TransitiveDigraph g) {
  return std::make_shared<const SpaceExpr>(DigraphAlgebraNode{std::move(g)});
}
inline SpaceExprPtr finite_poset(Poset p) {
  return std::make_shared<const SpaceExpr>(FinitePosetNode{std::move(p)});
}
inline SpaceExprPtr continuous_nest() {
  return std::make_shared<const SpaceExpr>(ContinuousNestNode{});
}
inline SpaceExprPtr tensor(SpaceExprPtr left, SpaceExprPtr right) {
  return std::make_shared<const SpaceExpr>(TensorNode{std::move(left), std::move(right)});
}
inline SpaceExprPtr join(SpaceExprPtr bottom, SpaceExprPtr top) {
  return std::make_shared<const SpaceExpr>(JoinNode{std::move(bottom), std::move(top)});
}
inline SpaceExprPtr suspension(SpaceExprPtr of) {
  return std::make_shared<const SpaceExpr>(SuspensionNode{std::move(of)});
}
inline SpaceExprPtr stabilize(SpaceExprPtr of) {
  return std::make_shared<const SpaceExpr>(StabilizeNode{std::move(of)});
}

// --- structural formulas on signatures ------------------------------------

// Tensor rule: H_n = sum_{p+q=n} H_p (x) H_q  +  sum_{p+q=n-1} Tor(H_p, H_q).
inline HomologySignature kunneth_formula(const HomologySignature& a, const HomologySignature& b,
                                         std::size_t up_to) {
  std::vector<FgAbGroup> out;
  for (std::size_t n = 0; n <= up_to; ++n) {
    FgAbGroup g = FgAbGroup::free(0);
    for (std::size_t p = 0; p <= n; ++p) g = direct_sum(g, tensor(a.at(p), b.at(n - p)));
    for (std::size_t p = 0; p + 1 <= n; ++p) g = direct_sum(g, tor(a.at(p), b.at(n - 1 - p)));
    out.push_back(g);
  }
  return HomologySignature(std::move(out));
}

namespace detail {

// Reduced homology at degree d >= -1: one free summand is dropped in degree
// zero, and the empty space carries a single Z in degree -1.
inline FgAbGroup reduced_at(const HomologySignature& s, int d) {
  if (d < -1) return FgAbGroup::free(0);
  if (d == -1) return s.at(0).is_trivial() ? FgAbGroup::free(1) : FgAbGroup::free(0);
  if (d == 0) {
    const FgAbGroup& g = s.at(0);
    return FgAbGroup::of(g.rank() == 0 ? 0 : g.rank() - 1, g.torsion());
  }
  return s.at(std::size_t(d));
}

}  // namespace detail

// Join rule, in reduced form and then un-reduced:
//   ~H_n(join) = sum_{p+q=n-1} ~H_p (x) ~H_q  +  sum_{p+q=n-2} Tor(~H_p, ~H_q)
// with ~H_{-1}(empty) = Z, and one Z restored in degree zero when the join
// is nonempty.  Forced by direct computation on simplicial joins; see
// join_formula_printed for the Tor-free variant it corrects.
inline HomologySignature join_formula(const HomologySignature& a, const HomologySignature& b,
                                      std::size_t up_to) {
  const bool empty = a.at(0).is_trivial() && b.at(0).is_trivial();
  std::vector<FgAbGroup> out;
  for (std::size_t n = 0; n <= up_to; ++n) {
    FgAbGroup g = n == 0 && !empty ? FgAbGroup::free(1) : FgAbGroup::free(0);
    for (int p = -1; p <= int(n); ++p) {
      int q = int(n) - 1 - p;
      if (q >= -1)
        g = direct_sum(g, tensor(detail::reduced_at(a, p), detail::reduced_at(b, q)));
      int qt = int(n) - 2 - p;
      if (qt >= -1) g = direct_sum(g, tor(detail::reduced_at(a, p), detail::reduced_at(b, qt)));
    }
    out.push_back(g);
  }
  return HomologySignature(std::move(out));
}

// The Tor-free unreduced join rule as classically printed:
//   H_n(join) = sum_{p+q=n-1} H_p (x) H_q  (p, q >= 0).
// Already wrong for joins of antichains (it predicts H_0 = 0 and inflates
// ranks); exposed so reports can show exactly where it differs.
inline HomologySignature join_formula_printed(const HomologySignature& a,
                                              const HomologySignature& b, std::size_t up_to) {
  std::vector<FgAbGroup> out;
  for (std::size_t n = 0; n <= up_to; ++n) {
    FgAbGroup g = FgAbGroup::free(0);
    for (std::size_t p = 0; p + 1 <= n; ++p) g = direct_sum(g, tensor(a.at(p), b.at(n - 1 - p)));
    out.push_back(g);
  }
  return HomologySignature(std::move(out));
}

// Suspension rule: two incomparable points under (or over) a space glue its
// components together, so degree zero collapses to a single Z, degree one
// records the lost component count, and higher degrees shift up by one.
// The suspension of the empty space is just the two new points.
inline HomologySignature suspension_formula(const HomologySignature& s, std::size_t up_to) {
  if (s.at(0).is_trivial()) return HomologySignature({FgAbGroup::free(2)});
  std::vector<FgAbGroup> out{FgAbGroup::free(1)};
  if (up_to >= 1) out.push_back(FgAbGroup::free(s.at(0).rank() - 1));
  for (std::size_t d = 2; d <= up_to; ++d) out.push_back(s.at(d - 1));
  return HomologySignature(std::move(out));
}

// --- evaluation ------------------------------------------------------------

namespace detail {

inline HomologySignature evaluate_spectral(const SpaceExpr& e, std::size_t up_to,
                                           std::map<std::string, HomologySignature>& memo) {
  auto found = memo.find(e.key());
  if (found != memo.end()) return found->second;
  HomologySignature result = std::visit(
      Overloaded{
          [&](const DigraphAlgebraNode& n) { return poset_homology(reduced_graph(n.graph), up_to); },
          [&](const FinitePosetNode& n) { return poset_homology(n.poset, up_to); },
          [&](const ContinuousNestNode&) { return HomologySignature({FgAbGroup::free(1)}); },
          [&](const TensorNode& n) {
            return kunneth_formula(evaluate_spectral(*n.left, up_to, memo),
                                   evaluate_spectral(*n.right, up_to, memo), up_to);
          },
          [&](const JoinNode& n) {
            return join_formula(evaluate_spectral(*n.bottom, up_to, memo),
                                evaluate_spectral(*n.top, up_to, memo), up_to);
          },
          [&](const SuspensionNode& n) {
            return suspension_formula(evaluate_spectral(*n.of, up_to, memo), up_to);
          },
          [&](const StabilizeNode& n) { return evaluate_spectral(*n.of, up_to, memo); },
      },
      e.node());
  memo.emplace(e.key(), result);
  return result;
}

}  // namespace detail

inline HomologySignature spectral_homology(const SpaceExpr& e, std::size_t up_to) {
  std::map<std::string, HomologySignature> memo;  // per-evaluation; repeated subtrees are shared
  return detail::evaluate_spectral(e, up_to, memo);
}

inline HomologySignature spectral_homology(const SpaceExprPtr& e, std::size_t up_to) {
  return spectral_homology(*e, up_to);
}

// The linear dimension of the commutant: the rank of degree zero.
inline std::size_t commutant_dimension(const SpaceExpr& e) {
  return spectral_homology(e, 0).at(0).rank();
}
inline std::size_t commutant_dimension(const SpaceExprPtr& e) { return commutant_dimension(*e); }

// --- finite models ---------------------------------------------------------

struct NoFiniteModelError : std::runtime_error {
  NoFiniteModelError()
      : std::runtime_error("no finite model: the expression contains a continuous nest") {}
};

inline bool contains_nest(const SpaceExpr& e) {
  return std::visit(
      detail::Overloaded{
          [](const DigraphAlgebraNode&) { return false; },
          [](const FinitePosetNode&) { return false; },
          [](const ContinuousNestNode&) { return true; },
          [](const TensorNode& n) { return contains_nest(*n.left) || contains_nest(*n.right); },
          [](const JoinNode& n) { return contains_nest(*n.bottom) || contains_nest(*n.top); },
          [](const SuspensionNode& n) { return contains_nest(*n.of); },
          [](const StabilizeNode& n) { return contains_nest(*n.of); },
      },
      e.node());
}
inline bool contains_nest(const SpaceExprPtr& e) { return contains_nest(*e); }

// The comparability model of a nest-free expression, built structurally, so
// that poset_homology(finite_model(e)) must agree with spectral_homology(e).
inline Poset finite_model(const SpaceExpr& e) {
  return std::visit(
      detail::Overloaded{
          [](const DigraphAlgebraNode& n) { return reduced_graph(n.graph); },
          [](const FinitePosetNode& n) { return n.poset; },
          [](const ContinuousNestNode&) -> Poset { throw NoFiniteModelError(); },
          [](const TensorNode& n) { return product(finite_model(*n.left), finite_model(*n.right)); },
          [](const JoinNode& n) {
            return join_order(finite_model(*n.bottom), finite_model(*n.top));
          },
          [](const SuspensionNode& n) { return suspension_order(finite_model(*n.of)); },
          [](const StabilizeNode& n) { return finite_model(*n.of); },
      },
      e.node());
}
inline Poset finite_model(const SpaceExprPtr& e) { return finite_model(*e); }

// --- sampled approximations -------------------------------------------------

namespace detail {

inline void flatten_tensor_factors(const SpaceExpr& e, std::vector<const SpaceExpr*>& out) {
  std::visit(Overloaded{
                 [&](const TensorNode& n) {
                   flatten_tensor_factors(*n.left, out);
                   flatten_tensor_factors(*n.right, out);
                 },
                 [&](const StabilizeNode& n) { flatten_tensor_factors(*n.of, out); },
                 [&](const auto&) { out.push_back(&e); },
             },
             e.node());
}

}  // namespace detail

// Sampled complex for a tensor of exactly one continuous nest with finite
// factors (associativity and stabilization are looked through): the nest is
// replaced by k ordered samples over the product model of the finite part.
inline SimplicialComplex approximate(const SpaceExpr& e, int k, int dim_cap = -1) {
  static const char* supported =
      "approximate: the supported shape is a tensor of exactly one continuous nest "
      "with finite (nest-free) factors";
  std::vector<const SpaceExpr*> factors;
  detail::flatten_tensor_factors(e, factors);
  std::vector<const SpaceExpr*> finite;
  int nests = 0;
  for (const SpaceExpr* f : factors) {
    if (std::holds_alternative<ContinuousNestNode>(f->node()))
      ++nests;
    else if (contains_nest(*f))
      throw std::invalid_argument(supported);
    else
      finite.push_back(f);
  }
  if (nests != 1 || finite.empty()) throw std::invalid_argument(supported);
  Poset part = finite_model(*finite.front());
  for (std::size_t i = 1; i < finite.size(); ++i)
    part = product(part, finite_model(*finite[i]));
  return nest_tensor_approximation(part, k, dim_cap);
}
inline SimplicialComplex approximate(const SpaceExprPtr& e, int k, int dim_cap = -1) {
  return approximate(*e, k, dim_cap);
}

// --- random expressions for property suites ---------------------------------

// Random expression tree over small posets and digraphs.  Leaves stay small
// so that finite models of products remain computable; at most one nest leaf
// is produced, and only when allowed.
inline SpaceExprPtr random_space_expr(InstanceRng& rng, int depth, int max_elements,
                                      bool allow_nest = false) {
  if (depth <= 0 || rng.chance(1, 3)) {
    if (allow_nest && rng.chance(1, 4)) return continuous_nest();
    if (rng.chance(1, 3)) return digraph_algebra(random_transitive_digraph(rng, max_elements));
    return finite_poset(random_poset(rng, max_elements));
  }
  switch (rng.below(4)) {
    case 0:
      return tensor(random_space_expr(rng, depth - 1, max_elements, allow_nest),
                    random_space_expr(rng, depth - 1, max_elements, false));
    case 1:
      return join(random_space_expr(rng, depth - 1, max_elements, false),
                  random_space_expr(rng, depth - 1, max_elements, false));
    case 2:
      return suspension(random_space_expr(rng, depth - 1, max_elements, false));
    default:
      return stabilize(random_space_expr(rng, depth - 1, max_elements, allow_nest));
  }
}

}  // namespace spechom
