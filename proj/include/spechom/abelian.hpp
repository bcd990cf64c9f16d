#pragma once

// Exact linear algebra over Z and finitely generated abelian groups.
//
// Everything downstream (simplicial homology, Kunneth evaluation, lattice
// invariants) reduces to Smith normal form over arbitrary-precision integers,
// so this header is deliberately self-contained: a dense integer matrix, a
// transform-tracking Smith reduction, a sparse rank/torsion fast path for the
// large boundary matrices, and the invariant-factor group arithmetic
// (tensor, Tor, direct sum) built on top.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace spechom {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
  using boost::multiprecision::gcd;
  Int g = gcd(a, b);
  return g < 0 ? Int(-g) : g;
}

// Extended gcd: g = gcd(a, b) >= 0 with x*a + y*b == g.
struct ExtGcd {
  Int g, x, y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntegerMatrix& o) const = default;

  IntegerMatrix operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntegerMatrix: size mismatch in product");
    IntegerMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& v = (*this)(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Int& w = o(k, j);
          if (w != 0) r(i, j) += v * w;
        }
      }
    return r;
  }

  IntegerMatrix transposed() const {
    IntegerMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// left * m * right == diag(diagonal), both transforms unimodular, diagonal
// entries nonnegative with d[i] | d[i+1] and zeros trailing.
struct SmithForm {
  std::vector<Int> diagonal;
  IntegerMatrix left, right;
};

namespace detail {

// Smith reduction with optional transform tracking.  When `track` is set the
// four transform matrices satisfy left*input*right == D, left_inv == left^-1,
// right_inv == right^-1 throughout (the inverses come for free by applying
// the inverse elementary operation on the other side).
struct SmithData {
  std::vector<Int> diagonal;
  IntegerMatrix left, right, left_inv, right_inv;
  std::size_t rank = 0;
};

inline SmithData smith_reduce(IntegerMatrix a, bool track) {
  const std::size_t nr = a.rows(), nc = a.cols();
  SmithData out;
  if (track) {
    out.left = IntegerMatrix::identity(nr);
    out.left_inv = IntegerMatrix::identity(nr);
    out.right = IntegerMatrix::identity(nc);
    out.right_inv = IntegerMatrix::identity(nc);
  }

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < nc; ++j) std::swap(a(i, j), a(k, j));
    if (track)
      for (std::size_t j = 0; j < nr; ++j) {
        std::swap(out.left(i, j), out.left(k, j));
        std::swap(out.left_inv(j, i), out.left_inv(j, k));
      }
  };
  auto swap_cols = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < nr; ++r) std::swap(a(r, i), a(r, k));
    if (track)
      for (std::size_t r = 0; r < nc; ++r) {
        std::swap(out.right(r, i), out.right(r, k));
        std::swap(out.right_inv(i, r), out.right_inv(k, r));
      }
  };
  // row[i] += q * row[k]
  auto add_row = [&](std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < nc; ++j) a(i, j) += q * a(k, j);
    if (track)
      for (std::size_t j = 0; j < nr; ++j) {
        out.left(i, j) += q * out.left(k, j);
        out.left_inv(j, k) -= q * out.left_inv(j, i);
      }
  };
  auto add_col = [&](std::size_t j, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < nr; ++r) a(r, j) += q * a(r, k);
    if (track)
      for (std::size_t c = 0; c < nc; ++c) {
        out.right(c, j) += q * out.right(c, k);
        out.right_inv(k, c) -= q * out.right_inv(j, c);
      }
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < nc; ++j) a(i, j) = -a(i, j);
    if (track)
      for (std::size_t j = 0; j < nr; ++j) {
        out.left(i, j) = -out.left(i, j);
        out.left_inv(j, i) = -out.left_inv(j, i);
      }
  };
  // rows (t, i) <- [[x, y], [-b/g, a/g]] * rows (t, i), where
  // g = x*a + y*b = gcd(a, b); the 2x2 block has determinant 1.
  auto combine_rows = [&](std::size_t t, std::size_t i, const Int& x, const Int& y,
                          const Int& ag, const Int& bg) {
    for (std::size_t j = 0; j < nc; ++j) {
      Int u = a(t, j), v = a(i, j);
      a(t, j) = x * u + y * v;
      a(i, j) = -bg * u + ag * v;
    }
    if (track)
      for (std::size_t j = 0; j < nr; ++j) {
        Int u = out.left(t, j), v = out.left(i, j);
        out.left(t, j) = x * u + y * v;
        out.left(i, j) = -bg * u + ag * v;
        // inverse block is [[a/g, -y], [b/g, x]], applied on the right
        Int p = out.left_inv(j, t), q = out.left_inv(j, i);
        out.left_inv(j, t) = p * ag + q * bg;
        out.left_inv(j, i) = -p * y + q * x;
      }
  };
  auto combine_cols = [&](std::size_t t, std::size_t j, const Int& x, const Int& y,
                          const Int& ag, const Int& bg) {
    for (std::size_t r = 0; r < nr; ++r) {
      Int u = a(r, t), v = a(r, j);
      a(r, t) = x * u + y * v;
      a(r, j) = -bg * u + ag * v;
    }
    if (track)
      for (std::size_t c = 0; c < nc; ++c) {
        Int u = out.right(c, t), v = out.right(c, j);
        out.right(c, t) = x * u + y * v;
        out.right(c, j) = -bg * u + ag * v;
        Int p = out.right_inv(t, c), q = out.right_inv(j, c);
        out.right_inv(t, c) = p * ag + q * bg;
        out.right_inv(j, c) = -p * y + q * x;
      }
  };

  std::size_t t = 0;
  const std::size_t dim = std::min(nr, nc);
  while (t < dim) {
    // locate a pivot: smallest nonzero absolute value in the live submatrix
    std::size_t pi = nr, pj = nc;
    Int best = 0;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (a(i, j) == 0) continue;
        Int v = a(i, j) < 0 ? Int(-a(i, j)) : a(i, j);
        if (best == 0 || v < best) { best = v; pi = i; pj = j; }
      }
    if (best == 0) break;  // submatrix is zero
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      // clear column t with the pivot, improving it via gcd steps as needed
      bool dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        if (a(i, t) % a(t, t) == 0) {
          add_row(i, t, -Int(a(i, t) / a(t, t)));
        } else {
          ExtGcd e = ext_gcd(a(t, t), a(i, t));
          combine_rows(t, i, e.x, e.y, Int(a(t, t) / e.g), Int(a(i, t) / e.g));
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        if (a(t, j) % a(t, t) == 0) {
          add_col(j, t, -Int(a(t, j) / a(t, t)));
          } else {
          ExtGcd e = ext_gcd(a(t, t), a(t, j));
          combine_cols(t, j, e.x, e.y, Int(a(t, t) / e.g), Int(a(t, j) / e.g));
          dirty = true;
        }
      }
      if (dirty) continue;  // column may have been repopulated
      bool col_clear = true;
      for (std::size_t i = t + 1; i < nr && col_clear; ++i)
        if (a(i, t) != 0) col_clear = false;
      if (!col_clear) continue;

      // enforce divisibility: pivot must divide the whole remaining block
      std::size_t bi = 0;
      bool divides_all = true;
      for (std::size_t i = t + 1; i < nr && divides_all; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(i, j) % a(t, t) != 0) { divides_all = false; bi = i; break; }
      if (divides_all) break;
      add_row(t, bi, Int(1));  // pulls the offending row into play
    }

    if (a(t, t) < 0) negate_row(t);
    ++t;
  }

  out.diagonal.assign(dim, Int(0));
  for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a(i, i);
  out.rank = t;
  return out;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& m) {
  detail::SmithData d = detail::smith_reduce(m, /*track=*/true);
  return {std::move(d.diagonal), std::move(d.left), std::move(d.right)};
}

inline std::vector<Int> operator*(const IntegerMatrix& m, const std::vector<Int>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Int> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& w = m(i, j);
      if (w != 0) out[i] += w * v[j];
    }
  return out;
}

// One integer solution of a*x == b, if any exists.
inline std::optional<std::vector<Int>> solve_linear(const IntegerMatrix& a,
                                                    const std::vector<Int>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  SmithForm s = smith_normal_form(a);
  std::vector<Int> ub = s.left * b;
  std::vector<Int> y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int d = i < s.diagonal.size() ? s.diagonal[i] : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  return s.right * y;
}

namespace detail {

// Rank + invariant factors of a sparse integer matrix, without transforms.
// Boundary matrices are overwhelmingly reducible by +-1 pivots, which cost
// nothing arithmetically; whatever survives that phase (the torsion core) is
// densified and handed to the dense reduction.
struct SparseInvariants {
  std::size_t rank = 0;
  std::vector<Int> nontrivial;  // invariant factors >= 2, divisibility order
};

class SparseIntMatrix {
public:
  SparseIntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), col_(cols), row_(rows) {}

  void add(std::size_t r, std::size_t c, Int v) {
    if (v == 0) return;
    Int& slot = col_[c][r];
    slot += v;
    if (slot == 0) col_[c].erase(r); else row_[r].insert(c);
    if (col_[c].find(r) == col_[c].end()) row_[r].erase(c);
  }

  SparseInvariants invariants() && {
    SparseInvariants out;
    std::vector<char> row_live(rows_, 1), col_live(cols_, 1);

    for (;;) {
      // best +-1 pivot by Markowitz fill estimate
      std::size_t pr = rows_, pc = cols_;
      std::size_t best_cost = SIZE_MAX;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!col_live[c]) continue;
        for (const auto& [r, v] : col_[c]) {
          if (v != 1 && v != -1) continue;
          std::size_t cost = (row_[r].size() - 1) * (col_[c].size() - 1);
          if (cost < best_cost) { best_cost = cost; pr = r; pc = c; }
          if (best_cost == 0) break;
        }
        if (best_cost == 0) break;
      }
      if (pc == cols_) break;

      const Int pv = col_[pc][pr];
      // column ops clear row pr; row pr then has a single entry, so the
      // subsequent row clears only touch column pc, which we simply drop.
      std::vector<std::size_t> row_cols(row_[pr].begin(), row_[pr].end());
      for (std::size_t c : row_cols) {
        if (c == pc) continue;
        Int q = col_[c][pr] / pv;  // exact: pv is +-1
        for (const auto& [r, v] : col_[pc]) {
          if (!row_live[r]) continue;
          Int& slot = col_[c][r];
          slot -= q * v;
          if (slot == 0) { col_[c].erase(r); row_[r].erase(c); }
          else row_[r].insert(c);
        }
      }
      for (const auto& [r, v] : col_[pc]) row_[r].erase(pc);
      for (std::size_t c : row_cols) { col_[c].erase(pr); }
      col_[pc].clear();
      row_[pr].clear();
      row_live[pr] = 0;
      col_live[pc] = 0;
      ++out.rank;
    }

    // densify the residual (no +-1 entries left) and finish exactly
    std::vector<std::size_t> rs, cs;
    for (std::size_t c = 0; c < cols_; ++c)
      if (col_live[c] && !col_[c].empty()) cs.push_back(c);
    {
      std::set<std::size_t> rset;
      for (std::size_t c : cs)
        for (const auto& [r, v] : col_[c]) rset.insert(r);
      rs.assign(rset.begin(), rset.end());
    }
    if (!cs.empty()) {
      IntegerMatrix rest(rs.size(), cs.size());
      for (std::size_t j = 0; j < cs.size(); ++j)
        for (const auto& [r, v] : col_[cs[j]])
          rest(std::distance(rs.begin(), std::find(rs.begin(), rs.end(), r)), j) = v;
      SmithData d = smith_reduce(std::move(rest), /*track=*/false);
      out.rank += d.rank;
      for (std::size_t i = 0; i < d.rank; ++i)
        if (d.diagonal[i] > 1) out.nontrivial.push_back(d.diagonal[i]);
    }
    return out;
  }

private:
  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, Int>> col_;
  std::vector<std::set<std::size_t>> row_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Finitely generated abelian groups in invariant-factor normal form.

class FgAbGroup {
public:
  FgAbGroup() = default;

  static FgAbGroup free(std::size_t rank) {
    FgAbGroup g;
    g.rank_ = rank;
    return g;
  }

  static FgAbGroup cyclic(Int order) {
    if (order < 0) order = -order;
    if (order == 0) return free(1);
    FgAbGroup g;
    if (order > 1) g.torsion_.push_back(std::move(order));
    return g;
  }

  // Accepts an arbitrary multiset of cyclic orders and renormalizes it into
  // the unique divisibility chain (gcd/lcm smoothing; no factorization).
  static FgAbGroup of(std::size_t rank, std::vector<Int> orders) {
    FgAbGroup g;
    g.rank_ = rank;
    for (Int& d : orders) {
      if (d < 0) d = -d;
      if (d == 0) { ++g.rank_; continue; }
      if (d > 1) g.torsion_.push_back(std::move(d));
    }
    normalize(g.torsion_);
    return g;
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }

  bool operator==(const FgAbGroup& o) const = default;

  // Grammar: 0 | Z | Z^r | Z/d | combinations joined with " + ".
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream s;
    bool first = true;
    if (rank_ > 0) {
      s << "Z";
      if (rank_ > 1) s << "^" << rank_;
      first = false;
    }
    for (const Int& d : torsion_) {
      if (!first) s << " + ";
      s << "Z/" << d;
      first = false;
    }
    return s.str();
  }

private:
  static void normalize(std::vector<Int>& t) {
    // replace non-dividing pairs by (gcd, lcm) until a chain remains
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
          if (t[i] % t[j] == 0 || t[j] % t[i] == 0) continue;
          Int g = int_gcd(t[i], t[j]);
          Int l = (t[i] / g) * t[j];
          t[i] = g;
          t[j] = l;
          changed = true;
        }
    }
    std::sort(t.begin(), t.end());
    t.erase(std::remove(t.begin(), t.end(), Int(1)), t.end());
  }

  std::size_t rank_ = 0;
  std::vector<Int> torsion_;
};

// Cokernel of the relation matrix acting on Z^generators; each row of
// `relations` is one relation over the generators.
inline FgAbGroup group_from_presentation(std::size_t generators, const IntegerMatrix& relations) {
  if (relations.rows() > 0 && relations.cols() != generators)
    throw std::invalid_argument("group_from_presentation: relation width != generator count");
  detail::SmithData d = detail::smith_reduce(relations, /*track=*/false);
  std::vector<Int> orders(d.diagonal.begin(), d.diagonal.begin() + d.rank);
  return FgAbGroup::of(generators - d.rank, std::move(orders));
}

// Closed tensor rules: Z (x) G = G, Z/a (x) Z/b = Z/gcd(a,b), bilinear in
// direct sums.
inline FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Int> orders;
  std::size_t rank = a.rank() * b.rank();
  for (const Int& d : a.torsion())
    for (std::size_t i = 0; i < b.rank(); ++i) orders.push_back(d);
  for (const Int& e : b.torsion())
    for (std::size_t i = 0; i < a.rank(); ++i) orders.push_back(e);
  for (const Int& d : a.torsion())
    for (const Int& e : b.torsion()) orders.push_back(int_gcd(d, e));
  return FgAbGroup::of(rank, std::move(orders));
}

// Tor(Z, G) = 0 and Tor(Z/a, Z/b) = Z/gcd(a,b); free parts contribute nothing.
inline FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Int> orders;
  for (const Int& d : a.torsion())
    for (const Int& e : b.torsion()) orders.push_back(int_gcd(d, e));
  return FgAbGroup::of(0, std::move(orders));
}

inline FgAbGroup direct_sum(const std::vector<FgAbGroup>& parts) {
  std::size_t rank = 0;
  std::vector<Int> orders;
  for (const FgAbGroup& g : parts) {
    rank += g.rank();
    orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
  }
  return FgAbGroup::of(rank, std::move(orders));
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  return direct_sum(std::vector<FgAbGroup>{a, b});
}

}  // namespace spechom
