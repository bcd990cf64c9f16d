#pragma once

// Test-only oracles: independently implemented reference computations that
// the library results are checked against.  Everything here favors being
// obviously correct over being fast.

#include <spechom/abelian.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracles {

using spechom::FgAbGroup;
using spechom::Int;
using spechom::IntegerMatrix;
using Rational = boost::multiprecision::cpp_rational;

// Deterministic rng; avoids std distributions (implementation-defined) so
// frozen expected values stay valid everywhere.
struct Rng {
  std::mt19937_64 e;
  explicit Rng(std::uint64_t seed) : e(seed) {}
  int below(int n) { return static_cast<int>(e() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int num, int den) { return below(den) < num; }
};

// Exact Gaussian elimination over Q: rank always, determinant when square.
struct GaussResult {
  Rational det;
  std::size_t rank = 0;
};

inline GaussResult gauss(const IntegerMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = Rational(m(i, j));
  GaussResult out;
  out.det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p == nr) continue;
    if (p != r) { std::swap(a[p], a[r]); out.det = -out.det; }
    out.det *= a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  out.rank = r;
  if (nr != nc || r < nr) out.det = 0;
  return out;
}

inline bool is_unimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Rational d = gauss(m).det;
  return d == 1 || d == -1;
}

inline Int gcd_of_entries(const IntegerMatrix& m) {
  Int g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = spechom::int_gcd(g, m(i, j));
  return g;
}

inline IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(lo, hi);
  return m;
}

// Product of random elementary operations applied to the identity.
inline IntegerMatrix random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  for (int s = 0; s < ops && n > 1; ++s) {
    std::size_t i = rng.below(static_cast<int>(n));
    std::size_t j = rng.below(static_cast<int>(n));
    switch (rng.below(3)) {
      case 0:
        if (i != j) {
          Int q = rng.range(-3, 3);
          for (std::size_t c = 0; c < n; ++c) u(i, c) += q * u(j, c);
        }
        break;
      case 1:
        if (i != j)
          for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        break;
      default:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
    }
  }
  return u;
}

// A finite presentation: Z^gens modulo the row space of rel.
struct Pres {
  std::size_t gens = 0;
  IntegerMatrix rel;  // rel.cols() == gens (or zero rows)
};

inline Pres pres_of(const FgAbGroup& g) {
  Pres p;
  p.gens = g.rank() + g.torsion().size();
  p.rel = IntegerMatrix(g.torsion().size(), p.gens);
  for (std::size_t i = 0; i < g.torsion().size(); ++i) p.rel(i, g.rank() + i) = g.torsion()[i];
  return p;
}

// Disguise a presentation without changing the group it presents.
inline Pres scramble(Rng& rng, const Pres& p, std::size_t extra_relations = 2) {
  Pres q;
  q.gens = p.gens;
  q.rel = IntegerMatrix(p.rel.rows() + extra_relations, p.gens);
  for (std::size_t i = 0; i < p.rel.rows(); ++i)
    for (std::size_t j = 0; j < p.gens; ++j) q.rel(i, j) = p.rel(i, j);
  // extra rows: random integer combinations of existing relations
  for (std::size_t e = 0; e < extra_relations; ++e)
    for (std::size_t i = 0; i < p.rel.rows(); ++i) {
      Int c = rng.range(-2, 2);
      for (std::size_t j = 0; j < p.gens; ++j) q.rel(p.rel.rows() + e, j) += c * p.rel(i, j);
    }
  IntegerMatrix u = random_unimodular(rng, q.rel.rows());
  IntegerMatrix v = random_unimodular(rng, q.gens);
  q.rel = u * q.rel * v;
  return q;
}

// Tensor product via the Kronecker-style presentation
//   A (x) B = coker[ RA (x) I  ;  I (x) RB ].
inline FgAbGroup tensor_oracle(const Pres& a, const Pres& b) {
  const std::size_t g = a.gens * b.gens;
  IntegerMatrix rel(a.rel.rows() * b.gens + a.gens * b.rel.rows(), g);
  std::size_t row = 0;
  for (std::size_t u = 0; u < a.rel.rows(); ++u)
    for (std::size_t j = 0; j < b.gens; ++j, ++row)
      for (std::size_t i = 0; i < a.gens; ++i) rel(row, i * b.gens + j) = a.rel(u, i);
  for (std::size_t v = 0; v < b.rel.rows(); ++v)
    for (std::size_t i = 0; i < a.gens; ++i, ++row)
      for (std::size_t j = 0; j < b.gens; ++j) rel(row, i * b.gens + j) = b.rel(v, j);
  return spechom::group_from_presentation(g, rel);
}

// Integer solve via Smith form: x with m*x == b, if one exists.
inline bool solve_integer(const IntegerMatrix& m, const std::vector<Int>& b, std::vector<Int>& x) {
  spechom::SmithForm s = spechom::smith_normal_form(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<Int> ub(nr, Int(0));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) ub[i] += s.left(i, j) * b[j];
  std::vector<Int> y(nc, Int(0));
  for (std::size_t i = 0; i < nr; ++i) {
    Int d = i < s.diagonal.size() ? s.diagonal[i] : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return false;
    } else {
      if (ub[i] % d != 0) return false;
      if (i < nc) y[i] = ub[i] / d;
    }
  }
  x.assign(nc, Int(0));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) x[i] += s.right(i, j) * y[j];
  return true;
}

// Kernel lattice basis (columns) of m over Z.
inline std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& m) {
  spechom::SmithForm s = spechom::smith_normal_form(m);
  std::size_t rank = 0;
  for (const Int& d : s.diagonal)
    if (d != 0) ++rank;
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = rank; j < m.cols(); ++j) {
    std::vector<Int> v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = s.right(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

// d-torsion subgroup of coker(p): { x : d*x in rowspace } / rowspace,
// computed from integer kernels and solves only.
inline FgAbGroup torsion_part_oracle(const Pres& p, const Int& d) {
  const std::size_t g = p.gens, r = p.rel.rows();
  // kernel of [ d*I | -rel^T ] gives { (x, y) : d*x = rel^T y }
  IntegerMatrix m(g, g + r);
  for (std::size_t i = 0; i < g; ++i) m(i, i) = d;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, g + j) = -p.rel(j, i);
  std::vector<std::vector<Int>> ker = integer_kernel(m);
  // generators of the torsion lattice L: x-projections of the kernel basis
  IntegerMatrix lat(g, ker.size());
  for (std::size_t j = 0; j < ker.size(); ++j)
    for (std::size_t i = 0; i < g; ++i) lat(i, j) = ker[j][i];
  // relations: rowspace generators written in the lattice basis, plus any
  // dependencies among the lattice generators themselves
  std::vector<std::vector<Int>> rel_rows;
  for (std::size_t v = 0; v < r; ++v) {
    std::vector<Int> b(g);
    for (std::size_t i = 0; i < g; ++i) b[i] = p.rel(v, i);
    std::vector<Int> alpha;
    if (!solve_integer(lat, b, alpha))
      throw std::logic_error("torsion_part_oracle: relation not inside the lattice");
    rel_rows.push_back(std::move(alpha));
  }
  for (auto& dep : integer_kernel(lat)) rel_rows.push_back(dep);
  IntegerMatrix rel(rel_rows.size(), ker.size());
  for (std::size_t i = 0; i < rel_rows.size(); ++i)
    for (std::size_t j = 0; j < ker.size(); ++j) rel(i, j) = rel_rows[i][j];
  return spechom::group_from_presentation(ker.size(), rel);
}

// Tor(A, B) from the diagonal free resolution of A: direct sum of the
// d_i-torsion subgroups of B over the invariant factors d_i of A.
inline FgAbGroup tor_oracle(const Pres& a, const Pres& b) {
  spechom::SmithForm s = spechom::smith_normal_form(a.rel);
  std::vector<FgAbGroup> parts;
  for (const Int& d : s.diagonal)
    if (d > 1) parts.push_back(torsion_part_oracle(b, d));
  return spechom::direct_sum(parts);
}

}  // namespace oracles
