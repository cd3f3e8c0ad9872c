#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "moufang/linalg.hpp"
#include "moufang/report.hpp"

namespace moufang {

/// Finite-dimensional algebra over the rationals, given by its
/// multiplication tensor: e_i e_j = sum_k mult(k,i,j) e_k.
struct BinaryAlgebra {
  std::size_t dim = 0;
  Tensor3 mult; // mult(k,i,j) = coefficient of e_k in e_i e_j
  std::vector<std::string> basis_names;
  std::optional<std::size_t> unit_index;

  Vector basis(std::size_t i) const { return Vector::unit(dim, i); }

  Vector mul(const Vector& x, const Vector& y) const {
    return contract_bilinear(mult, x, y);
  }

  /// Product of two basis elements, read off the tensor directly.
  Vector mul_basis(std::size_t i, std::size_t j) const {
    Vector r(dim);
    for (std::size_t k = 0; k < dim; ++k)
      r.at(k) = mult(k, i, j);
    return r;
  }

  friend bool operator==(const BinaryAlgebra& a, const BinaryAlgebra& b) {
    return a.dim == b.dim && a.mult == b.mult && a.unit_index == b.unit_index;
  }
};

/// Anticommutative algebra given by structure constants:
/// [e_j, e_k] = sum_i c(i,j,k) e_i, with c(i,j,k) = -c(i,k,j).
struct AnticommAlgebra {
  std::size_t dim = 0;
  Tensor3 c;
  std::vector<std::string> basis_names;

  Vector basis(std::size_t i) const { return Vector::unit(dim, i); }

  Vector bracket(const Vector& x, const Vector& y) const {
    return contract_bilinear(c, x, y);
  }

  Vector bracket_basis(std::size_t j, std::size_t k) const {
    Vector r(dim);
    for (std::size_t i = 0; i < dim; ++i)
      r.at(i) = c(i, j, k);
    return r;
  }

  friend bool operator==(const AnticommAlgebra& a, const AnticommAlgebra& b) {
    return a.dim == b.dim && a.c == b.c;
  }
};

inline std::vector<std::string> default_basis_names(std::size_t dim,
                                                    std::size_t first = 0) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    names.push_back("e" + std::to_string(first + i));
  return names;
}

/// The one-dimensional unital algebra: the doubling seed.
inline BinaryAlgebra real_algebra() {
  BinaryAlgebra a;
  a.dim = 1;
  a.mult = Tensor3(1, 1, 1);
  a.mult.at(0, 0, 0) = Rational(1);
  a.basis_names = {"e0"};
  a.unit_index = 0;
  return a;
}

/// Cayley-Dickson doubling with parameter gamma.
///
/// Convention: (a,b)(c,d) = (ac - gamma * conj(d) b, da + b conj(c)) with
/// conj(a,b) = (conj(a), -b). Starting from the one-dimensional algebra
/// this keeps the unit at index 0 and the standard involution
/// conj(e_0) = e_0, conj(e_i) = -e_i throughout the ladder, which is what
/// the implementation assumes about its input.
inline BinaryAlgebra cd_double(const BinaryAlgebra& a, const Rational& gamma) {
  if (!a.unit_index.has_value())
    throw ConstructionError("cd_double: input algebra has no unit");
  if (*a.unit_index != 0)
    throw ConstructionError(
        "cd_double: doubling assumes the unit at basis index 0");

  const std::size_t n = a.dim;
  auto sigma = [](std::size_t t) { return t == 0 ? Rational(1) : Rational(-1); };

  BinaryAlgebra d;
  d.dim = 2 * n;
  d.mult = Tensor3(2 * n, 2 * n, 2 * n);
  d.basis_names = default_basis_names(2 * n);
  d.unit_index = 0;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& m = a.mult(k, i, j);
        if (m.is_zero())
          continue;
        // (e_i,0)(e_j,0) = (e_i e_j, 0)
        d.mult.at(k, i, j) += m;
        // (e_i,0)(0,e_j) = (0, e_j e_i)
        d.mult.at(n + k, j, n + i) += m;
        // (0,e_i)(e_j,0) = (0, e_i conj(e_j))
        d.mult.at(n + k, n + i, j) += sigma(j) * m;
        // (0,e_i)(0,e_j) = (-gamma conj(e_j) e_i, 0)
        d.mult.at(k, n + j, n + i) += Rational(-1) * gamma * sigma(i) * m;
      }
  return d;
}

inline BinaryAlgebra complex_numbers() { return cd_double(real_algebra(), 1); }
inline BinaryAlgebra quaternions() { return cd_double(complex_numbers(), 1); }
inline BinaryAlgebra octonions() { return cd_double(quaternions(), 1); }
inline BinaryAlgebra sedenions() { return cd_double(octonions(), 1); }
inline BinaryAlgebra split_octonions() {
  return cd_double(quaternions(), Rational(-1));
}

/// Matrix of v -> x v.
inline Matrix left_mult(const BinaryAlgebra& a, const Vector& x) {
  if (x.dim() != a.dim)
    throw DimensionError("left_mult: vector dimension mismatch");
  Matrix l(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) {
        const Rational& m = a.mult(r, i, c);
        if (!m.is_zero())
          l.at(r, c) += m * x[i];
      }
  }
  return l;
}

/// Matrix of v -> v x.
inline Matrix right_mult(const BinaryAlgebra& a, const Vector& x) {
  if (x.dim() != a.dim)
    throw DimensionError("right_mult: vector dimension mismatch");
  Matrix r(a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    if (x[j].is_zero())
      continue;
    for (std::size_t row = 0; row < a.dim; ++row)
      for (std::size_t c = 0; c < a.dim; ++c) {
        const Rational& m = a.mult(row, c, j);
        if (!m.is_zero())
          r.at(row, c) += m * x[j];
      }
  }
  return r;
}

/// (xy)z - x(yz)
inline Vector associator(const BinaryAlgebra& a, const Vector& x,
                         const Vector& y, const Vector& z) {
  return a.mul(a.mul(x, y), z) - a.mul(x, a.mul(y, z));
}

/// Indices of the non-unit basis elements, in increasing order.
inline std::vector<std::size_t> imaginary_indices(const BinaryAlgebra& a) {
  if (!a.unit_index.has_value())
    throw ConstructionError("algebra has no unit");
  std::vector<std::size_t> idx;
  idx.reserve(a.dim - 1);
  for (std::size_t i = 0; i < a.dim; ++i)
    if (i != *a.unit_index)
      idx.push_back(i);
  return idx;
}

/// Commutator algebra on the span of the non-unit basis elements, with
/// [x,y] = xy - yx. Verifies exactly that no commutator escapes onto the
/// unit; a violation raises ClosureError carrying the witness pair.
inline AnticommAlgebra commutator_algebra(const BinaryAlgebra& a) {
  const auto imag = imaginary_indices(a);
  const std::size_t m = imag.size();
  const std::size_t u = *a.unit_index;

  AnticommAlgebra g;
  g.dim = m;
  g.c = Tensor3(m, m, m);
  g.basis_names.reserve(m);
  for (std::size_t j : imag)
    g.basis_names.push_back(j < a.basis_names.size() ? a.basis_names[j]
                                                     : "e" + std::to_string(j));

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Vector w = a.mul_basis(imag[j], imag[k]) - a.mul_basis(imag[k], imag[j]);
      if (!w[u].is_zero())
        throw ClosureError("commutator_algebra: [" + g.basis_names[j] + "," +
                               g.basis_names[k] +
                               "] has unit component " + w[u].str(),
                           j, k, w[u].str());
      for (std::size_t i = 0; i < m; ++i)
        g.c.at(i, j, k) = w[imag[i]];
    }
  return g;
}

// ---------------------------------------------------------------------------
// Identity evaluators. Each returns the exact (lhs, rhs) pair for one basis
// tuple; the checkers below and the witness re-verification path share them.
// ---------------------------------------------------------------------------

inline std::pair<Matrix, Matrix> eval_unit_left(const BinaryAlgebra& a,
                                                std::size_t i) {
  if (!a.unit_index)
    throw ConstructionError("unit law: algebra has no unit");
  return {as_column(a.mul_basis(*a.unit_index, i)), as_column(a.basis(i))};
}

inline std::pair<Matrix, Matrix> eval_unit_right(const BinaryAlgebra& a,
                                                 std::size_t i) {
  if (!a.unit_index)
    throw ConstructionError("unit law: algebra has no unit");
  return {as_column(a.mul_basis(i, *a.unit_index)), as_column(a.basis(i))};
}

inline std::pair<Matrix, Matrix> eval_associativity(const BinaryAlgebra& a,
                                                    std::size_t i,
                                                    std::size_t j,
                                                    std::size_t k) {
  return {as_column(associator(a, a.basis(i), a.basis(j), a.basis(k))),
          as_column(Vector::zero(a.dim))};
}

/// Polarization of (x,x,y) = 0 in the doubled slot: the identity holds for
/// all rational x exactly when these basis sums vanish.
inline std::pair<Matrix, Matrix> eval_left_alternative(const BinaryAlgebra& a,
                                                       std::size_t p,
                                                       std::size_t q,
                                                       std::size_t r) {
  Vector s = associator(a, a.basis(p), a.basis(q), a.basis(r)) +
             associator(a, a.basis(q), a.basis(p), a.basis(r));
  return {as_column(s), as_column(Vector::zero(a.dim))};
}

inline std::pair<Matrix, Matrix> eval_right_alternative(const BinaryAlgebra& a,
                                                        std::size_t p,
                                                        std::size_t q,
                                                        std::size_t r) {
  Vector s = associator(a, a.basis(p), a.basis(q), a.basis(r)) +
             associator(a, a.basis(p), a.basis(r), a.basis(q));
  return {as_column(s), as_column(Vector::zero(a.dim))};
}

inline std::pair<Matrix, Matrix> eval_anticommutativity(const AnticommAlgebra& g,
                                                        std::size_t i,
                                                        std::size_t j,
                                                        std::size_t k) {
  return {as_scalar(g.c(i, j, k)), as_scalar(-g.c(i, k, j))};
}

inline std::pair<Matrix, Matrix> eval_jacobi(const AnticommAlgebra& g,
                                             std::size_t j, std::size_t k,
                                             std::size_t l) {
  Vector ej = g.basis(j), ek = g.basis(k), el = g.basis(l);
  Vector s = g.bracket(g.bracket(ej, ek), el) +
             g.bracket(g.bracket(ek, el), ej) +
             g.bracket(g.bracket(el, ej), ek);
  return {as_column(s), as_column(Vector::zero(g.dim))};
}

/// Mal'tsev identity, polarized in the repeated slot. With
///   F_l(x1,x2;y,z) = [[x1,y],[x2,z]]
///   F_r(x1,x2;y,z) = [[[x1,y],z],x2] + [[[y,z],x1],x2] + [[[z,x1],x2],y]
/// the identity [[x,y],[x,z]] = ... holds for every rational x,y,z exactly
/// when F(e_a,e_b) + F(e_b,e_a) agree on all basis tuples (a <= b).
inline std::pair<Matrix, Matrix> eval_maltsev(const AnticommAlgebra& g,
                                              std::size_t a, std::size_t b,
                                              std::size_t cc, std::size_t d) {
  Vector y = g.basis(cc), z = g.basis(d);
  auto f_lhs = [&](std::size_t x1, std::size_t x2) {
    return g.bracket(g.bracket(g.basis(x1), y), g.bracket(g.basis(x2), z));
  };
  auto f_rhs = [&](std::size_t x1, std::size_t x2) {
    Vector ex1 = g.basis(x1), ex2 = g.basis(x2);
    return g.bracket(g.bracket(g.bracket(ex1, y), z), ex2) +
           g.bracket(g.bracket(g.bracket(y, z), ex1), ex2) +
           g.bracket(g.bracket(g.bracket(z, ex1), ex2), y);
  };
  return {as_column(f_lhs(a, b) + f_lhs(b, a)),
          as_column(f_rhs(a, b) + f_rhs(b, a))};
}

// ---------------------------------------------------------------------------
// Axiom checkers. Exhaustive over basis tuples in lexicographic order, so
// verdicts and witnesses are reproducible.
// ---------------------------------------------------------------------------

inline CheckReport check_unit_law(const BinaryAlgebra& a) {
  CheckReport rep;
  rep.name = "unit-law";
  if (!a.unit_index.has_value()) {
    rep.pass = false;
    rep.failures = 1;
    rep.witnesses.push_back({"unit-left", {}, as_scalar(Rational(0)),
                             as_scalar(Rational(0))});
    rep.notes.push_back("no unit element in the multiplication table");
    return rep;
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    auto [l1, r1] = eval_unit_left(a, i);
    ++rep.tuples_checked;
    if (l1 != r1)
      record_failure(rep, "unit-left", {i}, l1, r1);
    auto [l2, r2] = eval_unit_right(a, i);
    ++rep.tuples_checked;
    if (l2 != r2)
      record_failure(rep, "unit-right", {i}, l2, r2);
  }
  return rep;
}

inline CheckReport check_associative(const BinaryAlgebra& a) {
  CheckReport rep;
  rep.name = "associative";
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        auto [l, r] = eval_associativity(a, i, j, k);
        ++rep.tuples_checked;
        if (l != r)
          record_failure(rep, "associativity", {i, j, k}, l, r);
      }
  return rep;
}

inline CheckReport check_alternative(const BinaryAlgebra& a) {
  CheckReport rep;
  rep.name = "alternative";
  for (std::size_t p = 0; p < a.dim; ++p)
    for (std::size_t q = p; q < a.dim; ++q)
      for (std::size_t r = 0; r < a.dim; ++r) {
        auto [l, rr] = eval_left_alternative(a, p, q, r);
        ++rep.tuples_checked;
        if (l != rr)
          record_failure(rep, "left-alternative", {p, q, r}, l, rr);
      }
  for (std::size_t p = 0; p < a.dim; ++p)
    for (std::size_t q = 0; q < a.dim; ++q)
      for (std::size_t r = q; r < a.dim; ++r) {
        auto [l, rr] = eval_right_alternative(a, p, q, r);
        ++rep.tuples_checked;
        if (l != rr)
          record_failure(rep, "right-alternative", {p, q, r}, l, rr);
      }
  return rep;
}

inline CheckReport check_anticommutative(const AnticommAlgebra& g) {
  CheckReport rep;
  rep.name = "anticommutative";
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k) {
        auto [l, r] = eval_anticommutativity(g, i, j, k);
        ++rep.tuples_checked;
        if (l != r)
          record_failure(rep, "anticommutativity", {i, j, k}, l, r);
      }
  return rep;
}

inline CheckReport check_jacobi(const AnticommAlgebra& g) {
  CheckReport rep;
  rep.name = "jacobi";
  for (std::size_t j = 0; j < g.dim; ++j)
    for (std::size_t k = 0; k < g.dim; ++k)
      for (std::size_t l = 0; l < g.dim; ++l) {
        auto [lv, rv] = eval_jacobi(g, j, k, l);
        ++rep.tuples_checked;
        if (lv != rv)
          record_failure(rep, "jacobi", {j, k, l}, lv, rv);
      }
  return rep;
}

inline CheckReport check_maltsev(const AnticommAlgebra& g) {
  CheckReport rep;
  rep.name = "maltsev";
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = a; b < g.dim; ++b)
      for (std::size_t c = 0; c < g.dim; ++c)
        for (std::size_t d = 0; d < g.dim; ++d) {
          auto [l, r] = eval_maltsev(g, a, b, c, d);
          ++rep.tuples_checked;
          if (l != r)
            record_failure(rep, "maltsev", {a, b, c, d}, l, r);
        }
  return rep;
}

} // namespace moufang
