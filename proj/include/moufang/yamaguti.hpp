#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "moufang/algebra.hpp"
#include "moufang/linalg.hpp"
#include "moufang/report.hpp"

namespace moufang {

/// Ternary Yamaguti bracket [x,y,z] = [x,[y,z]] - [y,[x,z]] + [[x,y],z].
inline Vector yamaguti_bracket(const AnticommAlgebra& g, const Vector& x,
                               const Vector& y, const Vector& z) {
  return g.bracket(x, g.bracket(y, z)) - g.bracket(y, g.bracket(x, z)) +
         g.bracket(g.bracket(x, y), z);
}

/// Precomputed ternary brackets of basis triples. Lets the quadruple
/// checks below run in time linear in the number of tuples.
class TernaryTable {
public:
  explicit TernaryTable(const AnticommAlgebra& g) : dim_(g.dim) {
    b_.reserve(dim_ * dim_ * dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l)
          b_.push_back(
              yamaguti_bracket(g, g.basis(j), g.basis(k), g.basis(l)));
  }

  std::size_t dim() const { return dim_; }

  const Vector& at(std::size_t j, std::size_t k, std::size_t l) const {
    return b_[(j * dim_ + k) * dim_ + l];
  }

  /// [e_j, e_k, w] for an arbitrary vector w in the third slot.
  Vector third_slot(std::size_t j, std::size_t k, const Vector& w) const {
    Vector r(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
      if (w[a].is_zero())
        continue;
      r += w[a] * at(j, k, a);
    }
    return r;
  }

private:
  std::size_t dim_;
  std::vector<Vector> b_;
};

/// Integral carrier of the ternary bracket: y6(i,j,k,l) is the i-th
/// component of [e_j, e_k, e_l], i.e. six times the Yamaguti constants.
struct YamagutiTensor {
  std::size_t dim = 0;
  Tensor4 y6;
};

inline YamagutiTensor yamaguti_tensor(const AnticommAlgebra& g) {
  YamagutiTensor t;
  t.dim = g.dim;
  t.y6 = Tensor4(g.dim, g.dim, g.dim, g.dim);
  for (std::size_t j = 0; j < g.dim; ++j)
    for (std::size_t k = 0; k < g.dim; ++k)
      for (std::size_t l = 0; l < g.dim; ++l) {
        Vector b = yamaguti_bracket(g, g.basis(j), g.basis(k), g.basis(l));
        for (std::size_t i = 0; i < g.dim; ++i)
          t.y6.at(i, j, k, l) = b[i];
      }
  return t;
}

/// Third-order associator constants, defined by solving
/// Y^i_{jkl} = l^i_{jkl} + (1/3) C^s_{jk} C^i_{sl} for l.
struct AssociatorTensor {
  std::size_t dim = 0;
  Tensor4 l;
};

inline AssociatorTensor associator_tensor(const AnticommAlgebra& g) {
  AssociatorTensor t;
  t.dim = g.dim;
  t.l = Tensor4(g.dim, g.dim, g.dim, g.dim);
  YamagutiTensor y = yamaguti_tensor(g);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k)
        for (std::size_t l = 0; l < g.dim; ++l) {
          Rational cc;
          for (std::size_t s = 0; s < g.dim; ++s) {
            const Rational& cjk = g.c(s, j, k);
            if (cjk.is_zero())
              continue;
            cc += cjk * g.c(i, s, l);
          }
          t.l.at(i, j, k, l) = sixth() * y.y6(i, j, k, l) - third() * cc;
        }
  return t;
}

inline std::pair<Matrix, Matrix> eval_sagle_yamaguti(const AnticommAlgebra& g,
                                                     std::size_t j,
                                                     std::size_t k,
                                                     std::size_t l,
                                                     std::size_t p) {
  Vector ej = g.basis(j), ek = g.basis(k), el = g.basis(l), ep = g.basis(p);
  Vector lhs = yamaguti_bracket(g, ej, ek, g.bracket(el, ep));
  Vector rhs = g.bracket(yamaguti_bracket(g, ej, ek, el), ep) +
               g.bracket(el, yamaguti_bracket(g, ej, ek, ep));
  return {as_column(lhs), as_column(rhs)};
}

/// Sagle-Yamaguti identity [x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]],
/// exhaustively over all basis quadruples (the identity is multilinear).
inline CheckReport check_sagle_yamaguti(const AnticommAlgebra& g) {
  CheckReport rep;
  rep.name = "sagle-yamaguti";
  TernaryTable t(g);
  const std::size_t m = g.dim;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t p = 0; p < m; ++p) {
          Vector lhs = t.third_slot(j, k, g.bracket_basis(l, p));
          Vector rhs = g.bracket(t.at(j, k, l), g.basis(p)) +
                       g.bracket(g.basis(l), t.at(j, k, p));
          ++rep.tuples_checked;
          if (lhs != rhs)
            record_failure(rep, "sagle-yamaguti", {j, k, l, p},
                           as_column(lhs), as_column(rhs));
        }
  return rep;
}

/// One corpus member of the Mal'tsev / Sagle-Yamaguti agreement sweep.
struct EquivalenceEntry {
  std::string label;
  CheckReport maltsev;
  CheckReport sagle;
  bool agree = false;
};

struct EquivalenceReport {
  std::vector<EquivalenceEntry> entries;
  bool all_agree = true;
};

/// Runs both checkers on every algebra and flags any member where the
/// verdicts differ. A disagreement is an equivalence violation.
inline EquivalenceReport check_equivalence_corpus(
    const std::vector<std::pair<std::string, AnticommAlgebra>>& corpus) {
  EquivalenceReport rep;
  for (const auto& [label, g] : corpus) {
    EquivalenceEntry e;
    e.label = label;
    e.maltsev = check_maltsev(g);
    e.sagle = check_sagle_yamaguti(g);
    e.agree = e.maltsev.pass == e.sagle.pass;
    rep.all_agree = rep.all_agree && e.agree;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

} // namespace moufang
