#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moufang/algebra.hpp"
#include "moufang/linalg.hpp"
#include "moufang/prng.hpp"
#include "moufang/report.hpp"
#include "moufang/yamaguti.hpp"

namespace moufang {

/// A Moufang-Mal'tsev pair: an anticommutative algebra Gamma of dimension m
/// together with two linear families of n x n operators, S_j and T_j, the
/// images of the basis vectors. The third translation P_x = -(S_x + T_x)
/// and the triality conjugates are derived, never stored.
struct MoufangMaltsevPair {
  AnticommAlgebra gamma;
  std::size_t rep_dim = 0;
  std::vector<Matrix> s_ops;
  std::vector<Matrix> t_ops;
  bool faithful = true;
  std::size_t translation_rank = 0;
  std::vector<std::string> flags;
};

/// Validates shapes and runs the faithfulness rank test: the joint family
/// x -> (S_x, T_x) must annihilate only x = 0. Non-faithful pairs are
/// accepted and flagged; they are useful negative controls.
inline MoufangMaltsevPair make_moufang_pair(AnticommAlgebra gamma,
                                            std::vector<Matrix> s_ops,
                                            std::vector<Matrix> t_ops) {
  const std::size_t m = gamma.dim;
  if (m == 0)
    throw ConstructionError("pair: Gamma must have positive dimension");
  if (s_ops.size() != m || t_ops.size() != m)
    throw DimensionError("pair: need one S_j and one T_j per basis vector");
  const std::size_t n = s_ops[0].rows();
  for (const auto& ops : {std::cref(s_ops), std::cref(t_ops)})
    for (const Matrix& op : ops.get())
      if (!op.square() || op.rows() != n)
        throw DimensionError("pair: operators must be square of equal size");

  MoufangMaltsevPair p;
  p.gamma = std::move(gamma);
  p.rep_dim = n;
  p.s_ops = std::move(s_ops);
  p.t_ops = std::move(t_ops);

  Matrix stacked(m, 2 * n * n);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& se = p.s_ops[j].entries();
    const auto& te = p.t_ops[j].entries();
    for (std::size_t i = 0; i < n * n; ++i) {
      stacked.at(j, i) = se[i];
      stacked.at(j, n * n + i) = te[i];
    }
  }
  p.translation_rank = rank(std::move(stacked));
  p.faithful = p.translation_rank == m;
  if (!p.faithful)
    p.flags.push_back("non-faithful translations");
  return p;
}

/// Concrete model on a unital algebra: S = left multiplication, T = right
/// multiplication by the imaginary basis, Gamma = commutator algebra.
/// If the source is not alternative the pair is still returned, flagged
/// "unverified model".
inline MoufangMaltsevPair pair_from_alternative(const BinaryAlgebra& a) {
  AnticommAlgebra gamma = commutator_algebra(a);
  std::vector<Matrix> s_ops, t_ops;
  for (std::size_t j : imaginary_indices(a)) {
    s_ops.push_back(left_mult(a, a.basis(j)));
    t_ops.push_back(right_mult(a, a.basis(j)));
  }
  MoufangMaltsevPair p =
      make_moufang_pair(std::move(gamma), std::move(s_ops), std::move(t_ops));
  if (!check_alternative(a).pass)
    p.flags.push_back("unverified model: source algebra is not alternative");
  return p;
}

namespace detail {
inline Matrix linear_combination(const std::vector<Matrix>& ops,
                                 const Vector& x, std::size_t n) {
  Matrix r(n, n);
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (x[j].is_zero())
      continue;
    r += x[j] * ops[j];
  }
  return r;
}
} // namespace detail

struct Translations {
  Matrix s, t, p;
};

/// S_x, T_x and P_x = -(S_x + T_x); the triple sums to zero by construction.
inline Translations translations(const MoufangMaltsevPair& pair,
                                 const Vector& x) {
  if (x.dim() != pair.gamma.dim)
    throw DimensionError("translations: tangent vector dimension mismatch");
  Translations tr;
  tr.s = detail::linear_combination(pair.s_ops, x, pair.rep_dim);
  tr.t = detail::linear_combination(pair.t_ops, x, pair.rep_dim);
  tr.p = -(tr.s + tr.t);
  return tr;
}

struct ConjugateTranslations {
  Matrix s_plus, t_plus, p_plus;
};

/// Triality conjugates P+ = S - T, S+ = T - P, T+ = P - S. The inverse
/// conjugation 3S = P+ - T+, 3T = S+ - P+, 3P = T+ - S+ holds exactly.
inline ConjugateTranslations conjugates(const MoufangMaltsevPair& pair,
                                        const Vector& x) {
  Translations tr = translations(pair, x);
  ConjugateTranslations c;
  c.p_plus = tr.s - tr.t;
  c.s_plus = tr.t - tr.p;
  c.t_plus = tr.p - tr.s;
  return c;
}

/// Y(x;y) = (1/6) ([S_x,S_y] + [T_x,T_y] + [P_x,P_y]), exact.
inline Matrix yamagutian(const MoufangMaltsevPair& pair, const Vector& x,
                         const Vector& y) {
  Translations a = translations(pair, x);
  Translations b = translations(pair, y);
  return sixth() * (commutator(a.s, b.s) + commutator(a.t, b.t) +
                    commutator(a.p, b.p));
}

/// Derived operator tables for one pair. The Yamagutian and ternary
/// bracket tables are built on first use and shared by all checks of a
/// run, so verification cost is linear in the number of tuples.
class PairContext {
public:
  explicit PairContext(MoufangMaltsevPair pair) : pair_(std::move(pair)) {
    const std::size_t m = this->m();
    p_ops_.reserve(m);
    sp_ops_.reserve(m);
    tp_ops_.reserve(m);
    pp_ops_.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      Matrix p = -(pair_.s_ops[j] + pair_.t_ops[j]);
      sp_ops_.push_back(pair_.t_ops[j] - p);
      tp_ops_.push_back(p - pair_.s_ops[j]);
      pp_ops_.push_back(pair_.s_ops[j] - pair_.t_ops[j]);
      p_ops_.push_back(std::move(p));
    }
  }

  const MoufangMaltsevPair& pair() const { return pair_; }
  const AnticommAlgebra& gamma() const { return pair_.gamma; }
  std::size_t m() const { return pair_.gamma.dim; }
  std::size_t n() const { return pair_.rep_dim; }

  const Matrix& s_op(std::size_t j) const { return pair_.s_ops[j]; }
  const Matrix& t_op(std::size_t j) const { return pair_.t_ops[j]; }
  const Matrix& p_op(std::size_t j) const { return p_ops_[j]; }
  const Matrix& sp_op(std::size_t j) const { return sp_ops_[j]; }
  const Matrix& tp_op(std::size_t j) const { return tp_ops_[j]; }
  const Matrix& pp_op(std::size_t j) const { return pp_ops_[j]; }

  Matrix s_of(const Vector& x) const {
    return detail::linear_combination(pair_.s_ops, x, n());
  }
  Matrix t_of(const Vector& x) const {
    return detail::linear_combination(pair_.t_ops, x, n());
  }
  Matrix p_of(const Vector& x) const {
    return detail::linear_combination(p_ops_, x, n());
  }
  Matrix sp_of(const Vector& x) const {
    return detail::linear_combination(sp_ops_, x, n());
  }
  Matrix tp_of(const Vector& x) const {
    return detail::linear_combination(tp_ops_, x, n());
  }
  Matrix pp_of(const Vector& x) const {
    return detail::linear_combination(pp_ops_, x, n());
  }

  /// Y(e_j; e_k)
  const Matrix& y(std::size_t j, std::size_t k) {
    ensure_yamagutian();
    return (*y_)[j * m() + k];
  }

  /// Y(v; e_k), linear in the first slot.
  Matrix y_first(const Vector& v, std::size_t k) {
    ensure_yamagutian();
    Matrix r(n(), n());
    for (std::size_t a = 0; a < m(); ++a) {
      if (v[a].is_zero())
        continue;
      r += v[a] * (*y_)[a * m() + k];
    }
    return r;
  }

  /// Y(e_l; w), linear in the second slot.
  Matrix y_second(std::size_t l, const Vector& w) {
    ensure_yamagutian();
    Matrix r(n(), n());
    for (std::size_t a = 0; a < m(); ++a) {
      if (w[a].is_zero())
        continue;
      r += w[a] * (*y_)[l * m() + a];
    }
    return r;
  }

  /// [e_j, e_k, e_l] in Gamma.
  const Vector& bracket3(std::size_t j, std::size_t k, std::size_t l) {
    ensure_ternary();
    return b3_->at(j, k, l);
  }

  void ensure_yamagutian() {
    if (y_)
      return;
    const std::size_t m = this->m();
    std::vector<Matrix> table;
    table.reserve(m * m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        table.push_back(sixth() *
                        (commutator(s_op(j), s_op(k)) +
                         commutator(t_op(j), t_op(k)) +
                         commutator(p_op(j), p_op(k))));
    y_ = std::move(table);
  }

  void ensure_ternary() {
    if (!b3_)
      b3_.emplace(pair_.gamma);
  }

private:
  MoufangMaltsevPair pair_;
  std::vector<Matrix> p_ops_, sp_ops_, tp_ops_, pp_ops_;
  std::optional<std::vector<Matrix>> y_;
  std::optional<TernaryTable> b3_;
};

// ---------------------------------------------------------------------------
// Identity evaluators over basis tuples, shared by the checkers and the
// witness re-verification path.
// ---------------------------------------------------------------------------

inline std::pair<Matrix, Matrix> eval_mc_ss(PairContext& c, std::size_t j,
                                            std::size_t k) {
  Vector b = c.gamma().bracket_basis(j, k);
  return {commutator(c.s_op(j), c.s_op(k)),
          c.s_of(b) - Rational(2) * commutator(c.s_op(j), c.t_op(k))};
}

inline std::pair<Matrix, Matrix> eval_mc_tt(PairContext& c, std::size_t j,
                                            std::size_t k) {
  Vector b = c.gamma().bracket_basis(k, j); // note the reversed bracket
  return {commutator(c.t_op(j), c.t_op(k)),
          c.t_of(b) - Rational(2) * commutator(c.t_op(j), c.s_op(k))};
}

inline std::pair<Matrix, Matrix> eval_mc_st(PairContext& c, std::size_t j,
                                            std::size_t k) {
  return {commutator(c.s_op(j), c.t_op(k)), commutator(c.t_op(j), c.s_op(k))};
}

inline std::pair<Matrix, Matrix> eval_tri_ss(PairContext& c, std::size_t j,
                                             std::size_t k) {
  Vector b = c.gamma().bracket_basis(j, k);
  Matrix rhs = Rational(2) * c.y(j, k) + third() * c.s_of(b) +
               (Rational(2) * third()) * c.t_of(b);
  return {commutator(c.s_op(j), c.s_op(k)), std::move(rhs)};
}

inline std::pair<Matrix, Matrix> eval_tri_st(PairContext& c, std::size_t j,
                                             std::size_t k) {
  Vector b = c.gamma().bracket_basis(j, k);
  Matrix rhs = -c.y(j, k) + third() * c.s_of(b) - third() * c.t_of(b);
  return {commutator(c.s_op(j), c.t_op(k)), std::move(rhs)};
}

inline std::pair<Matrix, Matrix> eval_tri_tt(PairContext& c, std::size_t j,
                                             std::size_t k) {
  Vector b = c.gamma().bracket_basis(j, k);
  Matrix rhs = Rational(2) * c.y(j, k) -
               (Rational(2) * third()) * c.s_of(b) - third() * c.t_of(b);
  return {commutator(c.t_op(j), c.t_op(k)), std::move(rhs)};
}

inline std::pair<Matrix, Matrix> eval_cy_p(PairContext& c, std::size_t j,
                                           std::size_t k) {
  Vector b = c.gamma().bracket_basis(j, k);
  return {Rational(6) * c.y(j, k),
          commutator(c.pp_op(j), c.pp_op(k)) + c.pp_of(b)};
}

inline std::pair<Matrix, Matrix> eval_cy_t(PairContext& c, std::size_t j,
                                           std::size_t k) {
  Vector b = c.gamma().bracket_basis(j, k);
  return {Rational(6) * c.y(j, k),
          commutator(c.tp_op(j), c.tp_op(k)) + c.tp_of(b)};
}

inline std::pair<Matrix, Matrix> eval_cy_s(PairContext& c, std::size_t j,
                                           std::size_t k) {
  Vector b = c.gamma().bracket_basis(j, k);
  return {Rational(6) * c.y(j, k),
          commutator(c.sp_op(j), c.sp_op(k)) + c.sp_of(b)};
}

inline std::pair<Matrix, Matrix> eval_red_s(PairContext& c, std::size_t j,
                                            std::size_t k, std::size_t l) {
  return {Rational(6) * commutator(c.y(j, k), c.s_op(l)),
          c.s_of(c.bracket3(j, k, l))};
}

inline std::pair<Matrix, Matrix> eval_red_t(PairContext& c, std::size_t j,
                                            std::size_t k, std::size_t l) {
  return {Rational(6) * commutator(c.y(j, k), c.t_op(l)),
          c.t_of(c.bracket3(j, k, l))};
}

inline std::pair<Matrix, Matrix> eval_red_p(PairContext& c, std::size_t j,
                                            std::size_t k, std::size_t l) {
  return {Rational(6) * commutator(c.y(j, k), c.p_op(l)),
          c.p_of(c.bracket3(j, k, l))};
}

inline std::pair<Matrix, Matrix> eval_red_sp(PairContext& c, std::size_t j,
                                             std::size_t k, std::size_t l) {
  return {Rational(6) * commutator(c.y(j, k), c.sp_op(l)),
          c.sp_of(c.bracket3(j, k, l))};
}

inline std::pair<Matrix, Matrix> eval_red_tp(PairContext& c, std::size_t j,
                                             std::size_t k, std::size_t l) {
  return {Rational(6) * commutator(c.y(j, k), c.tp_op(l)),
          c.tp_of(c.bracket3(j, k, l))};
}

inline std::pair<Matrix, Matrix> eval_red_pp(PairContext& c, std::size_t j,
                                             std::size_t k, std::size_t l) {
  return {Rational(6) * commutator(c.y(j, k), c.pp_op(l)),
          c.pp_of(c.bracket3(j, k, l))};
}

inline std::pair<Matrix, Matrix> eval_hidden_assoc(PairContext& c,
                                                   std::size_t j,
                                                   std::size_t k,
                                                   std::size_t l,
                                                   std::size_t p) {
  Matrix lhs = Rational(6) * commutator(c.y(j, k), c.y(l, p));
  Matrix rhs = c.y_first(c.bracket3(j, k, l), p) +
               c.y_second(l, c.bracket3(j, k, p));
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// Checkers.
// ---------------------------------------------------------------------------

/// Enumeration policy for the quadruple-indexed operator check: exhaustive
/// up to dimension 8, seeded uniform sampling of `cap` distinct quadruples
/// beyond. Sampled tuples are visited in lexicographic order.
struct Sampling {
  std::uint64_t seed = 0;
  std::uint64_t cap = 10000;
};

namespace detail {

inline void attach_flags(CheckReport& rep, const MoufangMaltsevPair& pair) {
  for (const auto& f : pair.flags)
    rep.notes.push_back(f);
}

template <typename Eval>
void run_pair_identity(CheckReport& rep, PairContext& ctx,
                       const std::string& id, Eval&& eval) {
  const std::size_t m = ctx.m();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      auto [lhs, rhs] = eval(ctx, j, k);
      ++rep.tuples_checked;
      if (lhs != rhs)
        record_failure(rep, id, {j, k}, lhs, rhs);
    }
}

template <typename Eval>
void run_triple_identity(CheckReport& rep, PairContext& ctx,
                         const std::string& id, Eval&& eval) {
  const std::size_t m = ctx.m();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) {
        auto [lhs, rhs] = eval(ctx, j, k, l);
        ++rep.tuples_checked;
        if (lhs != rhs)
          record_failure(rep, id, {j, k, l}, lhs, rhs);
      }
}

} // namespace detail

inline CheckReport check_maurer_cartan(PairContext& ctx) {
  CheckReport rep;
  rep.name = "maurer-cartan";
  detail::attach_flags(rep, ctx.pair());
  detail::run_pair_identity(rep, ctx, "mc-ss", eval_mc_ss);
  detail::run_pair_identity(rep, ctx, "mc-tt", eval_mc_tt);
  detail::run_pair_identity(rep, ctx, "mc-st", eval_mc_st);
  return rep;
}

inline CheckReport check_triality_decomposition(PairContext& ctx) {
  CheckReport rep;
  rep.name = "triality-decomposition";
  detail::attach_flags(rep, ctx.pair());
  detail::run_pair_identity(rep, ctx, "tri-ss", eval_tri_ss);
  detail::run_pair_identity(rep, ctx, "tri-st", eval_tri_st);
  detail::run_pair_identity(rep, ctx, "tri-tt", eval_tri_tt);
  return rep;
}

inline CheckReport check_conjugate_yamagutian(PairContext& ctx) {
  CheckReport rep;
  rep.name = "conjugate-yamagutian";
  detail::attach_flags(rep, ctx.pair());
  detail::run_pair_identity(rep, ctx, "cy-p", eval_cy_p);
  detail::run_pair_identity(rep, ctx, "cy-t", eval_cy_t);
  detail::run_pair_identity(rep, ctx, "cy-s", eval_cy_s);
  return rep;
}

inline CheckReport check_reductivity(PairContext& ctx) {
  CheckReport rep;
  rep.name = "reductivity";
  detail::attach_flags(rep, ctx.pair());
  detail::run_triple_identity(rep, ctx, "red-s", eval_red_s);
  detail::run_triple_identity(rep, ctx, "red-t", eval_red_t);
  detail::run_triple_identity(rep, ctx, "red-p", eval_red_p);
  return rep;
}

inline CheckReport check_conjugate_reductivity(PairContext& ctx) {
  CheckReport rep;
  rep.name = "conjugate-reductivity";
  detail::attach_flags(rep, ctx.pair());
  detail::run_triple_identity(rep, ctx, "red-s+", eval_red_sp);
  detail::run_triple_identity(rep, ctx, "red-t+", eval_red_tp);
  detail::run_triple_identity(rep, ctx, "red-p+", eval_red_pp);
  return rep;
}

inline CheckReport check_hidden_associativity(PairContext& ctx,
                                              const Sampling& sampling = {}) {
  if (sampling.cap == 0)
    throw UsageError("sampling cap must be positive");
  CheckReport rep;
  rep.name = "hidden-associativity";
  detail::attach_flags(rep, ctx.pair());
  const std::size_t m = ctx.m();

  auto visit = [&](std::size_t j, std::size_t k, std::size_t l,
                   std::size_t p) {
    auto [lhs, rhs] = eval_hidden_assoc(ctx, j, k, l, p);
    ++rep.tuples_checked;
    if (lhs != rhs)
      record_failure(rep, "hidden-assoc", {j, k, l, p}, lhs, rhs);
  };

  const std::uint64_t total = static_cast<std::uint64_t>(m) * m * m * m;
  if (m <= 8 || total <= sampling.cap) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          for (std::size_t p = 0; p < m; ++p)
            visit(j, k, l, p);
    return rep;
  }

  std::set<std::array<std::size_t, 4>> chosen;
  SplitMix64 rng(sampling.seed);
  while (chosen.size() < sampling.cap) {
    std::uint64_t x = rng.below(total);
    std::array<std::size_t, 4> t;
    for (int slot = 3; slot >= 0; --slot) {
      t[static_cast<std::size_t>(slot)] = static_cast<std::size_t>(x % m);
      x /= m;
    }
    chosen.insert(t);
  }
  rep.notes.push_back("sampled " + std::to_string(sampling.cap) + " of " +
                      std::to_string(total) + " basis quadruples (seed " +
                      std::to_string(sampling.seed) + ")");
  for (const auto& t : chosen)
    visit(t[0], t[1], t[2], t[3]);
  return rep;
}

// Convenience wrappers that build a throwaway context.

inline CheckReport check_maurer_cartan(const MoufangMaltsevPair& p) {
  PairContext c(p);
  return check_maurer_cartan(c);
}
inline CheckReport check_triality_decomposition(const MoufangMaltsevPair& p) {
  PairContext c(p);
  return check_triality_decomposition(c);
}
inline CheckReport check_conjugate_yamagutian(const MoufangMaltsevPair& p) {
  PairContext c(p);
  return check_conjugate_yamagutian(c);
}
inline CheckReport check_reductivity(const MoufangMaltsevPair& p) {
  PairContext c(p);
  return check_reductivity(c);
}
inline CheckReport check_conjugate_reductivity(const MoufangMaltsevPair& p) {
  PairContext c(p);
  return check_conjugate_reductivity(c);
}
inline CheckReport check_hidden_associativity(const MoufangMaltsevPair& p,
                                              const Sampling& s = {}) {
  PairContext c(p);
  return check_hidden_associativity(c, s);
}

} // namespace moufang
