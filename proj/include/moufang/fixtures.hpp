#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moufang/algebra.hpp"
#include "moufang/prng.hpp"
#include "moufang/serialize.hpp"

namespace moufang {

/// The 3-dimensional cross-product algebra: [e1,e2] = e3 cyclically.
inline AnticommAlgebra lie_cross() {
  AnticommAlgebra g;
  g.dim = 3;
  g.c = Tensor3(3, 3, 3);
  g.c.at(2, 0, 1) = Rational(1);
  g.c.at(2, 1, 0) = Rational(-1);
  g.c.at(0, 1, 2) = Rational(1);
  g.c.at(0, 2, 1) = Rational(-1);
  g.c.at(1, 2, 0) = Rational(1);
  g.c.at(1, 0, 2) = Rational(-1);
  g.basis_names = {"e1", "e2", "e3"};
  return g;
}

/// Seeded random perturbation of the imaginary-octonion commutator
/// algebra: one structure constant bumped by 1 (its mirror by -1), so the
/// result stays anticommutative but generically loses the Mal'tsev
/// property. Deterministic for a given seed.
inline AnticommAlgebra random_anticomm(std::uint64_t seed) {
  AnticommAlgebra g = commutator_algebra(octonions());
  SplitMix64 rng(seed);
  std::size_t i = static_cast<std::size_t>(rng.below(g.dim));
  std::size_t j = static_cast<std::size_t>(rng.below(g.dim));
  std::size_t k = static_cast<std::size_t>(rng.below(g.dim));
  while (k == j)
    k = static_cast<std::size_t>(rng.below(g.dim));
  g.c.at(i, j, k) += Rational(1);
  g.c.at(i, k, j) -= Rational(1);
  return g;
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "quaternions", "octonions",  "split-octonions",
      "sedenions",   "lie-cross",  "random-anticomm"};
  return names;
}

/// Builds a named fixture. The seed only matters for "random-anticomm".
inline InputValue generate_fixture(std::string_view name, std::uint64_t seed) {
  if (name == "quaternions")
    return quaternions();
  if (name == "octonions")
    return octonions();
  if (name == "split-octonions")
    return split_octonions();
  if (name == "sedenions")
    return sedenions();
  if (name == "lie-cross")
    return lie_cross();
  if (name == "random-anticomm")
    return random_anticomm(seed);
  throw UsageError("unknown fixture name \"" + std::string(name) + "\"");
}

} // namespace moufang
