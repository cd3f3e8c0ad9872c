#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moufang/fixtures.hpp"
#include "moufang/prng.hpp"
#include "moufang/yamaguti.hpp"

using namespace moufang;

namespace {

Vector random_vector(SplitMix64& rng, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i)
    v.at(i) = Rational(static_cast<long>(rng.below(9)) - 4,
                       static_cast<long>(rng.below(3)) + 1);
  return v;
}

} // namespace

TEST_CASE("ternary bracket is antisymmetric in its first two slots") {
  AnticommAlgebra g = commutator_algebra(octonions());
  SplitMix64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = random_vector(rng, 7), y = random_vector(rng, 7),
           z = random_vector(rng, 7);
    CHECK(yamaguti_bracket(g, x, x, z).is_zero());
    CHECK(yamaguti_bracket(g, x, y, z) == -yamaguti_bracket(g, y, x, z));
  }
}

TEST_CASE("ternary bracket is trilinear") {
  AnticommAlgebra g = commutator_algebra(octonions());
  SplitMix64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    Vector x = random_vector(rng, 7), xp = random_vector(rng, 7),
           y = random_vector(rng, 7), z = random_vector(rng, 7);
    Rational lam(static_cast<long>(rng.below(9)) - 4,
                 static_cast<long>(rng.below(3)) + 1);
    CHECK(yamaguti_bracket(g, x + lam * xp, y, z) ==
          yamaguti_bracket(g, x, y, z) + lam * yamaguti_bracket(g, xp, y, z));
    CHECK(yamaguti_bracket(g, y, x + lam * xp, z) ==
          yamaguti_bracket(g, y, x, z) + lam * yamaguti_bracket(g, y, xp, z));
    CHECK(yamaguti_bracket(g, y, z, x + lam * xp) ==
          yamaguti_bracket(g, y, z, x) + lam * yamaguti_bracket(g, y, z, xp));
  }
}

TEST_CASE("on a Lie algebra the bracket collapses to 2[[x,y],z]") {
  for (const AnticommAlgebra& g :
       {lie_cross(), commutator_algebra(quaternions())}) {
    REQUIRE(check_jacobi(g).pass);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
      Vector x = random_vector(rng, g.dim), y = random_vector(rng, g.dim),
             z = random_vector(rng, g.dim);
      CHECK(yamaguti_bracket(g, x, y, z) ==
            Rational(2) * g.bracket(g.bracket(x, y), z));
    }
  }
}

TEST_CASE("frozen bracket value on the imaginary octonions") {
  AnticommAlgebra g = commutator_algebra(octonions());
  // [e1, e2, e4] = -4 e7; imaginary indices are 0-based (e1 -> 0)
  Vector b = yamaguti_bracket(g, g.basis(0), g.basis(1), g.basis(3));
  CHECK(b == Rational(-4) * g.basis(6));
}

TEST_CASE("yamaguti tensor of the zero algebra vanishes") {
  AnticommAlgebra zero;
  zero.dim = 3;
  zero.c = Tensor3(3, 3, 3);
  zero.basis_names = default_basis_names(3, 1);
  YamagutiTensor t = yamaguti_tensor(zero);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          CHECK(t.y6(i, j, k, l).is_zero());
}

TEST_CASE("on a Lie algebra 6Y = 2 C.C in constants") {
  for (const AnticommAlgebra& g :
       {lie_cross(), commutator_algebra(quaternions())}) {
    YamagutiTensor t = yamaguti_tensor(g);
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = 0; j < g.dim; ++j)
        for (std::size_t k = 0; k < g.dim; ++k)
          for (std::size_t l = 0; l < g.dim; ++l) {
            Rational cc;
            for (std::size_t s = 0; s < g.dim; ++s)
              cc += g.c(s, j, k) * g.c(i, s, l);
            CHECK(t.y6(i, j, k, l) == Rational(2) * cc);
          }
  }
}

TEST_CASE("tensor contraction reproduces the bracket") {
  AnticommAlgebra g = commutator_algebra(octonions());
  YamagutiTensor t = yamaguti_tensor(g);

  // antisymmetry of the tensor in j,k
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 7; ++k)
        for (std::size_t l = 0; l < 7; ++l)
          CHECK(t.y6(i, j, k, l) == -t.y6(i, k, j, l));

  // basis triples
  for (std::size_t j = 0; j < 7; ++j)
    for (std::size_t k = 0; k < 7; ++k)
      for (std::size_t l = 0; l < 7; ++l)
        CHECK(contract_trilinear(t.y6, g.basis(j), g.basis(k), g.basis(l)) ==
              yamaguti_bracket(g, g.basis(j), g.basis(k), g.basis(l)));

  // 100 seeded random rational triples
  SplitMix64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Vector x = random_vector(rng, 7), y = random_vector(rng, 7),
           z = random_vector(rng, 7);
    CHECK(contract_trilinear(t.y6, x, y, z) == yamaguti_bracket(g, x, y, z));
  }
}

TEST_CASE("associator tensor vanishes exactly on Lie algebras") {
  for (const AnticommAlgebra& g :
       {lie_cross(), commutator_algebra(quaternions())}) {
    AssociatorTensor t = associator_tensor(g);
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = 0; j < g.dim; ++j)
        for (std::size_t k = 0; k < g.dim; ++k)
          for (std::size_t l = 0; l < g.dim; ++l)
            CHECK(t.l(i, j, k, l).is_zero());
  }
}

TEST_CASE("octonion associator tensor is nonzero and totally antisymmetric") {
  AnticommAlgebra g = commutator_algebra(octonions());
  AssociatorTensor t = associator_tensor(g);
  bool any_nonzero = false;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 7; ++k)
        for (std::size_t l = 0; l < 7; ++l) {
          any_nonzero = any_nonzero || !t.l(i, j, k, l).is_zero();
          CHECK(t.l(i, j, k, l) == -t.l(i, k, j, l)); // swap j,k
          CHECK(t.l(i, j, k, l) == -t.l(i, j, l, k)); // swap k,l
        }
  CHECK(any_nonzero);
}

TEST_CASE("constant-level relation Y = l + (1/3) C.C round-trips") {
  std::vector<AnticommAlgebra> corpus = {
      lie_cross(), commutator_algebra(quaternions()),
      commutator_algebra(octonions()), commutator_algebra(split_octonions()),
      commutator_algebra(sedenions())};
  for (const AnticommAlgebra& g : corpus) {
    YamagutiTensor y = yamaguti_tensor(g);
    AssociatorTensor l = associator_tensor(g);
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = 0; j < g.dim; ++j)
        for (std::size_t k = 0; k < g.dim; ++k)
          for (std::size_t p = 0; p < g.dim; ++p) {
            Rational cc;
            for (std::size_t s = 0; s < g.dim; ++s)
              cc += g.c(s, j, k) * g.c(i, s, p);
            CHECK(sixth() * y.y6(i, j, k, p) ==
                  l.l(i, j, k, p) + third() * cc);
          }
  }
}

TEST_CASE("sagle-yamaguti verdicts across the corpus") {
  CHECK(check_sagle_yamaguti(lie_cross()).pass);
  CHECK(check_sagle_yamaguti(commutator_algebra(quaternions())).pass);

  CheckReport oct = check_sagle_yamaguti(commutator_algebra(octonions()));
  CHECK(oct.pass);
  CHECK(oct.tuples_checked == 2401);

  CHECK(check_sagle_yamaguti(commutator_algebra(split_octonions())).pass);

  AnticommAlgebra sed = commutator_algebra(sedenions());
  CheckReport sy = check_sagle_yamaguti(sed);
  CheckReport mal = check_maltsev(sed);
  CHECK(!sy.pass);
  CHECK(!mal.pass);
  CHECK(sy.pass == mal.pass);
  REQUIRE(!sy.witnesses.empty());

  // soundness of the reported quadruple, by direct recomputation
  const Witness& w = sy.witnesses.front();
  auto [lhs, rhs] = eval_sagle_yamaguti(sed, w.tuple[0], w.tuple[1],
                                        w.tuple[2], w.tuple[3]);
  CHECK(lhs == w.lhs);
  CHECK(rhs == w.rhs);
}

TEST_CASE("equivalence harness agrees on named algebras and perturbations") {
  std::vector<std::pair<std::string, AnticommAlgebra>> corpus = {
      {"lie-cross", lie_cross()},
      {"imaginary-quaternions", commutator_algebra(quaternions())},
      {"imaginary-octonions", commutator_algebra(octonions())},
      {"imaginary-split-octonions", commutator_algebra(split_octonions())},
      {"sedenion-commutators", commutator_algebra(sedenions())},
  };
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    corpus.emplace_back("perturbation-" + std::to_string(seed),
                        random_anticomm(seed));

  EquivalenceReport rep = check_equivalence_corpus(corpus);
  CHECK(rep.all_agree);
  REQUIRE(rep.entries.size() == corpus.size());
  for (const auto& e : rep.entries)
    CHECK(e.agree);
  CHECK(rep.entries[2].maltsev.pass);  // octonions pass both
  CHECK(rep.entries[2].sagle.pass);
  CHECK(!rep.entries[4].maltsev.pass); // sedenions fail both
  CHECK(!rep.entries[4].sagle.pass);
}
