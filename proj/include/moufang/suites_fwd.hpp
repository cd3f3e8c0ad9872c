#pragma once

#include <array>

namespace moufang {

enum class Suite {
  axioms,
  maurer_cartan,
  decomposition,
  conjugate_yamagutian,
  reductivity,
  conjugate_reductivity,
  hidden_associativity,
  sagle_yamaguti,
  maltsev,
  equivalence,
  generalized_representation,
};

inline const char* suite_name(Suite s) {
  switch (s) {
  case Suite::axioms:
    return "axioms";
  case Suite::maurer_cartan:
    return "maurer-cartan";
  case Suite::decomposition:
    return "decomposition";
  case Suite::conjugate_yamagutian:
    return "conjugate-yamagutian";
  case Suite::reductivity:
    return "reductivity";
  case Suite::conjugate_reductivity:
    return "conjugate-reductivity";
  case Suite::hidden_associativity:
    return "hidden-associativity";
  case Suite::sagle_yamaguti:
    return "sagle-yamaguti";
  case Suite::maltsev:
    return "maltsev";
  case Suite::equivalence:
    return "equivalence";
  case Suite::generalized_representation:
    return "generalized-representation";
  }
  return "?";
}

inline const std::array<Suite, 11>& all_suites() {
  static const std::array<Suite, 11> suites = {
      Suite::axioms,
      Suite::maurer_cartan,
      Suite::decomposition,
      Suite::conjugate_yamagutian,
      Suite::reductivity,
      Suite::conjugate_reductivity,
      Suite::hidden_associativity,
      Suite::sagle_yamaguti,
      Suite::maltsev,
      Suite::equivalence,
      Suite::generalized_representation,
  };
  return suites;
}

} // namespace moufang
