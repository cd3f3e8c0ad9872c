#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moufang/linalg.hpp"

namespace moufang {

/// Exact counterexample: the basis tuple where an identity broke and both
/// sides' values. Vectors and scalars are carried as n x 1 and 1 x 1
/// matrices so the payload is uniform.
struct Witness {
  std::string identity;           // stable identity id, e.g. "mc-ss"
  std::vector<std::size_t> tuple; // basis indices, in enumeration order
  Matrix lhs;
  Matrix rhs;
};

/// Per-check verdict with exact counterexample witnesses.
///
/// Witness policy: the first failing tuple per identity, in deterministic
/// enumeration order; `failures` still counts every failing instance.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::uint64_t tuples_checked = 0;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

/// fail <=> witnesses nonempty, maintained by every checker.
inline void record_failure(CheckReport& report, const std::string& identity,
                           std::vector<std::size_t> tuple, Matrix lhs,
                           Matrix rhs) {
  report.pass = false;
  ++report.failures;
  for (const auto& w : report.witnesses)
    if (w.identity == identity)
      return; // keep only the first witness per identity
  report.witnesses.push_back(
      {identity, std::move(tuple), std::move(lhs), std::move(rhs)});
}

/// Human-readable display formula for a stable identity id. Reports cite
/// these corrected operator forms verbatim.
inline std::string identity_formula(const std::string& id) {
  if (id == "unit-left")
    return "e_u * e_i = e_i";
  if (id == "unit-right")
    return "e_i * e_u = e_i";
  if (id == "anticommutativity")
    return "C^i_{jk} = -C^i_{kj}";
  if (id == "jacobi")
    return "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0";
  if (id == "maltsev")
    return "[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]";
  if (id == "left-alternative")
    return "(x,x,y) = 0";
  if (id == "right-alternative")
    return "(x,y,y) = 0";
  if (id == "associativity")
    return "(x,y,z) = 0";
  if (id == "commutator-closure")
    return "[x,y] has no component on the unit";
  if (id == "faithful-translations")
    return "S_x = 0 and T_x = 0 imply x = 0";
  if (id == "mc-ss")
    return "[S_x,S_y] = S_[x,y] - 2[S_x,T_y]";
  if (id == "mc-tt")
    return "[T_x,T_y] = T_[y,x] - 2[T_x,S_y]";
  if (id == "mc-st")
    return "[S_x,T_y] = [T_x,S_y]";
  if (id == "tri-ss")
    return "[S_x,S_y] = 2Y(x;y) + (1/3)S_[x,y] + (2/3)T_[x,y]";
  if (id == "tri-st")
    return "[S_x,T_y] = -Y(x;y) + (1/3)S_[x,y] - (1/3)T_[x,y]";
  if (id == "tri-tt")
    return "[T_x,T_y] = 2Y(x;y) - (2/3)S_[x,y] - (1/3)T_[x,y]";
  if (id == "cy-p")
    return "6Y(x;y) = [P+_x,P+_y] + P+_[x,y]";
  if (id == "cy-t")
    return "6Y(x;y) = [T+_x,T+_y] + T+_[x,y]";
  if (id == "cy-s")
    return "6Y(x;y) = [S+_x,S+_y] + S+_[x,y]";
  if (id == "red-s")
    return "6[Y(x;y),S_z] = S_[x,y,z]";
  if (id == "red-t")
    return "6[Y(x;y),T_z] = T_[x,y,z]";
  if (id == "red-p")
    return "6[Y(x;y),P_z] = P_[x,y,z]";
  if (id == "red-s+")
    return "6[Y(x;y),S+_z] = S+_[x,y,z]";
  if (id == "red-t+")
    return "6[Y(x;y),T+_z] = T+_[x,y,z]";
  if (id == "red-p+")
    return "6[Y(x;y),P+_z] = P+_[x,y,z]";
  if (id == "hidden-assoc")
    return "6[Y(x;y),Y(z;w)] = Y([x,y,z];w) + Y(z;[x,y,w])";
  if (id == "sagle-yamaguti")
    return "[x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]";
  return id;
}

} // namespace moufang
