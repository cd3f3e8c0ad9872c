#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "moufang/algebra.hpp"
#include "moufang/errors.hpp"
#include "moufang/triality.hpp"

namespace moufang {

using InputValue =
    std::variant<BinaryAlgebra, AnticommAlgebra, MoufangMaltsevPair>;

/// A parsed input file together with the exact bytes it came from, which
/// the report digest covers.
struct LoadedInput {
  std::string path;
  std::string bytes;
  InputValue value;

  const BinaryAlgebra* binary() const {
    return std::get_if<BinaryAlgebra>(&value);
  }
  const AnticommAlgebra* anticomm() const {
    return std::get_if<AnticommAlgebra>(&value);
  }
  const MoufangMaltsevPair* pair() const {
    return std::get_if<MoufangMaltsevPair>(&value);
  }

  std::string kind() const {
    if (binary())
      return "binary-algebra";
    if (anticomm())
      return "anticomm-algebra";
    return "pair";
  }
};

// ---------------------------------------------------------------------------
// Canonical writer. One code path produces every fixture byte, so digests
// and round-trips are stable across platforms: sorted sparse entries, one
// per line, normalized scalar strings, trailing newline.
// ---------------------------------------------------------------------------

namespace detail {

inline void emit_sparse_tensor(std::ostream& os, const char* field,
                               const Tensor3& t) {
  std::vector<std::string> lines;
  for (std::size_t a = 0; a < t.dim0(); ++a)
    for (std::size_t b = 0; b < t.dim1(); ++b)
      for (std::size_t c = 0; c < t.dim2(); ++c)
        if (!t(a, b, c).is_zero())
          lines.push_back("[" + std::to_string(a) + ", " + std::to_string(b) +
                          ", " + std::to_string(c) + ", \"" +
                          t(a, b, c).str() + "\"]");
  os << "  \"" << field << "\": [";
  if (lines.empty()) {
    os << "]";
    return;
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << lines[i];
  os << "\n  ]";
}

inline void emit_dense_matrices(std::ostream& os, const char* field,
                                const std::vector<Matrix>& ops) {
  os << "  \"" << field << "\": [";
  for (std::size_t j = 0; j < ops.size(); ++j) {
    os << (j ? ",\n    [" : "\n    [");
    const auto& entries = ops[j].entries();
    for (std::size_t i = 0; i < entries.size(); ++i)
      os << (i ? ", \"" : "\"") << entries[i].str() << "\"";
    os << "]";
  }
  os << (ops.empty() ? "]" : "\n  ]");
}

} // namespace detail

inline std::string serialize_algebra(const BinaryAlgebra& a) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"binary-algebra\",\n  \"dim\": " << a.dim << ",\n";
  detail::emit_sparse_tensor(os, "mult", a.mult);
  os << "\n}\n";
  return os.str();
}

inline std::string serialize_algebra(const AnticommAlgebra& g) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"anticomm-algebra\",\n  \"dim\": " << g.dim << ",\n";
  detail::emit_sparse_tensor(os, "c", g.c);
  os << "\n}\n";
  return os.str();
}

inline std::string serialize_pair(const MoufangMaltsevPair& p) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"pair\",\n  \"dim\": " << p.gamma.dim
     << ",\n  \"rep_dim\": " << p.rep_dim << ",\n";
  detail::emit_sparse_tensor(os, "c", p.gamma.c);
  os << ",\n";
  detail::emit_dense_matrices(os, "s_ops", p.s_ops);
  os << ",\n";
  detail::emit_dense_matrices(os, "t_ops", p.t_ops);
  os << "\n}\n";
  return os.str();
}

inline std::string serialize_input(const InputValue& v) {
  if (const auto* a = std::get_if<BinaryAlgebra>(&v))
    return serialize_algebra(*a);
  if (const auto* g = std::get_if<AnticommAlgebra>(&v))
    return serialize_algebra(*g);
  return serialize_pair(std::get<MoufangMaltsevPair>(v));
}

// ---------------------------------------------------------------------------
// Loader. Accepts any entry order but rejects duplicates, out-of-range
// indices, non-normalized scalars and antisymmetry violations. The unit of
// a binary algebra is inferred from the table (the format carries none).
// ---------------------------------------------------------------------------

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

inline std::size_t read_dim(const nlohmann::json& j, const char* name) {
  const auto& f = require_field(j, name);
  if (!f.is_number_unsigned() || f.get<std::uint64_t>() == 0)
    throw ParseError(std::string("field \"") + name +
                     "\" must be a positive integer");
  return f.get<std::size_t>();
}

inline Rational read_scalar(const nlohmann::json& j) {
  if (!j.is_string())
    throw ParseError("scalars must be strings of the form \"p\" or \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

inline Tensor3 read_sparse_tensor(const nlohmann::json& j, const char* field,
                                  std::size_t dim) {
  const auto& entries = require_field(j, field);
  if (!entries.is_array())
    throw ParseError(std::string("field \"") + field + "\" must be an array");
  Tensor3 t(dim, dim, dim);
  std::set<std::array<std::size_t, 3>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4)
      throw ParseError(std::string("each \"") + field +
                       "\" entry must be [i, j, k, \"scalar\"]");
    std::array<std::size_t, 3> idx{};
    for (std::size_t s = 0; s < 3; ++s) {
      if (!e[s].is_number_unsigned() || e[s].get<std::uint64_t>() >= dim)
        throw ParseError(std::string("index out of range in \"") + field +
                         "\" entry " + e.dump());
      idx[s] = e[s].get<std::size_t>();
    }
    if (!seen.insert(idx).second)
      throw ParseError(std::string("duplicate entry in \"") + field + "\": " +
                       e.dump());
    Rational v = read_scalar(e[3]);
    if (v.is_zero())
      throw ParseError(std::string("explicit zero entry in \"") + field +
                       "\" (omit zero entries): " + e.dump());
    t.at(idx[0], idx[1], idx[2]) = v;
  }
  return t;
}

inline void require_antisymmetric(const Tensor3& c) {
  for (std::size_t i = 0; i < c.dim0(); ++i)
    for (std::size_t j = 0; j < c.dim1(); ++j)
      for (std::size_t k = j; k < c.dim2(); ++k)
        if (c(i, j, k) != -c(i, k, j))
          throw ParseError("anticommutativity shape violation: c[" +
                           std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + "] = " + c(i, j, k).str() +
                           " but c[" + std::to_string(i) + "," +
                           std::to_string(k) + "," + std::to_string(j) +
                           "] = " + c(i, k, j).str());
}

inline std::optional<std::size_t> infer_unit(const BinaryAlgebra& a) {
  for (std::size_t u = 0; u < a.dim; ++u) {
    bool ok = true;
    for (std::size_t i = 0; i < a.dim && ok; ++i)
      ok = a.mul_basis(u, i) == a.basis(i) && a.mul_basis(i, u) == a.basis(i);
    if (ok)
      return u;
  }
  return std::nullopt;
}

inline std::vector<Matrix> read_dense_matrices(const nlohmann::json& j,
                                               const char* field,
                                               std::size_t count,
                                               std::size_t n) {
  const auto& arr = require_field(j, field);
  if (!arr.is_array() || arr.size() != count)
    throw ParseError(std::string("field \"") + field + "\" must hold " +
                     std::to_string(count) + " matrices");
  std::vector<Matrix> ops;
  ops.reserve(count);
  for (const auto& me : arr) {
    if (!me.is_array() || me.size() != n * n)
      throw ParseError(std::string("each \"") + field + "\" matrix must be " +
                       std::to_string(n * n) +
                       " row-major scalar strings");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n * n; ++i)
      m.at(i / n, i % n) = read_scalar(me[i]);
    ops.push_back(std::move(m));
  }
  return ops;
}

} // namespace detail

/// Parses one serialized algebra or pair document.
inline InputValue parse_input(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object())
    throw ParseError("input must be a JSON object");

  const auto& kind = detail::require_field(j, "kind");
  if (!kind.is_string())
    throw ParseError("field \"kind\" must be a string");
  const std::string k = kind.get<std::string>();

  if (k == "binary-algebra") {
    BinaryAlgebra a;
    a.dim = detail::read_dim(j, "dim");
    a.mult = detail::read_sparse_tensor(j, "mult", a.dim);
    a.basis_names = default_basis_names(a.dim);
    a.unit_index = detail::infer_unit(a);
    return a;
  }
  if (k == "anticomm-algebra") {
    AnticommAlgebra g;
    g.dim = detail::read_dim(j, "dim");
    g.c = detail::read_sparse_tensor(j, "c", g.dim);
    detail::require_antisymmetric(g.c);
    g.basis_names = default_basis_names(g.dim, 1);
    return g;
  }
  if (k == "pair") {
    AnticommAlgebra g;
    g.dim = detail::read_dim(j, "dim");
    g.c = detail::read_sparse_tensor(j, "c", g.dim);
    detail::require_antisymmetric(g.c);
    g.basis_names = default_basis_names(g.dim, 1);
    std::size_t n = detail::read_dim(j, "rep_dim");
    auto s_ops = detail::read_dense_matrices(j, "s_ops", g.dim, n);
    auto t_ops = detail::read_dense_matrices(j, "t_ops", g.dim, n);
    return make_moufang_pair(std::move(g), std::move(s_ops), std::move(t_ops));
  }
  throw ParseError("unknown kind \"" + k + "\"");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error("cannot write file: " + path);
  out << bytes;
  if (!out.good())
    throw Error("write failed: " + path);
}

/// Loads and validates an input file; keeps the raw bytes for digesting.
inline LoadedInput load_input(const std::string& path) {
  LoadedInput li;
  li.path = path;
  li.bytes = read_file(path);
  try {
    li.value = parse_input(li.bytes);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  return li;
}

} // namespace moufang
