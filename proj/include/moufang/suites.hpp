#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "moufang/digest.hpp"
#include "moufang/serialize.hpp"
#include "moufang/suites_fwd.hpp"
#include "moufang/triality.hpp"
#include "moufang/version.hpp"
#include "moufang/yamaguti.hpp"

namespace moufang {

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (std::size_t i = 0; i < all_suites().size(); ++i)
    if (name == suite_name(all_suites()[i]))
      return all_suites()[i];
  return std::nullopt;
}

struct SuiteConfig {
  std::vector<Suite> suites;
  std::uint64_t seed = 0;
  std::uint64_t cap = 10000;
  enum class Format { text, machine };
  Format format = Format::text;
};

struct SuiteResult {
  Suite suite;
  bool pass = false;
  bool error = false; // e.g. commutator closure failed while deriving Gamma
  std::string error_message;
  std::vector<CheckReport> checks;
  std::vector<std::string> notes;
  double seconds = 0.0; // text reports only; machine reports omit timing
};

struct RunReport {
  std::string tool = kToolName;
  std::string version = kVersion;
  std::string input_path;
  std::string input_kind;
  std::string input_digest;
  std::uint64_t seed = 0;
  std::uint64_t cap = 10000;
  std::vector<SuiteResult> results;
  std::size_t failed_suites = 0;
};

namespace detail {

inline bool is_operator_suite(Suite s) {
  switch (s) {
  case Suite::maurer_cartan:
  case Suite::decomposition:
  case Suite::conjugate_yamagutian:
  case Suite::reductivity:
  case Suite::conjugate_reductivity:
  case Suite::hidden_associativity:
  case Suite::generalized_representation:
    return true;
  default:
    return false;
  }
}

inline bool is_gamma_suite(Suite s) {
  return s == Suite::sagle_yamaguti || s == Suite::maltsev ||
         s == Suite::equivalence;
}

/// Rejects incompatible suite/input combinations before any computation.
inline void require_compatible(const LoadedInput& input, Suite s) {
  const bool unital_binary = input.binary() && input.binary()->unit_index;
  if (is_operator_suite(s)) {
    if (input.pair() || unital_binary)
      return;
    throw UsageError(std::string("suite \"") + suite_name(s) +
                     "\" needs a pair or a unital binary algebra, got " +
                     input.kind() +
                     (input.binary() ? " without unit" : ""));
  }
  if (is_gamma_suite(s)) {
    if (input.anticomm() || input.pair() || unital_binary)
      return;
    throw UsageError(std::string("suite \"") + suite_name(s) +
                     "\" needs an anticommutative algebra, a pair, or a "
                     "unital binary algebra");
  }
}

/// Tangent algebra of the input: itself, the pair's Gamma, or the
/// commutator algebra of a unital binary algebra.
inline AnticommAlgebra derive_gamma(const LoadedInput& input) {
  if (const auto* g = input.anticomm())
    return *g;
  if (const auto* p = input.pair())
    return p->gamma;
  return commutator_algebra(*input.binary());
}

struct RunState {
  std::optional<PairContext> ctx;

  PairContext& context(const LoadedInput& input) {
    if (!ctx) {
      if (const auto* p = input.pair())
        ctx.emplace(*p);
      else
        ctx.emplace(pair_from_alternative(*input.binary()));
    }
    return *ctx;
  }
};

inline SuiteResult run_one_suite(const LoadedInput& input, Suite s,
                                 const SuiteConfig& cfg, RunState& state) {
  SuiteResult res;
  res.suite = s;
  auto pass_when = [&](bool all) { res.pass = all; };

  switch (s) {
  case Suite::axioms: {
    if (const auto* b = input.binary()) {
      res.checks.push_back(check_unit_law(*b));
      res.checks.push_back(check_alternative(*b));
      CheckReport closure;
      closure.name = "commutator-closure";
      if (b->unit_index) {
        try {
          AnticommAlgebra g = commutator_algebra(*b);
          closure.tuples_checked = g.dim * g.dim;
          res.checks.push_back(closure);
          res.checks.push_back(check_anticommutative(g));
        } catch (const ClosureError& e) {
          closure.pass = false;
          closure.failures = 1;
          closure.witnesses.push_back(
              {"commutator-closure",
               {e.lhs_index, e.rhs_index},
               as_scalar(Rational::parse(e.unit_coeff)),
               as_scalar(Rational(0))});
          res.checks.push_back(closure);
        }
      } else {
        closure.pass = false;
        closure.notes.push_back("no unit element, cannot derive Gamma");
        res.checks.push_back(closure);
      }
    } else if (const auto* g = input.anticomm()) {
      res.checks.push_back(check_anticommutative(*g));
    } else {
      const auto* p = input.pair();
      res.checks.push_back(check_anticommutative(p->gamma));
      CheckReport faithful;
      faithful.name = "faithful-translations";
      faithful.tuples_checked = 1;
      faithful.pass = p->faithful;
      if (!p->faithful) {
        faithful.failures = 1;
        faithful.witnesses.push_back(
            {"faithful-translations",
             {},
             as_scalar(Rational(static_cast<long>(p->translation_rank))),
             as_scalar(Rational(static_cast<long>(p->gamma.dim)))});
      }
      res.checks.push_back(faithful);
    }
    break;
  }
  case Suite::maurer_cartan:
    res.checks.push_back(check_maurer_cartan(state.context(input)));
    break;
  case Suite::decomposition:
    res.checks.push_back(check_triality_decomposition(state.context(input)));
    break;
  case Suite::conjugate_yamagutian:
    res.checks.push_back(check_conjugate_yamagutian(state.context(input)));
    break;
  case Suite::reductivity:
    res.checks.push_back(check_reductivity(state.context(input)));
    break;
  case Suite::conjugate_reductivity:
    res.checks.push_back(check_conjugate_reductivity(state.context(input)));
    break;
  case Suite::hidden_associativity:
    res.checks.push_back(check_hidden_associativity(
        state.context(input), Sampling{cfg.seed, cfg.cap}));
    break;
  case Suite::sagle_yamaguti:
    res.checks.push_back(check_sagle_yamaguti(derive_gamma(input)));
    break;
  case Suite::maltsev:
    res.checks.push_back(check_maltsev(derive_gamma(input)));
    break;
  case Suite::equivalence: {
    AnticommAlgebra g = derive_gamma(input);
    CheckReport m = check_maltsev(g);
    CheckReport sy = check_sagle_yamaguti(g);
    bool agree = m.pass == sy.pass;
    res.notes.push_back(std::string("maltsev ") + (m.pass ? "pass" : "fail") +
                        ", sagle-yamaguti " + (sy.pass ? "pass" : "fail") +
                        ": verdicts " + (agree ? "agree" : "DISAGREE"));
    res.checks.push_back(std::move(m));
    res.checks.push_back(std::move(sy));
    res.pass = agree;
    return res;
  }
  case Suite::generalized_representation: {
    PairContext& ctx = state.context(input);
    CheckReport red = check_reductivity(ctx);
    CheckReport ha =
        check_hidden_associativity(ctx, Sampling{cfg.seed, cfg.cap});
    bool ok = red.pass && ha.pass;
    res.notes.push_back(
        std::string("the Yamagutian is a generalized representation of "
                    "Gamma: ") +
        (ok ? "yes" : "no"));
    res.checks.push_back(std::move(red));
    res.checks.push_back(std::move(ha));
    res.pass = ok;
    return res;
  }
  }

  bool all = true;
  for (const auto& c : res.checks)
    all = all && c.pass;
  pass_when(all);
  return res;
}

} // namespace detail

/// Runs the requested suites against one input. Duplicate suite names are
/// collapsed (first occurrence wins the position). Incompatible requests
/// raise UsageError before any check runs.
inline RunReport run_suites(const LoadedInput& input, const SuiteConfig& cfg) {
  if (cfg.suites.empty())
    throw UsageError("no suites requested");
  if (cfg.cap == 0)
    throw UsageError("sampling cap must be positive");

  std::vector<Suite> suites;
  for (Suite s : cfg.suites) {
    bool dup = false;
    for (Suite t : suites)
      dup = dup || t == s;
    if (!dup)
      suites.push_back(s);
  }
  for (Suite s : suites)
    detail::require_compatible(input, s);

  RunReport report;
  report.input_path = input.path;
  report.input_kind = input.kind();
  report.input_digest = sha256_hex(input.bytes);
  report.seed = cfg.seed;
  report.cap = cfg.cap;

  detail::RunState state;
  for (Suite s : suites) {
    auto started = std::chrono::steady_clock::now();
    SuiteResult res;
    try {
      res = detail::run_one_suite(input, s, cfg, state);
    } catch (const ClosureError& e) {
      res.suite = s;
      res.pass = false;
      res.error = true;
      res.error_message = e.what();
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    if (!res.pass)
      ++report.failed_suites;
    report.results.push_back(std::move(res));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering. The machine format is canonical byte-for-byte: identical
// inputs, suites and seed produce identical documents. Timing appears only
// in the text format.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\t':
      out += "\\t";
      break;
    case '\r':
      out += "\\r";
      break;
    default:
      if (static_cast<unsigned char>(ch) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
        out += buf;
      } else {
        out += ch;
      }
    }
  }
  return out;
}

inline void emit_matrix_json(std::ostringstream& os, const Matrix& m) {
  os << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols()
     << ", \"entries\": [";
  const auto& e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    os << (i ? ", \"" : "\"") << e[i].str() << "\"";
  os << "]}";
}

inline void emit_string_array(std::ostringstream& os,
                              const std::vector<std::string>& items) {
  os << "[";
  for (std::size_t i = 0; i < items.size(); ++i)
    os << (i ? ", \"" : "\"") << json_escape(items[i]) << "\"";
  os << "]";
}

} // namespace detail

inline std::string render_machine(const RunReport& r) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"tool\": \"" << detail::json_escape(r.tool) << "\",\n";
  os << "  \"version\": \"" << detail::json_escape(r.version) << "\",\n";
  os << "  \"input\": \"" << detail::json_escape(r.input_path) << "\",\n";
  os << "  \"input_kind\": \"" << r.input_kind << "\",\n";
  os << "  \"input_digest\": \"" << r.input_digest << "\",\n";
  os << "  \"seed\": " << r.seed << ",\n";
  os << "  \"cap\": " << r.cap << ",\n";
  os << "  \"failed_suites\": " << r.failed_suites << ",\n";

  std::size_t witness_count = 0;
  for (const auto& res : r.results)
    for (const auto& c : res.checks)
      witness_count += c.witnesses.size();
  os << "  \"witness_count\": " << witness_count << ",\n";

  os << "  \"suites\": [";
  std::size_t windex = 0;
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& res = r.results[i];
    os << (i ? ",\n    {" : "\n    {") << "\n";
    os << "      \"suite\": \"" << suite_name(res.suite) << "\",\n";
    os << "      \"verdict\": \""
       << (res.error ? "error" : (res.pass ? "pass" : "fail")) << "\",\n";
    if (res.error)
      os << "      \"error\": \"" << detail::json_escape(res.error_message)
         << "\",\n";
    os << "      \"notes\": ";
    detail::emit_string_array(os, res.notes);
    os << ",\n";
    os << "      \"checks\": [";
    for (std::size_t j = 0; j < res.checks.size(); ++j) {
      const auto& c = res.checks[j];
      os << (j ? ",\n        {" : "\n        {") << "\n";
      os << "          \"name\": \"" << c.name << "\",\n";
      os << "          \"verdict\": \"" << (c.pass ? "pass" : "fail")
         << "\",\n";
      os << "          \"tuples_checked\": " << c.tuples_checked << ",\n";
      os << "          \"failures\": " << c.failures << ",\n";
      os << "          \"notes\": ";
      detail::emit_string_array(os, c.notes);
      os << ",\n";
      os << "          \"witnesses\": [";
      for (std::size_t w = 0; w < c.witnesses.size(); ++w) {
        const auto& wit = c.witnesses[w];
        os << (w ? ",\n            {" : "\n            {") << "\n";
        os << "              \"index\": " << windex++ << ",\n";
        os << "              \"identity\": \"" << wit.identity << "\",\n";
        os << "              \"formula\": \""
           << detail::json_escape(identity_formula(wit.identity)) << "\",\n";
        os << "              \"tuple\": [";
        for (std::size_t t = 0; t < wit.tuple.size(); ++t)
          os << (t ? ", " : "") << wit.tuple[t];
        os << "],\n";
        os << "              \"lhs\": ";
        detail::emit_matrix_json(os, wit.lhs);
        os << ",\n              \"rhs\": ";
        detail::emit_matrix_json(os, wit.rhs);
        os << "\n            }";
      }
      os << (c.witnesses.empty() ? "]" : "\n          ]") << "\n        }";
    }
    os << (res.checks.empty() ? "]" : "\n      ]") << "\n    }";
  }
  os << (r.results.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

inline std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << r.tool << " " << r.version << "\n";
  os << "input:  " << r.input_path << " (" << r.input_kind << ")\n";
  os << "digest: " << r.input_digest << "\n";
  os << "seed:   " << r.seed << "  cap: " << r.cap << "\n\n";
  for (const auto& res : r.results) {
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.3f s", res.seconds);
    os << "suite " << suite_name(res.suite) << ": "
       << (res.error ? "ERROR" : (res.pass ? "PASS" : "FAIL")) << " ("
       << timing << ")\n";
    if (res.error)
      os << "  error: " << res.error_message << "\n";
    for (const auto& note : res.notes)
      os << "  note: " << note << "\n";
    for (const auto& c : res.checks) {
      os << "  check " << c.name << ": " << (c.pass ? "pass" : "fail") << ", "
         << c.tuples_checked << " tuples checked";
      if (c.failures)
        os << ", " << c.failures << " failing";
      os << "\n";
      for (const auto& note : c.notes)
        os << "    note: " << note << "\n";
      for (const auto& w : c.witnesses) {
        os << "    witness [" << w.identity
           << "]  " << identity_formula(w.identity) << "\n";
        os << "      tuple: (";
        for (std::size_t t = 0; t < w.tuple.size(); ++t)
          os << (t ? ", " : "") << w.tuple[t];
        os << ")\n";
        os << "      lhs:\n";
        std::istringstream lhs(w.lhs.str());
        for (std::string line; std::getline(lhs, line);)
          os << "        " << line << "\n";
        os << "      rhs:\n";
        std::istringstream rhs(w.rhs.str());
        for (std::string line; std::getline(rhs, line);)
          os << "        " << line << "\n";
      }
    }
  }
  os << "summary: " << r.failed_suites << " of " << r.results.size()
     << " suites failed\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Witness re-verification: recompute one reported identity instance from
// the original input and confirm the stored exact values.
// ---------------------------------------------------------------------------

/// Recomputes (lhs, rhs) of a witness identity at a basis tuple.
inline std::pair<Matrix, Matrix> recompute_witness(const LoadedInput& input,
                                                   const std::string& identity,
                                                   std::span<const std::size_t> t) {
  auto need = [&](std::size_t k) {
    if (t.size() != k)
      throw UsageError("witness tuple for \"" + identity + "\" must have " +
                       std::to_string(k) + " indices");
  };

  if (identity == "unit-left" || identity == "unit-right" ||
      identity == "associativity" || identity == "left-alternative" ||
      identity == "right-alternative" || identity == "commutator-closure") {
    const auto* b = input.binary();
    if (!b)
      throw UsageError("identity \"" + identity +
                       "\" needs a binary-algebra input");
    if (identity == "unit-left") {
      need(1);
      return eval_unit_left(*b, t[0]);
    }
    if (identity == "unit-right") {
      need(1);
      return eval_unit_right(*b, t[0]);
    }
    if (identity == "commutator-closure") {
      need(2);
      auto imag = imaginary_indices(*b);
      Vector w = b->mul_basis(imag[t[0]], imag[t[1]]) -
                 b->mul_basis(imag[t[1]], imag[t[0]]);
      return {as_scalar(w[*b->unit_index]), as_scalar(Rational(0))};
    }
    need(3);
    if (identity == "associativity")
      return eval_associativity(*b, t[0], t[1], t[2]);
    if (identity == "left-alternative")
      return eval_left_alternative(*b, t[0], t[1], t[2]);
    return eval_right_alternative(*b, t[0], t[1], t[2]);
  }

  if (identity == "anticommutativity" || identity == "jacobi" ||
      identity == "maltsev" || identity == "sagle-yamaguti") {
    AnticommAlgebra g = detail::derive_gamma(input);
    if (identity == "anticommutativity") {
      need(3);
      return eval_anticommutativity(g, t[0], t[1], t[2]);
    }
    if (identity == "jacobi") {
      need(3);
      return eval_jacobi(g, t[0], t[1], t[2]);
    }
    if (identity == "maltsev") {
      need(4);
      return eval_maltsev(g, t[0], t[1], t[2], t[3]);
    }
    need(4);
    return eval_sagle_yamaguti(g, t[0], t[1], t[2], t[3]);
  }

  if (identity == "faithful-translations") {
    const auto* p = input.pair();
    if (!p)
      throw UsageError("identity \"faithful-translations\" needs a pair");
    return {as_scalar(Rational(static_cast<long>(p->translation_rank))),
            as_scalar(Rational(static_cast<long>(p->gamma.dim)))};
  }

  // Operator identities: build the pair context the same way `check` does.
  if (!input.pair() && !input.binary())
    throw UsageError("identity \"" + identity +
                     "\" needs a pair or a unital binary algebra");
  detail::RunState state;
  PairContext& c = state.context(input);

  if (identity == "mc-ss" || identity == "mc-tt" || identity == "mc-st" ||
      identity == "tri-ss" || identity == "tri-st" || identity == "tri-tt" ||
      identity == "cy-p" || identity == "cy-t" || identity == "cy-s") {
    need(2);
    if (identity == "mc-ss")
      return eval_mc_ss(c, t[0], t[1]);
    if (identity == "mc-tt")
      return eval_mc_tt(c, t[0], t[1]);
    if (identity == "mc-st")
      return eval_mc_st(c, t[0], t[1]);
    if (identity == "tri-ss")
      return eval_tri_ss(c, t[0], t[1]);
    if (identity == "tri-st")
      return eval_tri_st(c, t[0], t[1]);
    if (identity == "tri-tt")
      return eval_tri_tt(c, t[0], t[1]);
    if (identity == "cy-p")
      return eval_cy_p(c, t[0], t[1]);
    if (identity == "cy-t")
      return eval_cy_t(c, t[0], t[1]);
    return eval_cy_s(c, t[0], t[1]);
  }
  if (identity == "red-s" || identity == "red-t" || identity == "red-p" ||
      identity == "red-s+" || identity == "red-t+" || identity == "red-p+") {
    need(3);
    if (identity == "red-s")
      return eval_red_s(c, t[0], t[1], t[2]);
    if (identity == "red-t")
      return eval_red_t(c, t[0], t[1], t[2]);
    if (identity == "red-p")
      return eval_red_p(c, t[0], t[1], t[2]);
    if (identity == "red-s+")
      return eval_red_sp(c, t[0], t[1], t[2]);
    if (identity == "red-t+")
      return eval_red_tp(c, t[0], t[1], t[2]);
    return eval_red_pp(c, t[0], t[1], t[2]);
  }
  if (identity == "hidden-assoc") {
    need(4);
    return eval_hidden_assoc(c, t[0], t[1], t[2], t[3]);
  }
  throw UsageError("unknown identity \"" + identity + "\"");
}

/// One witness plucked out of a machine report.
struct ReportWitness {
  std::string input_path;
  std::string input_digest;
  std::string suite;
  std::string check;
  std::string identity;
  std::vector<std::size_t> tuple;
  Matrix lhs;
  Matrix rhs;
};

namespace detail {

inline Matrix parse_matrix_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw ParseError("malformed matrix in report");
  std::size_t rows = j["rows"].get<std::size_t>();
  std::size_t cols = j["cols"].get<std::size_t>();
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols)
    throw ParseError("matrix entry count mismatch in report");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    m.at(i / cols, i % cols) = Rational::parse(entries[i].get<std::string>());
  return m;
}

} // namespace detail

/// Finds witness `index` in a serialized machine report.
inline ReportWitness find_witness(const std::string& report_bytes,
                                  std::uint64_t index) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(report_bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object() || !j.contains("suites"))
    throw ParseError("not a machine report");

  try {
    for (const auto& suite : j["suites"])
      for (const auto& check : suite["checks"])
        for (const auto& wit : check["witnesses"])
          if (wit["index"].get<std::uint64_t>() == index) {
            ReportWitness rw;
            rw.input_path = j["input"].get<std::string>();
            rw.input_digest = j["input_digest"].get<std::string>();
            rw.suite = suite["suite"].get<std::string>();
            rw.check = check["name"].get<std::string>();
            rw.identity = wit["identity"].get<std::string>();
            for (const auto& t : wit["tuple"])
              rw.tuple.push_back(t.get<std::size_t>());
            rw.lhs = detail::parse_matrix_json(wit["lhs"]);
            rw.rhs = detail::parse_matrix_json(wit["rhs"]);
            return rw;
          }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed machine report: ") + e.what());
  }
  throw UsageError("no witness with index " + std::to_string(index) +
                   " in report");
}

} // namespace moufang
