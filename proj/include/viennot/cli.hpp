#pragma once

// Command implementations for the `viennot` tool. Each returns its exit code
// and output instead of touching the process streams, so tests can drive
// them directly. Exit codes: 0 success, 1 property failure, 2 bad input,
// 3 size limit.

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "viennot/diagram.hpp"
#include "viennot/io.hpp"
#include "viennot/oracle.hpp"
#include "viennot/render.hpp"
#include "viennot/schensted.hpp"
#include "viennot/updown.hpp"
#include "viennot/verify.hpp"

namespace viennot::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kBadInput = 2, kSizeLimit = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeLimit: return kSizeLimit;
    case ErrorKind::InternalInvariantViolation: return kPropertyFailure;
    default: return kBadInput;
  }
}

/// Runs a command body, turning library errors into exit codes.
template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), {}, std::string(e.what()) + "\n"};
  }
}

/// Writes to `out_path` when given (the command then prints nothing),
/// otherwise returns the text as command output.
inline CommandResult emit(std::string text, const std::optional<std::string>& out_path) {
  if (!out_path || out_path->empty() || *out_path == "-") return {kOk, std::move(text), {}};
  std::ofstream file(*out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot open '" + *out_path + "' for writing");
  file << text;
  if (!file) throw Error(ErrorKind::IoError, "failed writing '" + *out_path + "'");
  return {kOk, {}, {}};
}

inline std::string format_tableau_text(const Tableau& t) {
  int width = 1;
  for (const auto& row : t.rows())
    for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  std::string out;
  for (const auto& row : t.rows()) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string v = std::to_string(row[i]);
      if (i) line += ' ';
      line += std::string(static_cast<std::size_t>(width) - v.size(), ' ') + v;
    }
    out += "  " + line + "\n";
  }
  if (t.empty()) out += "  (empty)\n";
  return out;
}

inline std::string format_partition_text(const Partition& p) {
  if (p.empty()) return "()";
  return "(" + io::format_signed_list(p.parts()) + ")";
}

inline CommandResult cmd_rs(const std::string& word, const std::string& format) {
  return guarded([&]() -> CommandResult {
    const auto w = io::parse_permutation(word);
    const auto r = rs(w);
    if (format == "json") {
      io::json j{{"P", io::to_json(r.P)}, {"Q", io::to_json(r.Q)}, {"shape", io::to_json(r.shape)}};
      return {kOk, j.dump() + "\n", {}};
    }
    if (format != "text") throw Error(ErrorKind::ParseError, "unknown format '" + format + "' (text, json)");
    std::string out = "P:\n" + format_tableau_text(r.P) + "Q:\n" + format_tableau_text(r.Q);
    out += "shape: " + format_partition_text(r.shape) + "\n";
    return {kOk, out, {}};
  });
}

inline CommandResult cmd_rs_inverse(const std::string& p_json, const std::string& q_json) {
  return guarded([&]() -> CommandResult {
    const auto P = io::tableau_from_json(io::parse_json(p_json));
    const auto Q = io::tableau_from_json(io::parse_json(q_json));
    return {kOk, io::format_word(rs_inverse(P, Q)) + "\n", {}};
  });
}

inline CommandResult cmd_viennot(const std::string& word, const std::string& format,
                                 const std::optional<std::string>& out_path) {
  return guarded([&]() -> CommandResult {
    const auto f = render::parse_format(format);
    return emit(render::render(build_viennot(io::parse_permutation(word)), f), out_path);
  });
}

inline CommandResult cmd_updown(const std::string& word, const std::string& format,
                                const std::optional<std::string>& out_path) {
  return guarded([&]() -> CommandResult {
    const auto f = render::parse_format(format);
    return emit(render::render(build_updown(io::parse_matching_or_word(word)), f), out_path);
  });
}

inline CommandResult cmd_ss(const std::string& word, const std::string& format) {
  return guarded([&]() -> CommandResult {
    const auto ud = sundaram_stanley(io::parse_matching_or_word(word));
    if (format == "json") return {kOk, io::to_json(ud).dump() + "\n", {}};
    if (format != "text") throw Error(ErrorKind::ParseError, "unknown format '" + format + "' (text, json)");
    std::string out;
    for (std::size_t t = 0; t < ud.shapes().size(); ++t)
      out += std::to_string(t) + ": " + format_partition_text(ud.shapes()[t]) + "\n";
    return {kOk, out, {}};
  });
}

inline CommandResult cmd_ss_inverse(const std::string& movie_json) {
  return guarded([&]() -> CommandResult {
    const auto ud = io::updown_from_json(io::parse_json(movie_json));
    return {kOk, io::format_word(ss_inverse(ud)) + "\n", {}};
  });
}

inline CommandResult cmd_subsequence(const std::string& word, bool decreasing) {
  return guarded([&]() -> CommandResult {
    const auto w = io::parse_permutation(word);
    const auto d = build_viennot(w);
    const auto times = decreasing ? lds_extract(d) : lis_extract(d);
    std::vector<int> values;
    for (int t : times) values.push_back(w(t));
    std::string out = "length: " + std::to_string(times.size()) + "\n";
    out += "times: " + io::format_signed_list(times) + "\n";
    out += "values: " + io::format_signed_list(values) + "\n";
    return {kOk, out, {}};
  });
}

/// Longest pattern; the witness is re-checked before it is printed.
inline CommandResult cmd_pattern(const std::string& input) {
  return guarded([&]() -> CommandResult {
    const auto w = io::parse_matching_or_word(input);
    const auto m = word_to_matching(w);
    const auto pw = longest_pattern(w);
    bool ok = is_coexistent(w, pw.times);
    for (std::size_t i = 0; ok && i < pw.strands.size(); ++i)
      for (std::size_t j = i + 1; ok && j < pw.strands.size(); ++j) ok = strands_cross(m, pw.strands[i], pw.strands[j]);
    if (!ok) return {kPropertyFailure, {}, "witness failed verification for " + io::format_word(w) + "\n"};
    std::string out = "length: " + std::to_string(pw.length()) + "\n";
    out += "strands: " + io::format_signed_list(pw.strands) + "\n";
    out += "times: " + io::format_signed_list(pw.times) + "\n";
    return {kOk, out, {}};
  });
}

inline constexpr const char* kCensusHeader = "k,n,count_avoiding,count_ud_bounded,agree";

inline std::string format_census_row(const oracle::CensusRow& row) {
  return std::to_string(row.k) + "," + std::to_string(row.n) + "," + std::to_string(row.count_avoiding) + "," +
         std::to_string(row.count_ud_bounded) + "," + (row.agree() ? "agree" : "disagree");
}

inline CommandResult cmd_count(int points, int avoid, int jobs) {
  return guarded([&]() -> CommandResult {
    if (points < 0 || points % 2 != 0)
      throw Error(ErrorKind::ParseError, "--points must be a non-negative even number");
    if (avoid < 0) throw Error(ErrorKind::ParseError, "--avoid must be non-negative");
    const auto row = oracle::census(points / 2, avoid, jobs);
    return {row.agree() ? kOk : kPropertyFailure, std::string(kCensusHeader) + "\n" + format_census_row(row) + "\n",
            {}};
  });
}

inline CommandResult cmd_verify(int max_k, int jobs, std::uint64_t seed) {
  return guarded([&]() -> CommandResult {
    if (max_k < 0) throw Error(ErrorKind::ParseError, "--max-k must be non-negative");
    oracle::check_limit(2 * max_k <= oracle::Limits{}.max_matching_points && max_k <= oracle::Limits{}.max_permutation_k,
                        "--max-k " + std::to_string(max_k) + " exceeds the enumeration limit");
    verify::Config config;
    config.max_k = max_k;
    config.jobs = jobs;
    config.seed = seed;
    const auto results = verify::run_all(config);
    std::string out, err;
    int failures = 0;
    for (const auto& r : results) {
      out += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.module + ": " + r.name + "\n";
      if (!r.passed) {
        ++failures;
        err += "counterexample [" + r.module + ": " + r.name + "] " + r.counterexample + "\n";
      }
    }
    out += std::to_string(results.size() - static_cast<std::size_t>(failures)) + "/" +
           std::to_string(results.size()) + " properties hold\n";
    return {failures ? kPropertyFailure : kOk, out, err};
  });
}

}  // namespace viennot::cli
