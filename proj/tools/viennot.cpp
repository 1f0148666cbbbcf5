// Command-line front end. See `viennot --help` for the input grammar.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "viennot/cli.hpp"

namespace {

constexpr const char* kGrammar =
    "Words are comma-separated signed integers; whitespace is ignored and -i\n"
    "stands for the barred symbol i (e.g. \"4,2,3,-4,-3,1,-2,-1\"). Matchings may\n"
    "also be given as pairs of points (\"1-7,2-5,3-10,...\").";

int finish(const viennot::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace viennot::cli;
  CLI::App app{"Robinson-Schensted, Viennot diagrams and up-down tableaux.\n" + std::string(kGrammar)};
  app.require_subcommand(1);

  std::string word, p_json, q_json, movie;
  // one variable per subcommand: CLI11 writes defaults at declaration time
  std::string rs_format, vi_format, ud_format, ss_format;
  std::optional<std::string> out_path;
  int points = 0, avoid = 0, jobs = 1, max_k = 5;
  std::uint64_t seed = 1;
  std::optional<CommandResult> result;

  auto* rs = app.add_subcommand("rs", "Insertion and recording tableaux of a permutation");
  rs->add_option("word", word, "permutation in one-line notation")->required();
  rs->add_option("--format", rs_format, "text or json")->default_val("text");
  rs->callback([&] { result = cmd_rs(word, rs_format); });

  auto* rsi = app.add_subcommand("rs-inverse", "Permutation from a pair of standard tableaux (JSON)");
  rsi->add_option("P", p_json, "insertion tableau, e.g. [[1,3],[2],[4]]")->required();
  rsi->add_option("Q", q_json, "recording tableau")->required();
  rsi->callback([&] { result = cmd_rs_inverse(p_json, q_json); });

  auto* vi = app.add_subcommand("viennot", "Render the Viennot diagram of a permutation");
  vi->add_option("word", word, "permutation")->required();
  vi->add_option("--format", vi_format, "ascii, svg or json")->default_val("ascii");
  vi->add_option("--out", out_path, "output file (default: standard output)");
  vi->callback([&] { result = cmd_viennot(word, vi_format, out_path); });

  auto* ud = app.add_subcommand("updown", "Render the up-down Viennot diagram of a matching");
  ud->add_option("word", word, "matching word or pairs")->required();
  ud->add_option("--format", ud_format, "ascii, svg or json")->default_val("ascii");
  ud->add_option("--out", out_path, "output file (default: standard output)");
  ud->callback([&] { result = cmd_updown(word, ud_format, out_path); });

  auto* ss = app.add_subcommand("ss", "Up-down tableau of a matching (Sundaram-Stanley)");
  ss->add_option("word", word, "matching word or pairs")->required();
  ss->add_option("--format", ss_format, "text or json")->default_val("text");
  ss->callback([&] { result = cmd_ss(word, ss_format); });

  auto* ssi = app.add_subcommand("ss-inverse", "Matching word of an up-down tableau (JSON list of partitions)");
  ssi->add_option("movie", movie, "e.g. [[],[1],[1,1],[2,1],[2],[1],[1,1],[1],[]]")->required();
  ssi->callback([&] { result = cmd_ss_inverse(movie); });

  auto* lds = app.add_subcommand("lds", "Longest decreasing subsequence read off the diagram");
  lds->add_option("word", word, "permutation")->required();
  lds->callback([&] { result = cmd_subsequence(word, true); });

  auto* lis = app.add_subcommand("lis", "Longest increasing subsequence read off the diagram");
  lis->add_option("word", word, "permutation")->required();
  lis->callback([&] { result = cmd_subsequence(word, false); });

  auto* pat = app.add_subcommand("pattern", "Longest pattern (pairwise crossing strands) of a matching");
  pat->add_option("word", word, "matching word or pairs")->required();
  pat->callback([&] { result = cmd_pattern(word); });

  auto* cnt = app.add_subcommand("count", "Census: (n+1)-avoiding matchings vs row-bounded up-down tableaux (CSV)");
  cnt->add_option("--points", points, "number of points 2k")->required();
  cnt->add_option("--avoid", avoid, "row bound n")->required();
  cnt->add_option("--jobs", jobs, "worker threads")->default_val(1);
  cnt->callback([&] { result = cmd_count(points, avoid, jobs); });

  auto* ver = app.add_subcommand("verify", "Run the full invariant suite");
  ver->add_option("--max-k", max_k, "permutations of k <= K, matchings of 2k <= 2K points")->default_val(5);
  ver->add_option("--jobs", jobs, "worker threads")->default_val(1);
  ver->add_option("--seed", seed, "seed for randomized sampling")->default_val(1);
  ver->callback([&] { result = cmd_verify(max_k, jobs, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }
  return result ? finish(*result) : kBadInput;
}
