#pragma once

// The invariant suite behind `viennot verify`: every module property checked
// exhaustively up to a size bound, plus seeded random sampling where the
// exhaustive range is too small to be interesting. Each check reports the
// first counterexample in enumeration order (smallest size first).

#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "viennot/diagram.hpp"
#include "viennot/io.hpp"
#include "viennot/oracle.hpp"
#include "viennot/schensted.hpp"
#include "viennot/updown.hpp"

namespace viennot::verify {

struct Config {
  int max_k = 5;  // permutations of k <= max_k, matchings of 2k <= 2*max_k points
  std::uint64_t seed = 1;
  int random_samples = 1000;
  int random_k = 12;
  int jobs = 1;
};

struct Result {
  std::string module;
  std::string name;
  bool passed = true;
  std::string counterexample;
};

using Outcome = std::optional<std::string>;  // counterexample, if any

struct Check {
  std::string module;
  std::string name;
  std::function<Outcome(const Config&)> run;
};

namespace detail {

template <class F>
Outcome for_each_permutation(int max_k, F&& f) {
  for (int k = 0; k <= max_k; ++k) {
    oracle::PermutationStream s(k);
    while (auto w = s.next())
      if (auto bad = f(*w)) return "w = " + io::format_word(*w) + ": " + *bad;
  }
  return std::nullopt;
}

template <class F>
Outcome for_each_matching(int max_k, F&& f) {
  for (int k = 0; k <= max_k; ++k) {
    oracle::MatchingStream s(k);
    while (auto m = s.next()) {
      const auto w = matching_to_word(*m);
      if (auto bad = f(*m, w)) return "w = " + io::format_word(w) + ": " + *bad;
    }
  }
  return std::nullopt;
}

inline Permutation random_permutation(std::mt19937_64& rng, int k) {
  std::vector<int> w(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) w[i] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(std::move(w));
}

inline bool strictly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] >= v[i - 1]) return false;
  return true;
}

inline bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

inline Outcome fail(const std::string& s) { return s; }

}  // namespace detail

inline std::vector<Check> all_checks() {
  using detail::fail;
  std::vector<Check> checks;
  auto add = [&](std::string module, std::string name, std::function<Outcome(const Config&)> run) {
    checks.push_back({std::move(module), std::move(name), std::move(run)});
  };

  // core ------------------------------------------------------------------
  add("core", "matching/word roundtrip", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching& m, const MatchingWord& w) -> Outcome {
      if (word_to_matching(w) != m) return fail("word_to_matching(matching_to_word(m)) != m");
      return std::nullopt;
    });
  });
  add("core", "barred symbols descend", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching&, const MatchingWord& w) -> Outcome {
      int expect = w.k();
      for (const Token& s : w.symbols())
        if (s.barred && s.value != expect--) return fail("bars out of order");
      return std::nullopt;
    });
  });
  add("core", "bent permutation matches string diagram", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const int k = w.size();
      std::vector<Matching::Pair> pairs;
      for (int t = 1; t <= k; ++t) pairs.emplace_back(t, 2 * k + 1 - w(t));
      if (matching_to_word(Matching(pairs)) != permutation_to_matching_word(w))
        return fail("bent matching word differs");
      return std::nullopt;
    });
  });
  add("core", "strands_cross symmetric", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching& m, const MatchingWord&) -> Outcome {
      for (int i = 1; i <= m.k(); ++i)
        for (int j = i + 1; j <= m.k(); ++j)
          if (strands_cross(m, i, j) != strands_cross(m, j, i)) return fail("asymmetric crossing");
      return std::nullopt;
    });
  });

  // schensted -------------------------------------------------------------
  add("schensted", "rows = LDS, columns = LIS", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto r = rs(w);
      if (r.shape.rows() != lds_length_brute(w)) return fail("rows != longest decreasing");
      if (r.shape.columns() != lis_length_brute(w)) return fail("columns != longest increasing");
      return std::nullopt;
    });
  });
  add("schensted", "rs_inverse after rs is identity", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto r = rs(w);
      if (!r.P.is_standard() || !r.Q.is_standard()) return fail("P or Q not standard");
      if (rs_inverse(r.P, r.Q) != w) return fail("rs_inverse(rs(w)) != w");
      return std::nullopt;
    });
  });
  add("schensted", "rs of inverse swaps P and Q", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto a = rs(w), b = rs(w.inverse());
      if (a.P != b.Q || a.Q != b.P) return fail("rs(w^-1) != (Q,P)");
      return std::nullopt;
    });
  });
  add("schensted", "insertion shapes follow Q's movie", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto hist = insertion_history(w);
      const auto movie = recording_movie(rs(w).Q);
      for (std::size_t t = 0; t < hist.size(); ++t)
        if (hist[t].shape() != movie[t]) return fail("shape mismatch at step " + std::to_string(t));
      return std::nullopt;
    });
  });
  add("schensted", "reverse_insert inverts row_insert (random)", [](const Config& c) -> Outcome {
    std::mt19937_64 rng(c.seed);
    for (int i = 0; i < c.random_samples; ++i) {
      const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(c.random_k));
      const auto w = detail::random_permutation(rng, k);
      Tableau t = insertion_history(w)[static_cast<std::size_t>(k - 1)];
      const int v = w(k);
      const auto ins = row_insert(t, v);
      const auto [back, ejected] = reverse_insert(ins.tableau, ins.added_box);
      if (back != t || ejected != v) return "w = " + io::format_word(w) + ": roundtrip failed";
    }
    return std::nullopt;
  });

  // viennot ---------------------------------------------------------------
  add("viennot", "reading rule gives rs (exhaustive)", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto d = build_viennot(w);
      const auto r = rs(w);
      if (read_P(d) != r.P) return fail("read_P != P");
      if (read_Q(d) != r.Q) return fail("read_Q != Q");
      return std::nullopt;
    });
  });
  add("viennot", "reading rule gives rs (random)", [](const Config& c) -> Outcome {
    std::mt19937_64 rng(c.seed + 1);
    for (int i = 0; i < c.random_samples; ++i) {
      const auto w = detail::random_permutation(rng, c.random_k);
      const auto d = build_viennot(w);
      const auto r = rs(w);
      if (read_P(d) != r.P || read_Q(d) != r.Q) return "w = " + io::format_word(w) + ": reading rule fails";
    }
    return std::nullopt;
  });
  add("viennot", "transpose is the diagram of the inverse", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      if (build_viennot(w).transposed() != build_viennot(w.inverse())) return fail("transpose mismatch");
      return std::nullopt;
    });
  });
  add("viennot", "paths are disjoint and monotone", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      return find_coloring_defect(build_viennot(w).grid());
    });
  });
  add("viennot", "max color = LDS, c_1 paths = LIS", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto d = build_viennot(w);
      if (d.max_color() != lds_length_brute(w)) return fail("max color != LDS");
      if (static_cast<int>(lattice_paths(d.grid(), 1).size()) != lis_length_brute(w))
        return fail("c_1 path count != LIS");
      return std::nullopt;
    });
  });
  add("viennot", "corner duality", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto d = build_viennot(w);
      std::set<Point> c1_outer;
      for (const auto& cn : corners(d, 1))
        if (cn.kind == CornerKind::Outer) c1_outer.insert(cn.at);
      const auto dots = d.dots();
      if (c1_outer != std::set<Point>(dots.begin(), dots.end())) return fail("c_1 outer corners != points");
      for (Color col = 1; col < d.max_color() + 1; ++col) {
        std::set<Point> inner, outer_next;
        for (const auto& cn : corners(d, col))
          if (cn.kind == CornerKind::Inner) inner.insert(cn.at);
        for (const auto& cn : corners(d, col + 1))
          if (cn.kind == CornerKind::Outer) outer_next.insert(cn.at);
        if (inner != outer_next) return fail("inner corners of c_" + std::to_string(col) + " != outer of next");
      }
      return std::nullopt;
    });
  });
  add("viennot", "time slices are bumping tableaux", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const auto d = build_viennot(w);
      const auto hist = insertion_history(w);
      for (int s = 0; s <= w.size(); ++s)
        if (time_slice(d, s).P != hist[s]) return fail("slice " + std::to_string(s) + " differs");
      return std::nullopt;
    });
  });
  add("viennot", "lds_extract / lis_extract witnesses", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      if (w.size() == 0) return std::nullopt;
      const auto d = build_viennot(w);
      const auto lds = lds_extract(d), lis = lis_extract(d);
      std::vector<int> dv, iv;
      for (int t : lds) dv.push_back(w(t));
      for (int t : lis) iv.push_back(w(t));
      if (!detail::strictly_increasing(lds) || !detail::strictly_decreasing(dv)) return fail("LDS witness invalid");
      if (static_cast<int>(lds.size()) != lds_length_brute(w)) return fail("LDS witness too short");
      if (!detail::strictly_increasing(lis) || !detail::strictly_increasing(iv)) return fail("LIS witness invalid");
      if (static_cast<int>(lis.size()) != lis_length_brute(w)) return fail("LIS witness too short");
      return std::nullopt;
    });
  });

  // updown ----------------------------------------------------------------
  add("updown", "sundaram_stanley / ss_inverse on matchings", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching&, const MatchingWord& w) -> Outcome {
      if (ss_inverse(sundaram_stanley(w)) != w) return fail("ss_inverse(ss(w)) != w");
      return std::nullopt;
    });
  });
  add("updown", "sundaram_stanley / ss_inverse on up-down tableaux", [](const Config& c) -> Outcome {
    for (int k = 0; k <= c.max_k; ++k) {
      oracle::UpDownStream s(k);
      while (auto ud = s.next())
        if (sundaram_stanley(ss_inverse(*ud)) != *ud)
          return "movie of " + std::to_string(2 * k) + " steps: ss(ss_inverse(ud)) != ud";
    }
    return std::nullopt;
  });
  add("updown", "matching and movie counts agree", [](const Config& c) -> Outcome {
    for (int k = 0; k <= c.max_k; ++k) {
      const auto a = oracle::count(oracle::MatchingStream(k));
      const auto b = oracle::count(oracle::UpDownStream(k));
      if (a != b) return "k = " + std::to_string(k) + ": " + std::to_string(a) + " != " + std::to_string(b);
    }
    return std::nullopt;
  });
  add("updown", "diagram markings recover the word", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching&, const MatchingWord& w) -> Outcome {
      if (diagram_to_word(build_updown(w)) != w) return fail("diagram_to_word(build_updown(w)) != w");
      return std::nullopt;
    });
  });
  add("updown", "time slices are the up-down tableau", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching&, const MatchingWord& w) -> Outcome {
      if (ud_from_slices(build_updown(w)) != sundaram_stanley(w)) return fail("slices != sundaram_stanley");
      return std::nullopt;
    });
  });
  add("updown", "up-down paths are disjoint and monotone", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching&, const MatchingWord& w) -> Outcome {
      const auto d = build_updown(w);
      return find_coloring_defect(d.grid(), d.crosses());
    });
  });
  add("updown", "no cross below-left of a corner", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching&, const MatchingWord& w) -> Outcome {
      const auto d = build_updown(w);
      const auto xs = d.crosses();
      for (Color col = 1; col <= d.max_color(); ++col)
        for (const auto& cn : corners(d.grid(), col))
          for (const Point x : xs)
            if (x.t <= cn.at.t && x.b <= cn.at.b) return fail("cross inside a corner rectangle");
      return std::nullopt;
    });
  });
  add("updown", "longest pattern = max rows = brute force", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching& m, const MatchingWord& w) -> Outcome {
      if (m.k() == 0) return std::nullopt;
      const auto pw = longest_pattern(w);
      if (pw.length() != sundaram_stanley(w).max_rows()) return fail("pattern length != max rows");
      if (pw.length() != oracle::longest_pattern_brute(m)) return fail("pattern length != brute force");
      if (!is_coexistent(w, pw.times)) return fail("witness not coexistent");
      for (std::size_t i = 0; i < pw.strands.size(); ++i)
        for (std::size_t j = i + 1; j < pw.strands.size(); ++j)
          if (!strands_cross(m, pw.strands[i], pw.strands[j])) return fail("witness strands do not cross");
      return std::nullopt;
    });
  });
  add("updown", "bent permutations replay Q then P", [](const Config& c) {
    return detail::for_each_permutation(c.max_k, [](const Permutation& w) -> Outcome {
      const int k = w.size();
      const auto ud = sundaram_stanley(permutation_to_matching_word(w));
      const auto r = rs(w);
      const auto q = recording_movie(r.Q), p = recording_movie(r.P);
      for (int t = 0; t <= k; ++t) {
        if (ud[t] != q[t]) return fail("first half differs from Q's movie");
        if (ud[2 * k - t] != p[t]) return fail("second half differs from P's movie");
      }
      return std::nullopt;
    });
  });

  // oracle ----------------------------------------------------------------
  add("oracle", "census: avoiding matchings = row-bounded movies", [](const Config& c) -> Outcome {
    for (int k = 0; k <= c.max_k; ++k)
      for (int n = 0; n <= k; ++n) {
        const auto row = oracle::census(k, n, c.jobs);
        if (!row.agree())
          return "k = " + std::to_string(k) + ", n = " + std::to_string(n) + ": " +
                 std::to_string(row.count_avoiding) + " != " + std::to_string(row.count_ud_bounded);
      }
    return std::nullopt;
  });
  add("oracle", "crossing family = coexistent subsequence", [](const Config& c) {
    return detail::for_each_matching(c.max_k, [](const Matching& m, const MatchingWord& w) -> Outcome {
      if (oracle::max_crossing_family(m) != oracle::max_coexistent_decreasing(w)) return fail("definitions disagree");
      return std::nullopt;
    });
  });

  return checks;
}

/// Runs every check, `jobs` at a time. Results come back in suite order.
inline std::vector<Result> run_all(const Config& config) {
  const auto checks = all_checks();
  std::vector<Result> results(checks.size());
  auto run_one = [&](std::size_t i) {
    Result r{checks[i].module, checks[i].name, true, {}};
    try {
      if (auto bad = checks[i].run(config)) {
        r.passed = false;
        r.counterexample = *bad;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.counterexample = std::string("exception: ") + e.what();
    }
    results[i] = std::move(r);
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(config.jobs, 1));
  for (std::size_t start = 0; start < checks.size(); start += jobs) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = start; i < std::min(start + jobs, checks.size()); ++i)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run_one, i));
    for (auto& f : batch) f.get();
  }
  return results;
}

}  // namespace viennot::verify
