#pragma once

// Text grammar and JSON encodings.
//
// Words: comma-separated signed integers, whitespace ignored; -i is the
// barred symbol ī ("7,8,6,5,-8,3,-7,4,1,-6,2,-5,-4,-3,-2,-1"). Matchings may
// instead be written as pairs "1-7,2-5,...".
//
// JSON: Partition = [int...], Tableau = [[int...]...], Matching = [[a,b]...],
// MatchingWord = [signed int...], UpDownTableau = [Partition...].

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "viennot/core.hpp"

namespace viennot::io {

using nlohmann::json;

namespace detail {

struct RawToken {
  std::size_t offset;  // 1-based character position of the token
  std::string text;    // whitespace removed
};

inline std::vector<RawToken> split_commas(std::string_view input) {
  std::vector<RawToken> out;
  RawToken cur{1, {}};
  bool started = false;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const char ch = input[i];
    if (ch == ',') {
      out.push_back(std::move(cur));
      cur = RawToken{i + 2, {}};
      started = false;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!started) {
      cur.offset = i + 1;
      started = true;
    }
    cur.text.push_back(ch);
  }
  out.push_back(std::move(cur));
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t offset, const std::string& what) {
  throw Error(ErrorKind::ParseError, what + " at character " + std::to_string(offset));
}

inline int to_int(const RawToken& tok, std::string_view text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    parse_fail(tok.offset, "expected an integer, found '" + std::string(text) + "'");
  return value;
}

}  // namespace detail

/// Signed integers of a comma-separated list; empty input is the empty list.
inline std::vector<int> parse_signed_list(std::string_view input) {
  std::vector<int> out;
  const auto tokens = detail::split_commas(input);
  if (tokens.size() == 1 && tokens[0].text.empty()) return out;
  for (const auto& tok : tokens) out.push_back(detail::to_int(tok, tok.text));
  return out;
}

inline Permutation parse_permutation(std::string_view input) {
  const auto values = parse_signed_list(input);
  try {
    return Permutation(values);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("not a permutation (") + e.what() + ")");
  }
}

inline MatchingWord parse_matching_word(std::string_view input) {
  const auto values = parse_signed_list(input);
  try {
    return MatchingWord::from_signed(values);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("not a matching word (") + e.what() + ")");
  }
}

inline bool looks_like_pairs(std::string_view input) {
  for (const auto& tok : detail::split_commas(input)) {
    const auto dash = tok.text.find('-');
    if (dash != std::string::npos && dash > 0) return true;
  }
  return false;
}

/// "1-7,2-5,..." pair syntax.
inline Matching parse_matching_pairs(std::string_view input) {
  std::vector<Matching::Pair> pairs;
  const auto tokens = detail::split_commas(input);
  if (tokens.size() == 1 && tokens[0].text.empty()) return Matching{};
  for (const auto& tok : tokens) {
    const auto dash = tok.text.find('-', 1);
    if (dash == std::string::npos) detail::parse_fail(tok.offset, "expected a pair a-b");
    const std::string_view text(tok.text);
    pairs.emplace_back(detail::to_int(tok, text.substr(0, dash)), detail::to_int(tok, text.substr(dash + 1)));
  }
  try {
    return Matching(std::move(pairs));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("not a matching (") + e.what() + ")");
  }
}

/// Either pair syntax or a matching word.
inline MatchingWord parse_matching_or_word(std::string_view input) {
  if (looks_like_pairs(input)) return matching_to_word(parse_matching_pairs(input));
  return parse_matching_word(input);
}

inline std::string format_signed_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string format_word(const MatchingWord& w) { return format_signed_list(w.to_signed()); }
inline std::string format_word(const Permutation& w) { return format_signed_list(w.word()); }

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const Partition& p) { return p.parts(); }
inline json to_json(const Tableau& t) { return t.rows(); }
inline json to_json(const Permutation& w) { return w.word(); }
inline json to_json(const MatchingWord& w) { return w.to_signed(); }

inline json to_json(const Matching& m) {
  json out = json::array();
  for (const auto& [a, b] : m.pairs()) out.push_back({a, b});
  return out;
}

inline json to_json(const UpDownTableau& ud) {
  json out = json::array();
  for (const auto& p : ud.shapes()) out.push_back(to_json(p));
  return out;
}

namespace detail {
template <class T, class F>
T decode(const json& j, const char* what, F&& f) {
  try {
    return f(j);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid ") + what + " JSON: " + e.what());
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid ") + what + ": " + e.what());
  }
}
}  // namespace detail

inline Partition partition_from_json(const json& j) {
  return detail::decode<Partition>(j, "partition", [](const json& x) { return Partition(x.get<std::vector<int>>()); });
}

inline Tableau tableau_from_json(const json& j) {
  return detail::decode<Tableau>(j, "tableau",
                                 [](const json& x) { return Tableau(x.get<std::vector<std::vector<int>>>()); });
}

inline MatchingWord word_from_json(const json& j) {
  return detail::decode<MatchingWord>(
      j, "matching word", [](const json& x) { return MatchingWord::from_signed(x.get<std::vector<int>>()); });
}

inline Matching matching_from_json(const json& j) {
  return detail::decode<Matching>(j, "matching", [](const json& x) {
    std::vector<Matching::Pair> pairs;
    for (const auto& p : x) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::MalformedValue, "pairs must have two points");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return Matching(std::move(pairs));
  });
}

inline UpDownTableau updown_from_json(const json& j) {
  return detail::decode<UpDownTableau>(j, "up-down tableau", [](const json& x) {
    std::vector<Partition> shapes;
    for (const auto& p : x) shapes.emplace_back(p.get<std::vector<int>>());
    return UpDownTableau(std::move(shapes));
  });
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace viennot::io
