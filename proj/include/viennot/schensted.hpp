#pragma once

// Schensted row insertion, its reverse, and the Robinson–Schensted
// correspondence built directly on bumping. This is the reference path that
// the geometric construction in diagram.hpp is checked against.

#include <algorithm>
#include <vector>

#include "viennot/core.hpp"

namespace viennot {

struct InsertionResult {
  Tableau tableau;
  Cell added_box;
};

/// Inserts `value` into row 1; in each row it displaces the leftmost entry
/// larger than itself, which moves on to the next row.
inline InsertionResult row_insert(Tableau t, int value) {
  if (value <= 0) throw Error(ErrorKind::MalformedValue, "inserted values must be positive");
  if (t.find(value)) throw Error(ErrorKind::DuplicateEntry, std::to_string(value) + " is already present");
  auto& rows = TableauAccess::rows(t);
  int carry = value;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({carry});
      return {std::move(t), Cell{static_cast<int>(r) + 1, 1}};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return {std::move(t), Cell{static_cast<int>(r) + 1, static_cast<int>(row.size())}};
    }
    std::swap(carry, *it);
  }
}

/// Undoes `row_insert`: removes the entry at a removable corner and bumps it
/// back up through the rows above, returning the value ejected from row 1.
inline std::pair<Tableau, int> reverse_insert(Tableau t, Cell corner) {
  if (!t.shape().is_removable(corner))
    throw Error(ErrorKind::NotACorner, "cell (" + std::to_string(corner.row) + "," +
                                           std::to_string(corner.col) + ") is not a removable corner");
  auto& rows = TableauAccess::rows(t);
  auto& last = rows[corner.row - 1];
  int carry = last.back();
  last.pop_back();
  if (last.empty()) rows.pop_back();
  for (int r = corner.row - 2; r >= 0; --r) {
    auto& row = rows[r];
    // rightmost entry smaller than carry
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    --it;
    std::swap(carry, *it);
  }
  return {std::move(t), carry};
}

struct RSResult {
  Tableau P;
  Tableau Q;
  Partition shape;
};

inline RSResult rs(const Permutation& w) {
  Tableau P;
  std::vector<std::vector<int>> q;
  for (int t = 1; t <= w.size(); ++t) {
    auto [next, box] = row_insert(std::move(P), w(t));
    P = std::move(next);
    if (box.row > static_cast<int>(q.size())) q.emplace_back();
    q[box.row - 1].push_back(t);
  }
  Tableau Q(std::move(q));
  Partition shape = P.shape();
  return {std::move(P), std::move(Q), std::move(shape)};
}

/// Insertion tableaux after each of the first s steps, s = 0..k.
inline std::vector<Tableau> insertion_history(const Permutation& w) {
  std::vector<Tableau> out{Tableau{}};
  for (int t = 1; t <= w.size(); ++t) out.push_back(row_insert(out.back(), w(t)).tableau);
  return out;
}

/// The growth movie λ_0 ⊂ λ_1 ⊂ ... encoded by a recording tableau.
inline std::vector<Partition> recording_movie(const Tableau& Q) {
  const int n = Q.size();
  std::vector<Partition> movie{Partition{}};
  for (int t = 1; t <= n; ++t) {
    auto cell = Q.find(t);
    if (!cell) throw Error(ErrorKind::NotStandard, "recording tableau is missing " + std::to_string(t));
    movie.push_back(movie.back().with_added(*cell));
  }
  return movie;
}

/// Reverse bumping: the cell labelled t in Q (t = k, k-1, ...) names the
/// corner of P to eject a_t from.
inline Permutation rs_inverse(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape()) throw Error(ErrorKind::ShapeMismatch, "P and Q have different shapes");
  if (!P.is_standard()) throw Error(ErrorKind::NotStandard, "P is not standard");
  if (!Q.is_standard()) throw Error(ErrorKind::NotStandard, "Q is not standard");
  const int k = P.size();
  std::vector<int> word(static_cast<std::size_t>(k));
  Tableau cur = P;
  Tableau rec = Q;
  for (int t = k; t >= 1; --t) {
    const Cell cell = *rec.find(t);
    auto [next, value] = reverse_insert(std::move(cur), cell);
    cur = std::move(next);
    auto& rec_rows = TableauAccess::rows(rec);
    rec_rows[cell.row - 1].pop_back();
    if (rec_rows[cell.row - 1].empty()) rec_rows.pop_back();
    word[t - 1] = value;
  }
  return Permutation(std::move(word));
}

// Quadratic dynamic programs; no insertion involved.

inline int lds_length_brute(const Permutation& w) {
  const auto& a = w.word();
  std::vector<int> best(a.size(), 1);
  int result = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (a[j] > a[i]) best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

inline int lis_length_brute(const Permutation& w) {
  const auto& a = w.word();
  std::vector<int> best(a.size(), 1);
  int result = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (a[j] < a[i]) best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

}  // namespace viennot
