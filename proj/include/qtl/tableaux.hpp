#pragma once

/**
 * @file tableaux.hpp
 * @brief One-column multipartitions: loadings, residues, dominance, addable and
 *        removable nodes, semistandard tableaux, degrees and component words.
 *
 * A one-column multipartition is stored as the Point of its column lengths.
 * Node (r, m) (row r, component m, both 1-based in renderings) sits at loading
 * position x = (m-1) + l(r-1) and has residue kappa_m + 1 - r mod e.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "params.hpp"
#include "paths.hpp"

namespace qtl {

struct LoadingEntry {
  int x;
  int row;        ///< 1-based
  int component;  ///< 0-based
  int residue;
  auto operator<=>(const LoadingEntry&) const = default;
};

inline int node_position(const Params& p, int row, int component) { return component + p.l() * (row - 1); }

inline int node_residue(const Params& p, int row, int component) {
  return p.residue(p.kappa()[static_cast<std::size_t>(component)] + 1 - row);
}

/// Entries sorted by x.
inline std::vector<LoadingEntry> loading(const Params& p, const Point& lam) {
  std::vector<LoadingEntry> out;
  for (int m = 0; m < lam.size(); ++m)
    for (int r = 1; r <= lam[m]; ++r) out.push_back({node_position(p, r, m), r, m, node_residue(p, r, m)});
  std::sort(out.begin(), out.end());
  return out;
}

/// Sorted list of node residues.
inline std::vector<int> residue_multiset(const Params& p, const Point& lam) {
  std::vector<int> out;
  for (const auto& entry : loading(p, lam)) out.push_back(entry.residue);
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether mu is dominated by lam: for every residue and every threshold a,
/// lam has at least as many entries of that residue below a as mu.
inline bool dominance_leq(const Params& p, const Point& mu, const Point& lam) {
  const auto lm = loading(p, mu);
  const auto ll = loading(p, lam);
  std::set<int> thresholds;
  for (const auto& entry : lm) thresholds.insert(entry.x + 1);
  for (const auto& entry : ll) thresholds.insert(entry.x + 1);
  for (int r = 0; r < p.e(); ++r) {
    for (int a : thresholds) {
      const auto count = [&](const std::vector<LoadingEntry>& v) {
        return std::count_if(v.begin(), v.end(), [&](const LoadingEntry& x) { return x.residue == r && x.x < a; });
      };
      if (count(ll) < count(lm)) return false;
    }
  }
  return true;
}

struct AddRemove {
  std::set<int> addable;    ///< 0-based components
  std::set<int> removable;  ///< 0-based components
};

inline AddRemove addable_removable(const Params& p, const Point& lam, int residue) {
  AddRemove out;
  const int r = p.residue(residue);
  for (int m = 0; m < lam.size(); ++m) {
    if (node_residue(p, lam[m] + 1, m) == r) out.addable.insert(m);
    if (lam[m] >= 1 && node_residue(p, lam[m], m) == r) out.removable.insert(m);
  }
  return out;
}

/// A semistandard tableau of one-column shape: columns[m][r-1] is the entry
/// (a loading value of the weight) in node (r, m).
struct Tableau {
  Point shape;
  Point weight;
  std::vector<std::vector<int>> columns;

  /// (value, row, component) sorted by value.
  std::vector<LoadingEntry> entries(const Params& p) const {
    std::vector<LoadingEntry> out;
    for (int m = 0; m < static_cast<int>(columns.size()); ++m)
      for (int r = 1; r <= static_cast<int>(columns[m].size()); ++r)
        out.push_back({columns[m][r - 1], r, m, node_residue(p, r, m)});
    std::sort(out.begin(), out.end());
    return out;
  }

  auto operator<=>(const Tableau&) const = default;
};

/// SStd(lam, mu): the weight's loading values, in increasing order, are placed
/// in the next empty node of a component whose node residue matches. Entries
/// must satisfy T(1,m) >= m-1 and T(r,m) >= T(r-1,m) + l.
inline std::vector<Tableau> semistandard_tableaux(const Params& p, const Point& lam, const Point& mu) {
  std::vector<Tableau> out;
  if (lam.size() != mu.size() || lam.total() != mu.total()) return out;
  if (residue_multiset(p, lam) != residue_multiset(p, mu)) return out;
  const auto values = loading(p, mu);
  const int l = p.l();
  Tableau cur{lam, mu, std::vector<std::vector<int>>(static_cast<std::size_t>(l))};
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == values.size()) {
      out.push_back(cur);
      return;
    }
    const auto& v = values[k];
    for (int m = 0; m < l; ++m) {
      auto& col = cur.columns[static_cast<std::size_t>(m)];
      const int row = static_cast<int>(col.size()) + 1;
      if (row > lam[m] || node_residue(p, row, m) != v.residue) continue;
      if (row == 1 ? v.x < m : v.x < col.back() + l) continue;
      col.push_back(v.x);
      place(k + 1);
      col.pop_back();
    }
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sum over entries, in increasing order, of the number of addable minus
/// removable nodes of the current shape with the entry's residue lying
/// strictly to the right of the entry's node.
inline int tableau_degree(const Params& p, const Tableau& t) {
  Point shape = Point::zero(p.l());
  int total = 0;
  for (const auto& entry : t.entries(p)) {
    ++shape[entry.component];
    const int here = node_position(p, entry.row, entry.component);
    const auto ar = addable_removable(p, shape, entry.residue);
    for (int m : ar.addable)
      if (node_position(p, shape[m] + 1, m) > here) ++total;
    for (int m : ar.removable)
      if (node_position(p, shape[m], m) > here) --total;
  }
  return total;
}

/// Components of the entries read in increasing order.
inline PathWord component_word(const Params& p, const Tableau& t) {
  std::vector<std::uint8_t> steps;
  for (const auto& entry : t.entries(p)) steps.push_back(static_cast<std::uint8_t>(entry.component));
  return PathWord(std::move(steps));
}

/// One-column multipartitions of n with l components, lexicographic.
inline std::vector<Point> one_column_multipartitions(int l, int n) {
  std::vector<Point> out;
  Point cur = Point::zero(l);
  std::function<void(int, int)> fill = [&](int m, int left) {
    if (m == l - 1) {
      cur[m] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[m] = v;
      fill(m + 1, left - v);
    }
  };
  if (l >= 1 && n >= 0) fill(0, n);
  return out;
}

}  // namespace qtl
