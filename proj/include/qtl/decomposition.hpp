#pragma once

/**
 * @file decomposition.hpp
 * @brief Blocks, graded decomposition matrices through the Soergel route, the
 *        independent Kleshchev-Nash oracle, stability and level-two closed forms.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "laurent.hpp"
#include "paths.hpp"
#include "soergel.hpp"
#include "tableaux.hpp"

namespace qtl {

/// One W^e-orbit of one-column multipartitions of n. Regularity is an orbit
/// invariant, so either every member is regular or none is.
struct Block {
  Params params;
  int n = 0;
  std::vector<Point> members;  ///< by point_length, then lexicographic
  std::vector<bool> regular;

  bool is_regular() const { return !regular.empty() && regular.front(); }
  bool contains(const Point& p) const { return std::find(members.begin(), members.end(), p) != members.end(); }
  std::vector<Point> regular_members() const {
    std::vector<Point> out;
    for (std::size_t k = 0; k < members.size(); ++k)
      if (regular[k]) out.push_back(members[k]);
    return out;
  }
};

inline std::vector<Point> ordered_members(const Geometry& g, std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const int la = g.point_length(a);
    const int lb = g.point_length(b);
    return la != lb ? la < lb : a < b;
  });
  return pts;
}

inline Block make_block(const Geometry& g, int n, const std::set<Point>& orbit) {
  Block b{g.params(), n, ordered_members(g, {orbit.begin(), orbit.end()}), {}};
  for (const Point& p : b.members) b.regular.push_back(g.is_regular(p));
  return b;
}

/// All blocks of one-column multipartitions of n, ordered by their first member.
inline std::vector<Block> blocks(const Geometry& g, int n) {
  std::vector<Block> out;
  std::set<Point> assigned;
  for (const Point& p : one_column_multipartitions(g.rank(), n)) {
    if (assigned.count(p)) continue;
    const auto orbit = g.orbit_points(p, n);
    assigned.insert(orbit.begin(), orbit.end());
    out.push_back(make_block(g, n, orbit));
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.members.front() < b.members.front(); });
  return out;
}

/// The block containing p.
inline Block block_of(const Geometry& g, const Point& p) { return make_block(g, p.total(), g.orbit_points(p, p.total())); }

using PointPair = std::pair<Point, Point>;  ///< (lambda, mu)

class DecompositionMatrix {
 public:
  std::vector<Point> members;
  std::vector<bool> regular;
  std::map<PointPair, LaurentPoly> entries;        ///< d_{lambda mu}, regular pairs, nonzero only
  std::map<PointPair, LaurentPoly> characters;     ///< Dim L_mu(lambda), nonzero only
  std::map<PointPair, LaurentPoly> standard_dims;  ///< Dim Delta_mu(lambda), nonzero only

  bool is_regular(const Point& p) const {
    for (std::size_t k = 0; k < members.size(); ++k)
      if (members[k] == p) return regular[k];
    throw NotInOrbit("decomposition matrix: " + p.to_string() + " is not a block member");
  }

  LaurentPoly d(const Point& lambda, const Point& mu) const { return lookup(entries, lambda, mu, true); }
  LaurentPoly character(const Point& lambda, const Point& mu) const { return lookup(characters, lambda, mu, true); }
  LaurentPoly standard_dim(const Point& lambda, const Point& mu) const {
    return lookup(standard_dims, lambda, mu, false);
  }

  friend bool operator==(const DecompositionMatrix& a, const DecompositionMatrix& b) {
    return a.members == b.members && a.entries == b.entries && a.characters == b.characters &&
           a.standard_dims == b.standard_dims;
  }

 private:
  LaurentPoly lookup(const std::map<PointPair, LaurentPoly>& m, const Point& lambda, const Point& mu,
                     bool need_regular) const {
    if (need_regular && (!is_regular(lambda) || !is_regular(mu)))
      throw SingularPoint("decomposition numbers are only defined for e-regular labels");
    if (!need_regular) {
      is_regular(lambda);
      is_regular(mu);
    }
    auto it = m.find({lambda, mu});
    return it == m.end() ? LaurentPoly() : it->second;
  }
};

namespace detail {

inline DecompositionMatrix empty_matrix(const Block& block) {
  DecompositionMatrix dm;
  dm.members = block.members;
  dm.regular = block.regular;
  return dm;
}

inline void put(std::map<PointPair, LaurentPoly>& m, const Point& lambda, const Point& mu, const LaurentPoly& v) {
  if (!v.is_zero()) m[{lambda, mu}] = v;
}

inline void fill_standard_dims(const Block& block, const PathEngine& paths, DecompositionMatrix& dm) {
  for (const Point& mu : block.members)
    for (const Point& lambda : block.members) put(dm.standard_dims, lambda, mu, paths.graded_path_count(lambda, mu));
}

}  // namespace detail

struct DecompositionOptions {
  bool path_cross_check = true;  ///< compare m against path counts
};

/// d = n_mu(lambda), characters = e_mu(lambda), standard_dims = m_mu(lambda),
/// each run along the alcove series of omega^mu.
inline DecompositionMatrix decomposition_matrix(const Block& block, const SoergelEngine& soergel,
                                                const PathEngine& paths, DecompositionOptions opts = {}) {
  const Geometry& g = soergel.geometry();
  if (!block.is_regular())
    throw NoRegularMember("block of " + block.members.front().to_string() + " has no e-regular member");
  DecompositionMatrix dm = detail::empty_matrix(block);
  std::map<AlcoveKey, Point> at_alcove;
  for (const Point& p : block.members) at_alcove.emplace(g.alcove_of(p), p);
  for (const Point& mu : block.members) {
    const SoergelResult r = soergel.run(alcove_series(g, distinguished_path(g.params(), mu)));
    if (!(r.gallery.target() == g.alcove_of(mu)))
      throw InternalMismatch("alcove series of " + mu.to_string() + " does not end at its alcove");
    for (const auto* fn : {&r.m, &r.n, &r.e}) {
      for (const auto& [a, v] : fn->values()) {
        if (!at_alcove.count(a))
          throw InternalMismatch("Soergel support for " + mu.to_string() + " leaves the block at " +
                                 g.representative(a).to_string());
      }
    }
    for (const auto& [a, v] : r.n.values()) detail::put(dm.entries, at_alcove.at(a), mu, v);
    for (const auto& [a, v] : r.e.values()) detail::put(dm.characters, at_alcove.at(a), mu, v);
    for (const auto& [a, v] : r.m.values()) detail::put(dm.standard_dims, at_alcove.at(a), mu, v);
  }
  if (opts.path_cross_check) {
    for (const Point& mu : block.members) {
      for (const Point& lambda : block.members) {
        const LaurentPoly counted = paths.graded_path_count(lambda, mu);
        const LaurentPoly computed = dm.standard_dim(lambda, mu);
        if (counted != computed)
          throw InternalMismatch("Dim Delta_" + mu.to_string() + "(" + lambda.to_string() + "): Soergel gives " +
                                 computed.to_string() + ", path count gives " + counted.to_string());
      }
    }
  }
  return dm;
}

/// Graded dimensions by path counting only; available for singular blocks.
inline DecompositionMatrix standard_dims_only(const Block& block, const PathEngine& paths) {
  DecompositionMatrix dm = detail::empty_matrix(block);
  detail::fill_standard_dims(block, paths, dm);
  return dm;
}

/// Kleshchev-Nash induction from path counts alone. Pairs are settled in
/// order of l(mu) - l(lambda); for each,
///   m(lambda, mu) - sum_{nu} d(lambda, nu) e_mu(nu) = e_mu(lambda) + d(lambda, mu)
/// and split_symmetric separates the two unknowns.
inline DecompositionMatrix kn_oracle(const Block& block, const PathEngine& paths) {
  const Geometry& g = paths.geometry();
  if (!block.is_regular())
    throw NoRegularMember("block of " + block.members.front().to_string() + " has no e-regular member");
  DecompositionMatrix dm = detail::empty_matrix(block);
  detail::fill_standard_dims(block, paths, dm);

  const auto& members = block.members;
  std::map<Point, int> len;
  for (const Point& p : members) len[p] = g.length(g.alcove_of(p));

  std::map<PointPair, LaurentPoly> d, e;
  std::vector<PointPair> order;
  for (const Point& mu : members) {
    d[{mu, mu}] = 1;
    e[{mu, mu}] = 1;
    for (const Point& lambda : members)
      if (lambda != mu) order.push_back({lambda, mu});
  }
  std::sort(order.begin(), order.end(), [&](const PointPair& a, const PointPair& b) {
    const int da = len[a.second] - len[a.first];
    const int db = len[b.second] - len[b.first];
    return da != db ? da < db : a < b;
  });

  const auto need = [&](const std::map<PointPair, LaurentPoly>& m, const Point& a, const Point& b) {
    auto it = m.find({a, b});
    if (it == m.end())
      throw InternalMismatch("KN induction reached (" + a.to_string() + ", " + b.to_string() + ") before it was settled");
    return it->second;
  };

  for (const auto& [lambda, mu] : order) {
    if (!paths.has_path(lambda, mu)) {
      d[{lambda, mu}] = LaurentPoly();
      e[{lambda, mu}] = LaurentPoly();
      continue;
    }
    LaurentPoly f = paths.graded_path_count(lambda, mu);
    for (const Point& nu : members) {
      if (nu == lambda || nu == mu) continue;
      if (!paths.has_path(nu, mu) || !paths.has_path(lambda, nu)) continue;
      f -= need(d, lambda, nu) * need(e, nu, mu);
    }
    const SymmetricSplit split = split_symmetric(f);
    e[{lambda, mu}] = split.symmetric;
    d[{lambda, mu}] = split.positive;
  }
  for (const auto& [key, v] : d) detail::put(dm.entries, key.first, key.second, v);
  for (const auto& [key, v] : e) detail::put(dm.characters, key.first, key.second, v);
  return dm;
}

/// Entry-by-entry comparison; returns a description of the first difference.
inline std::optional<std::string> compare_matrices(const DecompositionMatrix& a, const DecompositionMatrix& b) {
  if (a.members != b.members) return std::string("member lists differ");
  const auto diff = [](const char* what, const std::map<PointPair, LaurentPoly>& x,
                       const std::map<PointPair, LaurentPoly>& y) -> std::optional<std::string> {
    std::set<PointPair> keys;
    for (const auto& [k, v] : x) keys.insert(k);
    for (const auto& [k, v] : y) keys.insert(k);
    for (const auto& k : keys) {
      auto ix = x.find(k);
      auto iy = y.find(k);
      LaurentPoly vx = ix == x.end() ? LaurentPoly() : ix->second;
      LaurentPoly vy = iy == y.end() ? LaurentPoly() : iy->second;
      if (vx != vy)
        return std::string(what) + " at (" + k.first.to_string() + ", " + k.second.to_string() + "): " + vx.to_string() +
               " vs " + vy.to_string();
    }
    return std::nullopt;
  };
  if (auto r = diff("d", a.entries, b.entries)) return r;
  if (auto r = diff("character", a.characters, b.characters)) return r;
  if (auto r = diff("standard dim", a.standard_dims, b.standard_dims)) return r;
  return std::nullopt;
}

/// d(lambda, mu) = d(lambda + (i,...,i), mu + (i,...,i)) for all regular pairs.
inline bool stability_check(const Geometry& g, const Block& block, int i) {
  if (i < 0) throw std::invalid_argument("stability_check: i must be nonnegative");
  const Block shifted = block_of(g, block.members.front().shifted_all(i));
  SoergelEngine soergel(g);
  PathEngine paths(g);
  const DecompositionMatrix base = decomposition_matrix(block, soergel, paths);
  const DecompositionMatrix big = decomposition_matrix(shifted, soergel, paths);
  for (const Point& mu : block.members) {
    for (const Point& lambda : block.members) {
      if (!shifted.contains(lambda.shifted_all(i)) || !shifted.contains(mu.shifted_all(i))) return false;
      if (base.d(lambda, mu) != big.d(lambda.shifted_all(i), mu.shifted_all(i))) return false;
    }
  }
  return true;
}

/// Level-two alcove label: length, and whether the alcove lies left of the
/// origin (smaller value of <x + rho, e_1 - e_2>).
struct Level2Label {
  int length;
  bool primed;

  std::string to_string() const { return std::to_string(length) + (primed ? "'" : ""); }
  auto operator<=>(const Level2Label&) const = default;
};

inline Level2Label level2_label(const Geometry& g, const AlcoveKey& a) {
  if (g.rank() != 2) throw NotLevelTwo("level-two labels need l = 2");
  return {g.length(a), a.floors[0] < g.fundamental().floors[0]};
}

inline LaurentPoly level2_closed_form(const Params& p, const Level2Label& i, const Level2Label& j) {
  if (p.l() != 2) throw NotLevelTwo("level2_closed_form needs l = 2");
  if (i == j) return 1;
  if (i.length < j.length) return LaurentPoly::monomial(j.length - i.length);
  return LaurentPoly();
}

/// Graded dimension of Hom(Delta(lambda_j), Delta(lambda_i)).
inline LaurentPoly level2_hom_dim(const Params& p, const Level2Label& i, const Level2Label& j) {
  if (p.l() != 2) throw NotLevelTwo("level2_hom_dim needs l = 2");
  if (i.length < j.length) return LaurentPoly::monomial(j.length - i.length);
  return LaurentPoly();
}

}  // namespace qtl
