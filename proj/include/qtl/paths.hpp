#pragma once

/**
 * @file paths.hpp
 * @brief Lattice paths from the origin, the degree statistic, tail reflection,
 *        distinguished paths, reflection closures and alcove series.
 *
 * A PathWord stores 0-based component indices; letters() gives the 1-based
 * word used in every rendering.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "laurent.hpp"

namespace qtl {

class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<std::uint8_t> steps) : steps_(std::move(steps)) {}

  /// From a 1-based word such as {1,2,3,1}.
  static PathWord from_letters(const std::vector<int>& letters) {
    std::vector<std::uint8_t> s;
    s.reserve(letters.size());
    for (int c : letters) {
      if (c < 1 || c > 255) throw std::invalid_argument("PathWord letter out of range: " + std::to_string(c));
      s.push_back(static_cast<std::uint8_t>(c - 1));
    }
    return PathWord(std::move(s));
  }

  int size() const { return static_cast<int>(steps_.size()); }
  const std::vector<std::uint8_t>& steps() const { return steps_; }
  /// 0-based component of step k, 1 <= k <= n.
  int step(int k) const { return steps_[static_cast<std::size_t>(k - 1)]; }

  std::vector<int> letters() const {
    std::vector<int> out;
    out.reserve(steps_.size());
    for (auto s : steps_) out.push_back(s + 1);
    return out;
  }

  /// omega(0), ..., omega(n).
  std::vector<Point> prefix_points(int l) const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    Point cur = Point::zero(l);
    out.push_back(cur);
    for (auto s : steps_) {
      ++cur[s];
      out.push_back(cur);
    }
    return out;
  }

  Point endpoint(int l) const {
    Point p = Point::zero(l);
    for (auto s : steps_) ++p[s];
    return p;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(steps_[k] + 1);
    }
    return out;
  }

  auto operator<=>(const PathWord&) const = default;

 private:
  std::vector<std::uint8_t> steps_;
};

struct DegreeTrace {
  std::vector<int> steps;    ///< d(k) for k = 1..n
  std::vector<int> running;  ///< deg(omega_{<=k}) for k = 1..n
  int total = 0;
};

namespace detail {

/// Contribution of root r to the step from a to b (values <a+rho, alpha>).
inline int root_step_degree(const Geometry& g, long long va, long long vb, long long v0) {
  const int e = g.e();
  const bool on_a = mod(va, e) == 0;
  const bool on_b = mod(vb, e) == 0;
  if (on_a == on_b) return 0;
  const long long c = on_a ? va : vb;  // m e
  const auto side = [c](long long v) { return v > c ? 1 : -1; };
  const int origin = side(v0);
  if (on_a) return side(vb) == origin ? 1 : 0;  // stepping off
  return side(va) == origin ? 0 : -1;           // stepping on
}

}  // namespace detail

/// d(k) = sum over positive roots of d_alpha(omega, k).
inline int step_degree(const Geometry& g, const Point& before, const Point& after) {
  const Point origin = Point::zero(g.rank());
  int total = 0;
  for (const Root& r : g.roots()) {
    const long long va = g.pairing(before, r);
    const long long vb = g.pairing(after, r);
    if (va == vb) continue;
    total += detail::root_step_degree(g, va, vb, g.pairing(origin, r));
  }
  return total;
}

inline int step_degree(const Geometry& g, const PathWord& path, int k) {
  if (k < 1 || k > path.size()) throw std::out_of_range("step_degree: k out of range");
  Point before = Point::zero(g.rank());
  for (int i = 1; i < k; ++i) ++before[path.step(i)];
  Point after = before;
  ++after[path.step(k)];
  return step_degree(g, before, after);
}

inline DegreeTrace degree_trace(const Geometry& g, const PathWord& path) {
  DegreeTrace t;
  const auto pts = path.prefix_points(g.rank());
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const int d = step_degree(g, pts[k - 1], pts[k]);
    t.total += d;
    t.steps.push_back(d);
    t.running.push_back(t.total);
  }
  return t;
}

inline int path_degree(const Geometry& g, const PathWord& path) { return degree_trace(g, path).total; }

/// Reflect the part of the path after omega(k) in h. Swaps letters i and j in
/// steps k+1..n.
inline PathWord reflect_tail(const Geometry& g, const PathWord& path, int k, const Hyperplane& h) {
  if (k < 0 || k > path.size()) throw std::out_of_range("reflect_tail: k out of range");
  Point at = Point::zero(g.rank());
  for (int i = 1; i <= k; ++i) ++at[path.step(i)];
  if (!g.contains(h, at))
    throw NotOnHyperplane("reflect_tail: omega(" + std::to_string(k) + ") = " + at.to_string() + " is not on " +
                          h.to_string());
  std::vector<std::uint8_t> s = path.steps();
  for (std::size_t i = static_cast<std::size_t>(k); i < s.size(); ++i) {
    if (s[i] == h.i)
      s[i] = static_cast<std::uint8_t>(h.j);
    else if (s[i] == h.j)
      s[i] = static_cast<std::uint8_t>(h.i);
  }
  return PathWord(std::move(s));
}

/// Component word of T^mu: loading positions (m-1) + l(r-1) read in
/// increasing order.
inline PathWord distinguished_path(const Params& params, const Point& mu) {
  if (!mu.nonnegative()) throw std::invalid_argument("distinguished_path: negative coordinate in " + mu.to_string());
  const int l = params.l();
  std::vector<std::pair<int, int>> slots;
  for (int m = 0; m < l; ++m)
    for (int r = 0; r < mu[m]; ++r) slots.emplace_back(m + l * r, m);
  std::sort(slots.begin(), slots.end());
  std::vector<std::uint8_t> steps;
  steps.reserve(slots.size());
  for (const auto& [x, m] : slots) steps.push_back(static_cast<std::uint8_t>(m));
  return PathWord(std::move(steps));
}

inline bool is_admissible(const Geometry& g, const PathWord& path) {
  const auto pts = path.prefix_points(g.rank());
  int running = 0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    running += step_degree(g, pts[k - 1], pts[k]);
    if (running != 0) return false;
    const auto hs = g.classify(pts[k]);
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = a + 1; b < hs.size(); ++b)
        if (hs[a].i == hs[b].i || hs[a].i == hs[b].j || hs[a].j == hs[b].i || hs[a].j == hs[b].j) return false;
  }
  return true;
}

inline constexpr std::size_t kDefaultClosureBudget = std::size_t{1} << 20;

/// Least set containing seed and closed under every tail reflection at a wall
/// contact. Sorted lexicographically.
inline std::vector<PathWord> reflection_closure(const Geometry& g, const PathWord& seed,
                                                std::size_t budget = kDefaultClosureBudget) {
  std::set<PathWord> seen{seed};
  std::vector<PathWord> work{seed};
  const int l = g.rank();
  const int e = g.e();
  const auto& rho = g.params().rho();
  while (!work.empty()) {
    PathWord cur = std::move(work.back());
    work.pop_back();
    std::vector<long long> y(rho.begin(), rho.end());
    for (int k = 1; k < cur.size(); ++k) {
      ++y[cur.step(k)];
      for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
          const long long v = y[i] - y[j];
          if (detail::mod(v, e) != 0) continue;
          std::vector<std::uint8_t> s = cur.steps();
          for (std::size_t t = static_cast<std::size_t>(k); t < s.size(); ++t) {
            if (s[t] == i)
              s[t] = static_cast<std::uint8_t>(j);
            else if (s[t] == j)
              s[t] = static_cast<std::uint8_t>(i);
          }
          PathWord next(std::move(s));
          if (seen.insert(next).second) {
            if (seen.size() > budget)
              throw ClosureBudgetExceeded("reflection closure exceeded budget of " + std::to_string(budget) +
                                          " paths");
            work.push_back(std::move(next));
          }
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

struct WeightedPath {
  PathWord path;
  int degree;
};

/// Caches reflection closures of distinguished paths, keyed by mu. Safe to
/// share between threads.
class PathEngine {
 public:
  explicit PathEngine(const Geometry& g, std::size_t budget = kDefaultClosureBudget)
      : geo_(&g), budget_(budget), cache_(std::make_shared<Cache>()) {}

  const Geometry& geometry() const { return *geo_; }
  std::size_t budget() const { return budget_; }

  /// Every path in the closure of omega^mu, grouped by endpoint.
  const std::map<Point, std::vector<WeightedPath>>& closure_by_endpoint(const Point& mu) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->closures.find(mu);
      if (it != cache_->closures.end()) return *it->second;
    }
    auto table = std::make_shared<std::map<Point, std::vector<WeightedPath>>>();
    for (auto& p : reflection_closure(*geo_, distinguished_path(geo_->params(), mu), budget_)) {
      const int d = path_degree(*geo_, p);
      (*table)[p.endpoint(geo_->rank())].push_back({std::move(p), d});
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return *cache_->closures.try_emplace(mu, std::move(table)).first->second;
  }

  std::size_t closure_size(const Point& mu) const {
    std::size_t total = 0;
    for (const auto& [end, paths] : closure_by_endpoint(mu)) total += paths.size();
    return total;
  }

  /// Path(lambda, mu) with degrees, lexicographic by step word.
  std::vector<WeightedPath> paths_between(const Point& lambda, const Point& mu) const {
    const auto& table = closure_by_endpoint(mu);
    auto it = table.find(lambda);
    if (it == table.end()) return {};
    return it->second;
  }

  bool has_path(const Point& lambda, const Point& mu) const {
    const auto& table = closure_by_endpoint(mu);
    return table.find(lambda) != table.end();
  }

  /// Sum of t^deg over Path(lambda, mu).
  LaurentPoly graded_path_count(const Point& lambda, const Point& mu) const {
    LaurentPoly out;
    const auto& table = closure_by_endpoint(mu);
    auto it = table.find(lambda);
    if (it == table.end()) return out;
    for (const auto& wp : it->second) out.add_term(wp.degree, 1);
    return out;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Point, std::shared_ptr<const std::map<Point, std::vector<WeightedPath>>>> closures;
  };

  const Geometry* geo_;
  std::size_t budget_;
  std::shared_ptr<Cache> cache_;
};

inline std::vector<WeightedPath> paths_between(const Geometry& g, const Point& lambda, const Point& mu,
                                               std::size_t budget = kDefaultClosureBudget) {
  return PathEngine(g, budget).paths_between(lambda, mu);
}

inline LaurentPoly graded_path_count(const Geometry& g, const Point& lambda, const Point& mu,
                                     std::size_t budget = kDefaultClosureBudget) {
  return PathEngine(g, budget).graded_path_count(lambda, mu);
}

/// Distinct alcoves met by an admissible path, with the walls crossed between
/// them. Regular prefix points and regular step midpoints are both sampled,
/// since a step may run from one wall straight onto another. The result must
/// be a gallery of lengths 0..k.
inline Gallery alcove_series(const Geometry& g, const PathWord& path) {
  if (!is_admissible(g, path)) throw NotAdmissible("alcove_series: path " + path.to_string() + " is not admissible");
  Gallery out;
  out.alcoves.push_back(g.fundamental());
  const int l = g.rank();
  const long long e2 = 2LL * g.e();
  const auto& rho = g.params().rho();
  // doubled coordinates of x + rho
  std::vector<long long> y2(rho.begin(), rho.end());
  for (auto& c : y2) c *= 2;
  const auto visit = [&](int k) {
    AlcoveKey a;
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) {
        const long long v2 = y2[i] - y2[j];
        if (detail::mod(v2, e2) == 0) return;
        a.floors.push_back(static_cast<int>(detail::floor_div(v2, e2)));
      }
    }
    if (a == out.alcoves.back()) return;
    const AlcoveKey& prev = out.alcoves.back();
    auto wall = g.common_wall(prev, a);
    if (!wall) throw NotAGallery("alcove_series: non-adjacent alcoves around step " + std::to_string(k));
    AlcoveKey next = g.reflect_alcove(prev, *wall);
    if (g.length(next) != g.length(prev) + 1)
      throw NotAGallery("alcove_series: length does not increase around step " + std::to_string(k));
    out.walls.push_back(*wall);
    out.alcoves.push_back(std::move(next));
  };
  for (int k = 1; k <= path.size(); ++k) {
    ++y2[path.step(k)];
    visit(k);
    ++y2[path.step(k)];
    visit(k);
  }
  return out;
}

}  // namespace qtl
