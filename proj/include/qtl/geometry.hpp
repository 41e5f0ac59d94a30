#pragma once

/**
 * @file geometry.hpp
 * @brief The rho-shifted affine reflection arrangement of type A_{l-1}^ on E_l.
 *
 * Points are integer vectors x in E_l. The affine Weyl group W^e acts by the
 * shifted action w.x = w(x + rho) - rho, so internally every group element
 * acts on y = x + rho. Positive roots are e_i - e_j (i < j) and the
 * hyperplane h_{(i,j),m} is the locus <x + rho, e_i - e_j> = m e.
 *
 * An alcove is identified by its floor vector: one integer per positive root,
 * floor(<p + rho, e_i - e_j> / e) for any regular point p inside it. Each
 * AlcoveKey also carries the unique group element w with alcove = w . a_0,
 * which is what the type-indexed star operation needs.
 *
 * Root indices, hyperplane indices and component indices are 0-based
 * internally and 1-based in every rendering.
 */

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "params.hpp"

namespace qtl {

namespace detail {

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long long mod(long long a, long long b) { return ((a % b) + b) % b; }

}  // namespace detail

/// Integer point of E_l; also the embedding of a one-column multipartition.
struct Point {
  std::vector<int> coords;

  Point() = default;
  explicit Point(std::vector<int> c) : coords(std::move(c)) {}
  Point(std::initializer_list<int> c) : coords(c) {}

  static Point zero(int l) { return Point(std::vector<int>(static_cast<std::size_t>(l), 0)); }

  int size() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  int total() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  bool nonnegative() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
  }

  /// Adds i to every coordinate.
  Point shifted_all(int i) const {
    Point out = *this;
    for (int& c : out.coords) c += i;
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(coords[k]);
    }
    return s + ")";
  }

  auto operator<=>(const Point&) const = default;
};

struct Root {
  int i;
  int j;
  auto operator<=>(const Root&) const = default;
};

/// The locus <x + rho, e_i - e_j> = m e, with i < j.
struct Hyperplane {
  int i;
  int j;
  long long m;

  std::string to_string() const {
    return "h(e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1) + ", m=" + std::to_string(m) + ")";
  }
  auto operator<=>(const Hyperplane&) const = default;
};

/// Affine Weyl group element acting on y = x + rho by
/// w(y)_k = y_{perm[k]} + shift[k]; shifts are multiples of e summing to 0.
struct AffineElement {
  std::vector<int> perm;
  std::vector<long long> shift;

  static AffineElement identity(int l) {
    AffineElement w;
    w.perm.resize(static_cast<std::size_t>(l));
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.shift.assign(static_cast<std::size_t>(l), 0);
    return w;
  }

  static AffineElement reflection(const Hyperplane& h, int l, int e) {
    AffineElement w = identity(l);
    std::swap(w.perm[h.i], w.perm[h.j]);
    w.shift[h.i] = h.m * e;
    w.shift[h.j] = -h.m * e;
    return w;
  }

  int rank() const { return static_cast<int>(perm.size()); }

  std::vector<long long> apply(const std::vector<long long>& y) const {
    std::vector<long long> out(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) out[k] = y[perm[k]] + shift[k];
    return out;
  }

  /// (*this) o b
  AffineElement compose(const AffineElement& b) const {
    AffineElement out;
    out.perm.resize(perm.size());
    out.shift.resize(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      out.perm[k] = b.perm[perm[k]];
      out.shift[k] = b.shift[perm[k]] + shift[k];
    }
    return out;
  }

  AffineElement inverse() const {
    AffineElement out;
    out.perm.resize(perm.size());
    out.shift.resize(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      out.perm[perm[k]] = static_cast<int>(k);
      out.shift[perm[k]] = -shift[k];
    }
    return out;
  }

  /// Image of a hyperplane under this element.
  Hyperplane image(const Hyperplane& h, int e) const {
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<int>(k);
    const int a = inv[h.i];
    const int b = inv[h.j];
    const long long rhs = h.m * e + shift[a] - shift[b];
    if (a < b) return {a, b, rhs / e};
    return {b, a, -rhs / e};
  }

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// Canonical identifier of an alcove. Equality and ordering use the floor
/// vector only; elem is the memoized w with alcove = w . a_0.
struct AlcoveKey {
  std::vector<int> floors;
  AffineElement elem;

  friend bool operator==(const AlcoveKey& a, const AlcoveKey& b) { return a.floors == b.floors; }
  friend auto operator<=>(const AlcoveKey& a, const AlcoveKey& b) { return a.floors <=> b.floors; }
};

/// a_0, ..., a_k with walls[i] the hyperplane between alcoves[i] and alcoves[i+1].
struct Gallery {
  std::vector<AlcoveKey> alcoves;
  std::vector<Hyperplane> walls;

  std::size_t crossings() const { return walls.size(); }
  const AlcoveKey& target() const { return alcoves.back(); }
};

class Geometry {
 public:
  explicit Geometry(Params params) : params_(std::move(params)), cache_(std::make_shared<ElemCache>()) {
    const int l = params_.l();
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) roots_.push_back({i, j});
    fundamental_.elem = AffineElement::identity(l);
    fundamental_.floors = floors_of_shifted(shifted(Point::zero(l)));
    fundamental_walls_ = walls(fundamental_);
    cache_->elems.emplace(fundamental_.floors, fundamental_.elem);
  }

  const Params& params() const { return params_; }
  int rank() const { return params_.l(); }
  int e() const { return params_.e(); }
  const std::vector<Root>& roots() const { return roots_; }
  const AlcoveKey& fundamental() const { return fundamental_; }
  /// Walls of a_0 in canonical order; the index is the Coxeter type.
  const std::vector<Hyperplane>& fundamental_walls() const { return fundamental_walls_; }

  /// <p + rho, e_i - e_j>
  long long pairing(const Point& p, const Root& r) const {
    const auto& rho = params_.rho();
    return static_cast<long long>(p[r.i]) + rho[r.i] - p[r.j] - rho[r.j];
  }

  /// All hyperplanes containing p; empty iff p is e-regular.
  std::vector<Hyperplane> classify(const Point& p) const {
    std::vector<Hyperplane> out;
    for (const Root& r : roots_) {
      const long long v = pairing(p, r);
      if (detail::mod(v, e()) == 0) out.push_back({r.i, r.j, v / e()});
    }
    return out;
  }

  bool is_regular(const Point& p) const { return classify(p).empty(); }

  bool contains(const Hyperplane& h, const Point& p) const { return pairing(p, {h.i, h.j}) == h.m * e(); }

  /// Shifted-action mirror image of p in h.
  Point reflect_point(const Hyperplane& h, const Point& p) const {
    const long long d = pairing(p, {h.i, h.j}) - h.m * e();
    Point q = p;
    q[h.i] = static_cast<int>(p[h.i] - d);
    q[h.j] = static_cast<int>(p[h.j] + d);
    return q;
  }

  AlcoveKey alcove_of(const Point& p) const {
    if (!is_regular(p)) throw SingularPoint("alcove_of: point " + p.to_string() + " lies on a hyperplane");
    AlcoveKey key;
    key.floors = floors_of_shifted(shifted(p));
    key.elem = element_for(key.floors);
    return key;
  }

  int length(const AlcoveKey& a) const { return separating_count(a, fundamental_); }

  int separating_count(const AlcoveKey& a, const AlcoveKey& b) const {
    int total = 0;
    for (std::size_t r = 0; r < a.floors.size(); ++r) total += std::abs(a.floors[r] - b.floors[r]);
    return total;
  }

  /// Number of hyperplanes strictly separating p from the origin. Agrees with
  /// length(alcove_of(p)) on regular points.
  int point_length(const Point& p) const {
    int total = 0;
    const Point origin = Point::zero(rank());
    for (const Root& r : roots_) {
      long long a = pairing(origin, r);
      long long b = pairing(p, r);
      if (a > b) std::swap(a, b);
      if (a == b) continue;
      // multiples of e in the open interval (a, b)
      long long lo = detail::floor_div(a, e());
      long long hi = detail::floor_div(b - 1, e());
      total += static_cast<int>(std::max(0LL, hi - lo));
    }
    return total;
  }

  /// Regular integer point inside the alcove: elem . origin.
  Point representative(const AlcoveKey& a) const { return unshifted(a.elem.apply(shifted(Point::zero(rank())))); }

  /// s_h applied to the alcove; elem becomes s_h o elem.
  AlcoveKey reflect_alcove(const AlcoveKey& a, const Hyperplane& h) const {
    AlcoveKey out;
    out.elem = AffineElement::reflection(h, rank(), e()).compose(a.elem);
    out.floors = floors_of_shifted(out.elem.apply(shifted(Point::zero(rank()))));
    return out;
  }

  bool bounds(const AlcoveKey& a, const Hyperplane& h) const {
    return separating_count(a, reflect_alcove(a, h)) == 1;
  }

  /// The walls of an alcove, sorted.
  std::vector<Hyperplane> walls(const AlcoveKey& a) const {
    std::vector<Hyperplane> out;
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      for (long long m : {static_cast<long long>(a.floors[r]), static_cast<long long>(a.floors[r]) + 1}) {
        Hyperplane h{roots_[r].i, roots_[r].j, m};
        if (bounds(a, h)) out.push_back(h);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The hyperplane between two adjacent alcoves.
  std::optional<Hyperplane> common_wall(const AlcoveKey& a, const AlcoveKey& b) const {
    if (separating_count(a, b) != 1) return std::nullopt;
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      if (a.floors[r] != b.floors[r])
        return Hyperplane{roots_[r].i, roots_[r].j, std::max(a.floors[r], b.floors[r])};
    }
    return std::nullopt;
  }

  /// Coxeter type of the wall h of alcove a: the index t with
  /// elem(a)^{-1}(h) = fundamental_walls()[t].
  int wall_type(const AlcoveKey& a, const Hyperplane& h) const {
    if (!bounds(a, h)) throw NotAGalleryCrossing(h.to_string() + " is not a wall of the given alcove");
    const Hyperplane base = a.elem.inverse().image(h, e());
    auto it = std::find(fundamental_walls_.begin(), fundamental_walls_.end(), base);
    if (it == fundamental_walls_.end()) throw NotAGalleryCrossing("wall type lookup failed for " + h.to_string());
    return static_cast<int>(it - fundamental_walls_.begin());
  }

  /// b reflected in its own wall of Coxeter type t, i.e. v s_t . a_0 for b = v . a_0.
  AlcoveKey star_by_type(const AlcoveKey& b, int type) const {
    const Hyperplane& base = fundamental_walls_.at(static_cast<std::size_t>(type));
    return reflect_alcove(b, b.elem.image(base, e()));
  }

  /// Star through the gallery crossing (gallery_alcove, h).
  AlcoveKey star(const AlcoveKey& b, const AlcoveKey& gallery_alcove, const Hyperplane& h) const {
    return star_by_type(b, wall_type(gallery_alcove, h));
  }

  /// Greedy gallery from a_0 to target: repeatedly cross the first wall of the
  /// current alcove that separates it from the target.
  Gallery minimal_gallery(const AlcoveKey& target) const {
    Gallery g;
    g.alcoves.push_back(fundamental_);
    const int steps = length(target);
    for (int s = 0; s < steps; ++s) {
      const AlcoveKey& cur = g.alcoves.back();
      std::optional<Hyperplane> chosen;
      for (const Hyperplane& h : walls(cur)) {
        const std::size_t r = root_index(h);
        const int fc = cur.floors[r];
        const int ft = target.floors[r];
        if ((h.m == fc + 1 && ft > fc) || (h.m == fc && ft < fc)) {
          chosen = h;
          break;
        }
      }
      if (!chosen) throw NotAGallery("minimal_gallery: no separating wall found");
      g.walls.push_back(*chosen);
      g.alcoves.push_back(reflect_alcove(cur, *chosen));
    }
    if (!(g.alcoves.back() == target)) throw NotAGallery("minimal_gallery did not reach its target");
    remember(g.alcoves.back());
    return g;
  }

  /// All nonnegative points with coordinate sum n reachable from p by
  /// reflections through hyperplanes (closure pruned to the nonnegative region).
  std::set<Point> orbit_points(const Point& p, int n) const {
    std::set<Point> seen;
    if (p.total() != n || !p.nonnegative()) return seen;
    std::vector<Point> work{p};
    seen.insert(p);
    const auto& rho = params_.rho();
    while (!work.empty()) {
      Point cur = std::move(work.back());
      work.pop_back();
      for (const Root& r : roots_) {
        const long long a = static_cast<long long>(cur[r.j]) + rho[r.j] - rho[r.i];
        const long long b = static_cast<long long>(cur[r.i]) + rho[r.i] - rho[r.j];
        const long long lo = -detail::floor_div(a, e());  // m e >= -a
        const long long hi = detail::floor_div(b, e());   // m e <= b
        for (long long m = lo; m <= hi; ++m) {
          Point q = reflect_point({r.i, r.j, m}, cur);
          if (q.nonnegative() && seen.insert(q).second) work.push_back(std::move(q));
        }
      }
    }
    return seen;
  }

  std::size_t root_index(const Hyperplane& h) const {
    for (std::size_t r = 0; r < roots_.size(); ++r)
      if (roots_[r].i == h.i && roots_[r].j == h.j) return r;
    throw std::out_of_range("root_index: " + h.to_string());
  }

  /// Side test relative to the origin: true if p is strictly on the origin's side of h.
  bool on_origin_side(const Hyperplane& h, long long value) const {
    const long long v0 = pairing(Point::zero(rank()), {h.i, h.j});
    const long long c = h.m * e();
    return (value - c > 0) == (v0 - c > 0) && value != c;
  }

 private:
  struct ElemCache {
    std::mutex mutex;
    std::map<std::vector<int>, AffineElement> elems;
  };

  std::vector<long long> shifted(const Point& p) const {
    std::vector<long long> y(p.coords.size());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = static_cast<long long>(p.coords[k]) + params_.rho()[k];
    return y;
  }

  Point unshifted(const std::vector<long long>& y) const {
    Point p = Point::zero(rank());
    for (std::size_t k = 0; k < y.size(); ++k) p.coords[k] = static_cast<int>(y[k] - params_.rho()[k]);
    return p;
  }

  std::vector<int> floors_of_shifted(const std::vector<long long>& y) const {
    std::vector<int> f;
    f.reserve(roots_.size());
    for (const Root& r : roots_) f.push_back(static_cast<int>(detail::floor_div(y[r.i] - y[r.j], e())));
    return f;
  }

  AffineElement element_for(const std::vector<int>& floors) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->elems.find(floors);
      if (it != cache_->elems.end()) return it->second;
    }
    AlcoveKey target;
    target.floors = floors;
    return minimal_gallery(target).alcoves.back().elem;
  }

  void remember(const AlcoveKey& a) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->elems.try_emplace(a.floors, a.elem);
  }

  Params params_;
  std::vector<Root> roots_;
  AlcoveKey fundamental_;
  std::vector<Hyperplane> fundamental_walls_;
  std::shared_ptr<ElemCache> cache_;
};

/// Orbit membership via the invariant of the shifted action: W^e permutes the
/// coordinates of x + rho and translates them by e times a sum-zero vector.
inline bool same_orbit(const Geometry& g, const Point& p, const Point& q) {
  if (p.size() != q.size() || p.total() != q.total()) return false;
  std::vector<long long> a, b;
  for (int k = 0; k < p.size(); ++k) {
    a.push_back(detail::mod(static_cast<long long>(p[k]) + g.params().rho()[k], g.e()));
    b.push_back(detail::mod(static_cast<long long>(q[k]) + g.params().rho()[k], g.e()));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace qtl
