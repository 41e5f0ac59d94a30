#pragma once

/**
 * @file soergel.hpp
 * @brief Soergel's recursions along a gallery: the cancellation-free
 *        m-algorithm, the n-algorithm and the character (e) algorithm.
 *
 * Crossing the i-th wall of a gallery is right multiplication by the simple
 * reflection of that wall's Coxeter type. For an alcove c write c* for
 * star_by_type(c, type) and say c is "up" when l(c*) > l(c).
 *
 *   m_{i+1}(c) = m_i(c*) + t^{-1} m_i(c)   if c is down
 *   m_{i+1}(c) = m_i(c*) + t m_i(c)        if c is up
 *
 * n' is the same step applied to n_i; n_{i+1} then subtracts
 * ct(n'(d)) n_d for every lower alcove d with a nonzero constant term.
 *
 * The e recursion expands m_{i+1} = sum_v e_i(v) n_v C_s in the n basis. A
 * down v contributes (t + t^{-1}) e_i(v) at v. An up v contributes e_i(v) at
 * v* and e_i(v) ct((n_v C_s)(x)) at each alcove x subtracted while
 * normalising n_v C_s. Only down alcoves receive a value.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "laurent.hpp"

namespace qtl {

class AlcoveFunction {
 public:
  using Map = std::map<AlcoveKey, LaurentPoly>;

  AlcoveFunction() = default;

  static AlcoveFunction indicator(const AlcoveKey& a, int stage = 0) {
    AlcoveFunction f;
    f.values_.emplace(a, LaurentPoly(1));
    f.stage_ = stage;
    return f;
  }

  const Map& values() const { return values_; }
  int stage() const { return stage_; }
  void set_stage(int s) { stage_ = s; }
  bool empty() const { return values_.empty(); }
  std::size_t support_size() const { return values_.size(); }

  LaurentPoly at(const AlcoveKey& a) const {
    auto it = values_.find(a);
    return it == values_.end() ? LaurentPoly() : it->second;
  }

  void add(const AlcoveKey& a, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = values_.try_emplace(a, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) values_.erase(it);
    }
  }

  /// Entries ordered by length, then floors.
  std::vector<std::pair<AlcoveKey, LaurentPoly>> ordered(const Geometry& g) const {
    std::vector<std::pair<AlcoveKey, LaurentPoly>> out(values_.begin(), values_.end());
    std::stable_sort(out.begin(), out.end(),
                     [&](const auto& a, const auto& b) { return g.length(a.first) < g.length(b.first); });
    return out;
  }

  friend bool operator==(const AlcoveFunction& a, const AlcoveFunction& b) { return a.values_ == b.values_; }

 private:
  Map values_;
  int stage_ = 0;
};

struct SoergelResult {
  Gallery gallery;
  AlcoveFunction m;
  AlcoveFunction n;
  AlcoveFunction e;
};

struct FactorTerm {
  AlcoveKey alcove;
  LaurentPoly coefficient;  ///< e_mu at this alcove
};

/// Runs the recursions and memoizes n_d for every alcove d it meets. One
/// engine per Geometry; copies share the memo.
class SoergelEngine {
 public:
  explicit SoergelEngine(const Geometry& g) : geo_(&g), memo_(std::make_shared<Memo>()) {}

  const Geometry& geometry() const { return *geo_; }

  /// One m-style step with the simple reflection of the given type.
  AlcoveFunction multiply(const AlcoveFunction& f, int type) const {
    std::set<AlcoveKey> candidates;
    for (const auto& [c, v] : f.values()) {
      candidates.insert(c);
      candidates.insert(geo_->star_by_type(c, type));
    }
    AlcoveFunction out;
    out.set_stage(f.stage() + 1);
    for (const AlcoveKey& c : candidates) {
      const AlcoveKey cs = geo_->star_by_type(c, type);
      LaurentPoly v = f.at(cs);
      const int k = geo_->length(c) > geo_->length(cs) ? -1 : 1;
      v += f.at(c).shifted(k);
      out.add(c, v);
    }
    return out;
  }

  AlcoveFunction run_m(const Gallery& gallery) const {
    AlcoveFunction m = AlcoveFunction::indicator(geo_->fundamental());
    for (std::size_t i = 0; i < gallery.walls.size(); ++i)
      m = multiply(m, geo_->wall_type(gallery.alcoves[i], gallery.walls[i]));
    return m;
  }

  AlcoveFunction run_n(const Gallery& gallery) const { return run(gallery).n; }
  AlcoveFunction run_e(const Gallery& gallery) const { return run(gallery).e; }

  /// Fused pass computing m, n and e along the gallery.
  SoergelResult run(const Gallery& gallery) const {
    SoergelResult r;
    r.gallery = gallery;
    r.m = AlcoveFunction::indicator(geo_->fundamental());
    r.n = r.m;
    r.e = r.m;
    for (std::size_t i = 0; i < gallery.walls.size(); ++i) {
      const int type = geo_->wall_type(gallery.alcoves[i], gallery.walls[i]);
      const AlcoveKey& next = gallery.alcoves[i + 1];
      r.m = multiply(r.m, type);
      r.n = normalise(multiply(r.n, type), next);
      remember(next, r.n);
      r.e = e_step(r.e, type);
    }
    return r;
  }

  /// n_d, the Kazhdan-Lusztig-type function with n_d(d) = 1.
  AlcoveFunction n_function(const AlcoveKey& d) const {
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      auto it = memo_->n.find(d.floors);
      if (it != memo_->n.end()) return it->second;
    }
    const Gallery g = geo_->minimal_gallery(d);
    AlcoveFunction n = AlcoveFunction::indicator(geo_->fundamental());
    for (std::size_t i = 0; i < g.walls.size(); ++i) {
      const AlcoveKey& next = g.alcoves[i + 1];
      {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->n.find(next.floors);
        if (it != memo_->n.end()) {
          n = it->second;
          continue;
        }
      }
      n = normalise(multiply(n, geo_->wall_type(g.alcoves[i], g.walls[i])), next);
      remember(next, n);
    }
    return n;
  }

  /// The lower alcoves x and constants ct with n_d C_s = n_{d*} + sum ct n_x,
  /// for d up with respect to type.
  std::vector<std::pair<AlcoveKey, Integer>> kl_corrections(const AlcoveKey& d, int type) const {
    const auto key = std::make_pair(d.floors, type);
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      auto it = memo_->corrections.find(key);
      if (it != memo_->corrections.end()) return it->second;
    }
    const AlcoveKey target = geo_->star_by_type(d, type);
    const AlcoveFunction np = multiply(n_function(d), type);
    auto out = corrections_of(np, target);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->corrections.try_emplace(key, out);
    return out;
  }

  /// Value at alcove_of(lambda) for each lambda; lambda must be regular and in
  /// mu's orbit.
  std::map<Point, LaurentPoly> evaluate_at_points(const AlcoveFunction& fn, const Point& mu,
                                                  const std::set<Point>& lambdas) const {
    if (!geo_->is_regular(mu)) throw SingularPoint("evaluate_at_points: mu " + mu.to_string() + " is singular");
    std::map<Point, LaurentPoly> out;
    for (const Point& lam : lambdas) {
      if (!same_orbit(*geo_, lam, mu))
        throw NotInOrbit("evaluate_at_points: " + lam.to_string() + " is not in the orbit of " + mu.to_string());
      out.emplace(lam, fn.at(geo_->alcove_of(lam)));
    }
    return out;
  }

  /// The e-expansion of m_mu: pairs (v, e_mu(v)) over e's support.
  std::vector<FactorTerm> factor_terms(const SoergelResult& r) const {
    std::vector<FactorTerm> out;
    for (const auto& [a, p] : r.e.ordered(*geo_)) out.push_back({a, p});
    return out;
  }

  /// m_mu = sum_v n_v e_mu(v), with each n_v computed independently.
  bool verify_factorization(const SoergelResult& r) const {
    AlcoveFunction sum;
    for (const auto& [v, coeff] : r.e.values()) {
      const AlcoveFunction nv = n_function(v);
      for (const auto& [b, p] : nv.values()) sum.add(b, p * coeff);
    }
    return sum == r.m;
  }

  bool verify_factorization(const Point& mu) const {
    if (!geo_->is_regular(mu)) throw SingularPoint("verify_factorization: mu " + mu.to_string() + " is singular");
    return verify_factorization(run(geo_->minimal_gallery(geo_->alcove_of(mu))));
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::vector<int>, AlcoveFunction> n;
    std::map<std::pair<std::vector<int>, int>, std::vector<std::pair<AlcoveKey, Integer>>> corrections;
  };

  void remember(const AlcoveKey& a, const AlcoveFunction& n) const {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->n.try_emplace(a.floors, n);
  }

  std::vector<std::pair<AlcoveKey, Integer>> corrections_of(const AlcoveFunction& np, const AlcoveKey& target) const {
    std::vector<std::pair<AlcoveKey, Integer>> out;
    const int top = geo_->length(target);
    for (const auto& [d, p] : np.values()) {
      if (d == target || geo_->length(d) >= top) continue;
      Integer c = constant_term(p);
      if (c != 0) out.emplace_back(d, std::move(c));
    }
    return out;
  }

  /// n_{i+1} from n'. Subtracting all corrections at once is sound because
  /// every n_d takes values in tZ[t] away from d.
  AlcoveFunction normalise(AlcoveFunction np, const AlcoveKey& target) const {
    const auto corr = corrections_of(np, target);
    for (const auto& [d, c] : corr) {
      const AlcoveFunction nd = n_function(d);
      const Integer neg = -c;
      for (const auto& [b, p] : nd.values()) np.add(b, p.shifted(0, neg));
    }
    return np;
  }

  AlcoveFunction e_step(const AlcoveFunction& e, int type) const {
    AlcoveFunction out;
    out.set_stage(e.stage() + 1);
    for (const auto& [v, coeff] : e.values()) {
      const AlcoveKey vs = geo_->star_by_type(v, type);
      if (geo_->length(vs) < geo_->length(v)) {
        out.add(v, coeff * LaurentPoly::quantum_two());
        continue;
      }
      out.add(vs, coeff);
      for (const auto& [x, c] : kl_corrections(v, type)) out.add(x, coeff.shifted(0, c));
    }
    return out;
  }

  const Geometry* geo_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace qtl
