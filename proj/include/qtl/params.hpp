#pragma once

// Global parameters of one computation: component count l, quantum
// characteristic e and multicharge kappa, with the derived shift vector rho
// and the fixed weighting theta = (0, 1, ..., l-1) at ghost distance g = l.

#include <compare>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qtl {

class Params {
 public:
  /// Validates and lifts kappa into [0, e). Throws InvalidParams naming the
  /// first violated condition.
  static Params make(int l, int e, std::vector<int> kappa) {
    if (l < 1) throw InvalidParams("invalid parameters: l >= 1 required");
    if (e < 3) throw InvalidParams("invalid parameters: e >= 3 required (e = infinity is unsupported)");
    if (2 * l > e) throw InvalidParams("invalid parameters: l <= e/2 required");
    if (static_cast<int>(kappa.size()) != l)
      throw InvalidParams("invalid parameters: kappa must have exactly l = " + std::to_string(l) + " entries");
    for (int& k : kappa) k = ((k % e) + e) % e;
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        if (i == j) continue;
        if (kappa[i] == kappa[j] || kappa[i] == (kappa[j] + 1) % e) {
          throw InvalidParams("invalid parameters: κ_i ∉ {κ_j, κ_j+1} violated for i=" + std::to_string(i + 1) +
                              ", j=" + std::to_string(j + 1));
        }
      }
    }
    return Params(l, e, std::move(kappa));
  }

  int l() const { return l_; }
  int e() const { return e_; }
  int g() const { return l_; }
  const std::vector<int>& kappa() const { return kappa_; }
  const std::vector<int>& rho() const { return rho_; }
  const std::vector<int>& theta() const { return theta_; }

  int residue(int value) const { return ((value % e_) + e_) % e_; }

  friend bool operator==(const Params& a, const Params& b) {
    return a.l_ == b.l_ && a.e_ == b.e_ && a.kappa_ == b.kappa_;
  }

 private:
  Params(int l, int e, std::vector<int> kappa) : l_(l), e_(e), kappa_(std::move(kappa)) {
    rho_.reserve(l_);
    theta_.reserve(l_);
    for (int i = 0; i < l_; ++i) {
      rho_.push_back(e_ - kappa_[i]);
      theta_.push_back(i);
    }
  }

  int l_;
  int e_;
  std::vector<int> kappa_;
  std::vector<int> rho_;
  std::vector<int> theta_;
};

/// All multicharges in [0, e)^l accepted by Params::make.
inline std::vector<std::vector<int>> valid_multicharges(int l, int e) {
  std::vector<std::vector<int>> out;
  if (l < 1 || e < 3 || 2 * l > e) return out;
  std::vector<int> k(static_cast<std::size_t>(l), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < l && ok; ++i)
      for (int j = 0; j < l && ok; ++j)
        if (i != j && (k[i] == k[j] || k[i] == (k[j] + 1) % e)) ok = false;
    if (ok) out.push_back(k);
    int pos = l - 1;
    while (pos >= 0 && ++k[pos] == e) k[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace qtl
