#pragma once

/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials in t with arbitrary-precision integer
 *        coefficients.
 *
 * Every graded quantity in the library (graded dimensions, decomposition
 * numbers, simple characters) is a LaurentPoly. Terms are kept in a
 * std::map keyed by exponent, so iteration is always in increasing exponent
 * order and no stored coefficient is ever zero.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qtl {

// Expression templates off so that auto and structured bindings hold values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Exponent = int;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent out{};
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent exponent overflow");
  return out;
}

inline Exponent checked_neg(Exponent a) {
  if (a == std::numeric_limits<Exponent>::min()) throw std::overflow_error("Laurent exponent overflow");
  return -a;
}

}  // namespace detail

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;

  /// Constant polynomial c.
  LaurentPoly(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(0, Integer(c));
  }

  /// From (exponent, coefficient) pairs; repeated exponents accumulate.
  LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms) {
    for (const auto& [k, c] : terms) add_term(k, Integer(c));
  }

  static LaurentPoly monomial(Exponent k, Integer c = 1) {
    LaurentPoly p;
    p.add_term(k, std::move(c));
    return p;
  }

  /// t + t^{-1}
  static LaurentPoly quantum_two() { return LaurentPoly{{-1, 1}, {1, 1}}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coefficient(Exponent k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Exponent min_exponent() const {
    if (is_zero()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
  }
  Exponent max_exponent() const {
    if (is_zero()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }

  bool nonnegative() const {
    for (const auto& [k, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  void add_term(Exponent k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return a.shifted(0, -1); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(detail::checked_add(ka, kb), ca * cb);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// c * t^k * this
  LaurentPoly shifted(Exponent k, const Integer& c = 1) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), detail::checked_add(e, k), v * c);
    return out;
  }

  /// t -> t^{-1}
  LaurentPoly bar() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(detail::checked_neg(k), c);
    return out;
  }

  bool is_bar_symmetric() const { return bar() == *this; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Canonical rendering: increasing exponents, "t^k" for k != 0, "0" when empty.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (k == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += "t^" + std::to_string(k);
    }
    return out;
  }

 private:
  Terms terms_;
};

// Free-function surface of the arithmetic module.

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

inline LaurentPoly shift(const LaurentPoly& a, Exponent k, const Integer& c) { return a.shifted(k, c); }

inline Integer constant_term(const LaurentPoly& a) { return a.coefficient(0); }

inline LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

struct SymmetricSplit {
  LaurentPoly symmetric;  ///< bar-invariant part
  LaurentPoly positive;   ///< supported on exponents >= 1
};

/// Unique decomposition f = symmetric + positive with the symmetric part
/// determined by the nonpositive-exponent part of f.
inline SymmetricSplit split_symmetric(const LaurentPoly& f) {
  if (!f.nonnegative())
    throw SplitImpossible("split_symmetric: input has a negative coefficient: " + f.to_string());
  SymmetricSplit out;
  for (const auto& [k, c] : f.terms()) {
    if (k > 0) break;
    out.symmetric.add_term(k, c);
    if (k < 0) out.symmetric.add_term(detail::checked_neg(k), c);
  }
  out.positive = f - out.symmetric;
  if (!out.positive.nonnegative())
    throw SplitImpossible("split_symmetric: no nonnegative positive part for " + f.to_string());
  return out;
}

/// Whether a lies in N0[t + t^{-1}], decided by peeling off the top term.
inline bool is_in_plus_semiring(const LaurentPoly& a) {
  static const LaurentPoly q2 = LaurentPoly::quantum_two();
  std::vector<LaurentPoly> powers{LaurentPoly(1)};
  LaurentPoly rest = a;
  while (!rest.is_zero()) {
    const Exponent k = rest.terms().rbegin()->first;
    const Integer c = rest.terms().rbegin()->second;
    if (k < 0 || c < 0) return false;
    while (static_cast<Exponent>(powers.size()) <= k) powers.push_back(powers.back() * q2);
    rest -= powers[static_cast<std::size_t>(k)].shifted(0, c);
  }
  return true;
}

}  // namespace qtl
