#pragma once

// Real multi-quadratic extension Q(sqrt(m1), ..., sqrt(mt)) composed with i.
//
// An element is stored as a finite sum  sum_s c_s * sqrt(s)  over distinct
// square-free integers s >= 1 with Gaussian-rational coefficients c_s. The
// products of subsets of adjoined radicals reduce to exactly this basis, and
// {sqrt(s)} is linearly independent over Q(i), so the representation is unique.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricanon/gaussian.hpp"

namespace tricanon {

class TowerElement {
 public:
  using Term = std::pair<std::int64_t, Gaussian>;

  TowerElement() = default;
  TowerElement(long value);  // NOLINT(google-explicit-constructor)
  TowerElement(const Gaussian& value);  // NOLINT(google-explicit-constructor)

  /// c * sqrt(m) for a positive integer m (m need not be square-free).
  static TowerElement radical(std::int64_t m, const Gaussian& c = Gaussian(1));
  /// Square root of a rational; negative inputs give i*sqrt(-q).
  static TowerElement sqrt_rational(const Rational& q);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Value as a Gaussian rational when no radical survives.
  std::optional<Gaussian> to_gaussian() const;
  /// Square-free integers occurring as keys.
  std::vector<std::int64_t> keys() const;

  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);
  TowerElement& operator/=(const TowerElement& o) { return *this *= o.inverse(); }

  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator/(TowerElement a, const TowerElement& b) { return a /= b; }
  friend TowerElement operator-(TowerElement a);
  friend bool operator==(const TowerElement& a, const TowerElement& b) = default;

  /// Multiplicative inverse by conjugating away one prime radical at a time.
  TowerElement inverse() const;
  /// The automorphism sqrt(p) -> -sqrt(p) for a prime p.
  TowerElement conjugate_over(std::int64_t prime) const;

 private:
  explicit TowerElement(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void add_term(std::int64_t key, const Gaussian& c, int sign);

  std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

/// The i-involution; fixes the radicals.
TowerElement conjugate(const TowerElement& x);

std::string to_string(const TowerElement& x);
/// Parses sums of terms `coeff*sqrt(m)`, e.g. "1/2*sqrt(2)+3i*sqrt(6)".
TowerElement parse_tower(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const TowerElement& x) {
  return os << to_string(x);
}

/// Square-free part of a positive integer.
std::int64_t squarefree_part(std::int64_t m);

/// Ordered list of adjoined square-free radicals.
class TowerContext {
 public:
  TowerContext() = default;

  const std::vector<std::int64_t>& radicals() const noexcept { return radicals_; }

  /// Adds the square-free part of m. Perfect squares and already present radicals add nothing.
  TowerContext adjoin(std::int64_t m) const;

  /// True when every radical in x lies in the field generated by this context.
  bool contains(const TowerElement& x) const;

  /// sqrt(m) as an element of this field; throws when it lies outside.
  TowerElement sqrt(std::int64_t m) const;

 private:
  bool generates(std::int64_t squarefree) const;

  std::vector<std::int64_t> radicals_;
};

}  // namespace tricanon
