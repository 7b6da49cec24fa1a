#pragma once

// Exact scalars: rationals (the fixed field of the involution) and Gaussian
// rationals Q(i) with complex conjugation.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tricanon {

using Rational = mpq_class;

/// Element of the fixed field of the involution (values with conj(x) == x).
using FixedFieldElement = Rational;

class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian i() { return Gaussian(0, 1); }
  static Gaussian from_fraction(long num, long den);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  /// True when the value lies in the fixed field Q.
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Gaussian inverse() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// a + bi -> a - bi.
inline Gaussian conjugate(const Gaussian& x) { return Gaussian(x.re(), -x.im()); }

/// x * conj(x), the exact surrogate for |x|^2.
FixedFieldElement modulus_squared(const Gaussian& x);

/// Some y in Q(i) with y*y == x, or nullopt. Of the two roots {y, -y} the
/// lexicographically larger under (re, im) is returned.
std::optional<Gaussian> sqrt_in_field(const Gaussian& x);

/// Square root of a nonnegative rational when it is rational.
std::optional<Rational> rational_sqrt(const Rational& x);

/// The order of the fixed field.
std::strong_ordering compare_fixed(const FixedFieldElement& a, const FixedFieldElement& b);

/// Total order on Q(i) used only for choosing representatives: lexicographic on (re, im).
std::strong_ordering lex_compare(const Gaussian& a, const Gaussian& b);
inline bool lex_less(const Gaussian& a, const Gaussian& b) { return lex_compare(a, b) < 0; }

/// Order used for sorting eigenvalues: (|x|^2, re, im).
std::strong_ordering eigen_compare(const Gaussian& a, const Gaussian& b);

/// Scalar text grammar: INT, INT/POSINT, with an optional imaginary part suffixed by i.
/// Examples: "-3/2+1/5i", "i", "-i", "2i", "0".
Gaussian parse_gaussian(std::string_view token);
std::string to_string(const Gaussian& x);
std::string to_string(const Rational& x);

inline std::ostream& operator<<(std::ostream& os, const Gaussian& x) { return os << to_string(x); }

}  // namespace tricanon
