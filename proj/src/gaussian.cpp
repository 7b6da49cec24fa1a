#include "tricanon/gaussian.hpp"

#include <cctype>

#include "tricanon/errors.hpp"

namespace tricanon {

Gaussian Gaussian::from_fraction(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Gaussian(q);
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (sgn(im_) == 0) return Gaussian(Rational(1) / re_);
  Rational n = re_ * re_ + im_ * im_;
  return Gaussian(re_ / n, -im_ / n);
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

FixedFieldElement modulus_squared(const Gaussian& x) { return x.re() * x.re() + x.im() * x.im(); }

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<Gaussian> sqrt_in_field(const Gaussian& x) {
  const Rational& a = x.re();
  const Rational& b = x.im();
  if (sgn(b) == 0) {
    if (sgn(a) >= 0) {
      auto r = rational_sqrt(a);
      if (!r) return std::nullopt;
      return Gaussian(*r);
    }
    auto r = rational_sqrt(-a);
    if (!r) return std::nullopt;
    return Gaussian(0, *r);
  }
  // (p + qi)^2 = a + bi with p = sqrt((a + r)/2), q = sign(b) sqrt((r - a)/2), r = |x|.
  auto r = rational_sqrt(modulus_squared(x));
  if (!r) return std::nullopt;
  auto p = rational_sqrt((a + *r) / 2);
  auto q = rational_sqrt((*r - a) / 2);
  if (!p || !q) return std::nullopt;
  Rational qs = sgn(b) > 0 ? *q : Rational(-*q);
  // p > 0 here because b != 0, so this root is the lexicographically larger one.
  return Gaussian(*p, qs);
}

std::strong_ordering compare_fixed(const FixedFieldElement& a, const FixedFieldElement& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Gaussian& a, const Gaussian& b) {
  auto c = compare_fixed(a.re(), b.re());
  if (c != 0) return c;
  return compare_fixed(a.im(), b.im());
}

std::strong_ordering eigen_compare(const Gaussian& a, const Gaussian& b) {
  auto c = compare_fixed(modulus_squared(a), modulus_squared(b));
  if (c != 0) return c;
  return lex_compare(a, b);
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
};

[[noreturn]] void fail(std::string_view token, const char* what) {
  throw ParseError("bad scalar '" + std::string(token) + "': " + what);
}

// Reads INT or INT/POSINT without sign. Returns nullopt when no digits follow.
std::optional<Rational> read_unsigned(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) return std::nullopt;
  mpz_class num(std::string(c.s.substr(start, c.pos - start)));
  mpz_class den = 1;
  if (c.peek() == '/') {
    ++c.pos;
    std::size_t dstart = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == dstart) fail(c.s, "missing denominator");
    den = mpz_class(std::string(c.s.substr(dstart, c.pos - dstart)));
    if (den == 0) fail(c.s, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

int read_sign(Cursor& c) {
  if (c.peek() == '+') {
    ++c.pos;
    return 1;
  }
  if (c.peek() == '-') {
    ++c.pos;
    return -1;
  }
  return 0;
}

}  // namespace

Gaussian parse_gaussian(std::string_view token) {
  if (token.empty()) fail(token, "empty token");
  Cursor c{token};
  int sign = read_sign(c);
  auto mag = read_unsigned(c);
  if (c.peek() == 'i') {
    ++c.pos;
    if (!c.done()) fail(token, "trailing characters after imaginary unit");
    Rational im = mag ? *mag : Rational(1);
    if (sign < 0) im = -im;
    return Gaussian(0, im);
  }
  if (!mag) fail(token, "expected a number");
  Rational re = sign < 0 ? Rational(-*mag) : *mag;
  if (c.done()) return Gaussian(re);
  int isign = read_sign(c);
  if (isign == 0) fail(token, "expected '+' or '-' before the imaginary part");
  auto imag = read_unsigned(c);
  if (c.peek() != 'i') fail(token, "imaginary part must end with 'i'");
  ++c.pos;
  if (!c.done()) fail(token, "trailing characters after imaginary unit");
  Rational im = imag ? *imag : Rational(1);
  if (isign < 0) im = -im;
  return Gaussian(re, im);
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Gaussian& x) {
  if (x.is_real()) return to_string(x.re());
  std::string im;
  if (x.im() == 1) {
    im = "i";
  } else if (x.im() == -1) {
    im = "-i";
  } else {
    im = to_string(x.im()) + "i";
  }
  if (sgn(x.re()) == 0) return im;
  std::string out = to_string(x.re());
  if (im.front() != '-') out += '+';
  return out + im;
}

}  // namespace tricanon
