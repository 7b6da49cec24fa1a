#include <algorithm>
#include <map>

#include "tricanon/polynomial.hpp"

namespace tricanon {

namespace {

// Gaussian integers over GMP.
struct GInt {
  mpz_class re;
  mpz_class im;
};

GInt operator*(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt operator-(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

bool is_zero(const GInt& a) { return a.re == 0 && a.im == 0; }

mpz_class norm(const GInt& a) { return a.re * a.re + a.im * a.im; }

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  // nearest integer to a/b for b > 0
  mpz_class twice = 2 * a + b;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  return q;
}

// Quotient a/b rounded to the nearest Gaussian integer.
GInt round_quotient(const GInt& a, const GInt& b) {
  mpz_class n = norm(b);
  GInt num = a * GInt{b.re, -b.im};
  return {round_div(num.re, n), round_div(num.im, n)};
}

// Exact quotient when b divides a.
std::optional<GInt> exact_quotient(const GInt& a, const GInt& b) {
  mpz_class n = norm(b);
  GInt num = a * GInt{b.re, -b.im};
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  return GInt{num.re / n, num.im / n};
}

GInt gint_gcd(GInt a, GInt b) {
  while (!is_zero(b)) {
    GInt r = a - round_quotient(a, b) * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_integer(mpz_class n, std::map<mpz_class, int>& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[p]++;
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out[n]++;
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_integer(d, out);
  factor_integer(n / d, out);
}

// Gaussian primes lying over a rational prime p, up to units.
std::vector<GInt> primes_over(const mpz_class& p) {
  if (p == 2) return {GInt{1, 1}};
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), p.get_mpz_t(), 4);
  if (r == 3) return {GInt{p, 0}};
  // find t with t^2 = -1 mod p
  mpz_class e = (p - 1) / 4;
  mpz_class t;
  for (unsigned long a = 2;; ++a) {
    mpz_powm(t.get_mpz_t(), mpz_class(a).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = (t * t + 1) % p;
    if (sq == 0) break;
  }
  GInt pi = gint_gcd(GInt{p, 0}, GInt{t, 1});
  return {pi, GInt{pi.re, -pi.im}};
}

// Divisors of z up to units.
std::vector<GInt> divisors(GInt z) {
  std::map<mpz_class, int> rational;
  factor_integer(norm(z), rational);
  std::vector<std::pair<GInt, int>> factors;
  for (const auto& [p, e] : rational) {
    for (const auto& pi : primes_over(p)) {
      int k = 0;
      while (auto q = exact_quotient(z, pi)) {
        z = *q;
        ++k;
      }
      if (k > 0) factors.emplace_back(pi, k);
    }
  }
  std::vector<GInt> out{GInt{1, 0}};
  for (const auto& [pi, e] : factors) {
    std::size_t base = out.size();
    GInt pw{1, 0};
    for (int k = 1; k <= e; ++k) {
      pw = pw * pi;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

Gaussian to_gaussian(const GInt& z) { return Gaussian(Rational(z.re), Rational(z.im)); }

// Coefficients scaled into Z[i] and divided by their content.
std::vector<GInt> primitive_integer_coeffs(const Poly<Gaussian>& p) {
  mpz_class l = 1;
  for (const auto& c : p) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GInt> out;
  for (const auto& c : p) {
    Rational re = c.re() * l;
    Rational im = c.im() * l;
    out.push_back(GInt{re.get_num(), im.get_num()});
  }
  GInt g{0, 0};
  for (const auto& c : out) g = gint_gcd(g, c);
  if (!is_zero(g) && norm(g) != 1) {
    for (auto& c : out) c = *exact_quotient(c, g);
  }
  return out;
}

[[noreturn]] void not_split(const Poly<Gaussian>& p) {
  throw EigenvalueOutsideField("polynomial " + poly_to_string(p) +
                               " has an irreducible factor of degree > 1 over Q(i)");
}

// Distinct roots of a square-free polynomial.
std::vector<Gaussian> squarefree_roots(Poly<Gaussian> q, const Poly<Gaussian>& original) {
  std::vector<Gaussian> found;
  const std::vector<Gaussian> units{Gaussian(1), Gaussian(-1), Gaussian::i(), -Gaussian::i()};
  while (true) {
    trim(q);
    long deg = degree(q);
    if (deg <= 0) break;
    if (q[0].is_zero()) {
      found.emplace_back(0);
      q.erase(q.begin());
      continue;
    }
    if (deg == 1) {
      found.push_back(-q[0] / q[1]);
      break;
    }
    if (deg == 2) {
      Gaussian disc = q[1] * q[1] - Gaussian(4) * q[2] * q[0];
      auto s = sqrt_in_field(disc);
      if (!s) not_split(original);
      Gaussian two_a = Gaussian(2) * q[2];
      found.push_back((-q[1] + *s) / two_a);
      found.push_back((-q[1] - *s) / two_a);
      break;
    }
    auto z = primitive_integer_coeffs(q);
    auto num_divs = divisors(z.front());
    auto den_divs = divisors(z.back());
    std::optional<Gaussian> root;
    for (const auto& d : den_divs) {
      Gaussian dd = to_gaussian(d);
      for (const auto& n : num_divs) {
        Gaussian base = to_gaussian(n) / dd;
        for (const auto& u : units) {
          Gaussian cand = u * base;
          if (poly_eval(q, cand).is_zero()) {
            root = cand;
            break;
          }
        }
        if (root) break;
      }
      if (root) break;
    }
    if (!root) not_split(original);
    found.push_back(*root);
    q = poly_divmod(q, Poly<Gaussian>{-*root, Gaussian(1)}).first;
  }
  return found;
}

}  // namespace

std::vector<Root> roots_in_field(const Poly<Gaussian>& p_in) {
  Poly<Gaussian> p = p_in;
  trim(p);
  if (p.empty()) throw PreconditionViolation("roots of the zero polynomial");
  std::vector<Root> out;
  if (degree(p) == 0) return out;
  Poly<Gaussian> sf = poly_divmod(p, poly_gcd(p, derivative(p))).first;
  auto distinct = squarefree_roots(sf, p);
  std::size_t total = 0;
  for (const auto& r : distinct) {
    Poly<Gaussian> rest = p;
    Poly<Gaussian> lin{-r, Gaussian(1)};
    std::size_t mult = 0;
    while (true) {
      auto [qq, rem] = poly_divmod(rest, lin);
      if (!rem.empty()) break;
      rest = std::move(qq);
      ++mult;
    }
    out.push_back({r, mult});
    total += mult;
  }
  if (total != static_cast<std::size_t>(degree(p))) not_split(p);
  std::sort(out.begin(), out.end(),
            [](const Root& a, const Root& b) { return eigen_compare(a.value, b.value) < 0; });
  return out;
}

std::string poly_to_string(const Poly<Gaussian>& p) {
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k > 0; --k) {
    const Gaussian& c = p[k - 1];
    if (c.is_zero()) continue;
    std::size_t e = k - 1;
    std::string coeff = to_string(c);
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) coeff = "(" + coeff + ")";
    std::string term;
    if (e == 0) {
      term = coeff;
    } else {
      if (c.is_one()) {
        term = "";
      } else if (c == Gaussian(-1)) {
        term = "-";
      } else {
        term = coeff + "*";
      }
      term += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    if (!first && term.front() != '-') out += '+';
    out += term;
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace tricanon
