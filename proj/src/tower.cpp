#include "tricanon/tower.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "tricanon/errors.hpp"

namespace tricanon {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("radical key overflow");
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

std::int64_t squarefree_part(std::int64_t m) {
  if (m <= 0) throw PreconditionViolation("square-free part needs a positive integer");
  std::int64_t out = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return out * m;
}

TowerElement::TowerElement(long value) {
  if (value != 0) terms_.emplace_back(1, Gaussian(value));
}

TowerElement::TowerElement(const Gaussian& value) {
  if (!value.is_zero()) terms_.emplace_back(1, value);
}

TowerElement TowerElement::radical(std::int64_t m, const Gaussian& c) {
  if (m <= 0) throw PreconditionViolation("radicand must be positive");
  std::int64_t f = squarefree_part(m);
  // m = s^2 f
  std::int64_t s2 = m / f;
  std::int64_t s = 1;
  while (s * s < s2) ++s;
  TowerElement out;
  out.add_term(f, c * Gaussian(s), 1);
  return out;
}

TowerElement TowerElement::sqrt_rational(const Rational& q) {
  if (sgn(q) == 0) return {};
  Rational a = abs(q);
  // sqrt(n/d) = sqrt(n d) / d
  mpz_class nd = a.get_num() * a.get_den();
  if (!nd.fits_slong_p()) throw Error("radicand too large for the radical tower");
  Rational inv_den(1, a.get_den());
  inv_den.canonicalize();
  Gaussian c = sgn(q) > 0 ? Gaussian(inv_den) : Gaussian(0, inv_den);
  return radical(nd.get_si(), c);
}

std::optional<Gaussian> TowerElement::to_gaussian() const {
  if (terms_.empty()) return Gaussian(0);
  if (terms_.size() == 1 && terms_.front().first == 1) return terms_.front().second;
  return std::nullopt;
}

std::vector<std::int64_t> TowerElement::keys() const {
  std::vector<std::int64_t> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back(k);
  return out;
}

void TowerElement::add_term(std::int64_t key, const Gaussian& c, int sign) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::int64_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) {
    if (sign > 0) {
      it->second += c;
    } else {
      it->second -= c;
    }
    if (it->second.is_zero()) terms_.erase(it);
    return;
  }
  terms_.insert(it, Term{key, sign > 0 ? c : -c});
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c, 1);
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c, -1);
  return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].first == 1) {
    std::vector<TowerElement::Term> out = b.terms_;
    for (auto& [k, c] : out) c *= a.terms_[0].second;
    return TowerElement(std::move(out));
  }
  std::map<std::int64_t, Gaussian> acc;
  for (const auto& [s, x] : a.terms_) {
    for (const auto& [t, y] : b.terms_) {
      std::int64_t g = std::gcd(s, t);
      std::int64_t key = checked_mul(s / g, t / g);
      Gaussian c = x * y;
      if (g != 1) c *= Gaussian(g);
      acc[key] += c;
    }
  }
  std::vector<TowerElement::Term> out;
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  }
  return TowerElement(std::move(out));
}

TowerElement& TowerElement::operator*=(const TowerElement& o) {
  *this = *this * o;
  return *this;
}

TowerElement operator-(TowerElement a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

TowerElement TowerElement::conjugate_over(std::int64_t prime) const {
  TowerElement out = *this;
  for (auto& [k, c] : out.terms_) {
    if (k % prime == 0) c = -c;
  }
  return out;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in the radical tower");
  if (auto g = to_gaussian()) return TowerElement(g->inverse());
  std::set<std::int64_t> primes;
  for (const auto& [k, c] : terms_) {
    for (auto p : prime_factors(k)) primes.insert(p);
  }
  TowerElement x = *this;
  TowerElement numerator(1);
  for (auto p : primes) {
    TowerElement conj = x.conjugate_over(p);
    numerator *= conj;
    x *= conj;
  }
  auto g = x.to_gaussian();
  if (!g) throw Error("radical tower inversion did not descend to Q(i)");
  return numerator * TowerElement(g->inverse());
}

TowerElement conjugate(const TowerElement& x) {
  TowerElement out;
  for (const auto& [k, c] : x.terms()) out += TowerElement::radical(k, conjugate(c));
  return out;
}

std::string to_string(const TowerElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    std::string token;
    if (k == 1) {
      token = to_string(c);
    } else {
      std::string rad = "sqrt(" + std::to_string(k) + ")";
      if (c.is_one()) {
        token = rad;
      } else if (c == Gaussian(-1)) {
        token = "-" + rad;
      } else if (!c.is_real() && sgn(c.re()) != 0) {
        token = "(" + to_string(c) + ")*" + rad;
      } else {
        token = to_string(c) + "*" + rad;
      }
    }
    if (!first && token.front() != '-') out += '+';
    out += token;
    first = false;
  }
  return out;
}

TowerElement parse_tower(std::string_view text) {
  auto bad = [&](const char* what) -> ParseError {
    return ParseError("bad tower scalar '" + std::string(text) + "': " + what);
  };
  if (text.empty()) throw bad("empty");
  TowerElement out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw bad("expected '+' or '-' between terms");
    }
    first = false;
    Gaussian coeff(1);
    bool has_coeff = false;
    if (text.compare(pos, 5, "sqrt(") == 0) {
      // bare radical
    } else if (pos < text.size() && text[pos] == '(') {
      auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw bad("unbalanced parenthesis");
      coeff = parse_gaussian(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      has_coeff = true;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '/' || text[pos] == 'i')) {
        ++pos;
      }
      if (pos == start) throw bad("expected a coefficient");
      coeff = parse_gaussian(text.substr(start, pos - start));
      has_coeff = true;
    }
    std::int64_t radicand = 1;
    if (has_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      if (text.compare(pos, 5, "sqrt(") != 0) throw bad("expected sqrt( after '*'");
    }
    if (text.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw bad("unbalanced sqrt(");
      std::string digits(text.substr(pos, close - pos));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        throw bad("radicand must be a positive integer");
      }
      radicand = std::stoll(digits);
      if (radicand <= 0) throw bad("radicand must be a positive integer");
      pos = close + 1;
    } else if (!has_coeff) {
      throw bad("expected a term");
    }
    if (sign < 0) coeff = -coeff;
    out += TowerElement::radical(radicand, coeff);
  }
  return out;
}

namespace {

// Exponent-parity vector of a square-free integer over a shared prime index.
std::uint64_t parity_mask(std::int64_t squarefree, std::vector<std::int64_t>& primes) {
  std::uint64_t mask = 0;
  for (auto p : prime_factors(squarefree)) {
    auto it = std::find(primes.begin(), primes.end(), p);
    std::size_t idx = static_cast<std::size_t>(it - primes.begin());
    if (it == primes.end()) {
      primes.push_back(p);
      idx = primes.size() - 1;
    }
    if (idx >= 64) throw Error("too many primes in the radical tower");
    mask |= std::uint64_t{1} << idx;
  }
  return mask;
}

}  // namespace

TowerContext TowerContext::adjoin(std::int64_t m) const {
  if (m == 0) throw PreconditionViolation("cannot adjoin sqrt(0)");
  std::int64_t f = squarefree_part(m < 0 ? -m : m);
  TowerContext out = *this;
  if (f == 1) return out;
  if (std::find(radicals_.begin(), radicals_.end(), f) != radicals_.end()) return out;
  out.radicals_.push_back(f);
  return out;
}

bool TowerContext::generates(std::int64_t squarefree) const {
  if (squarefree == 1) return true;
  std::vector<std::int64_t> primes;
  std::vector<std::uint64_t> basis;
  for (auto r : radicals_) basis.push_back(parity_mask(r, primes));
  std::uint64_t target = parity_mask(squarefree, primes);
  // GF(2) elimination: reduce target against an echelon basis.
  std::vector<std::uint64_t> echelon;
  for (auto v : basis) {
    for (auto e : echelon) v = std::min(v, v ^ e);
    if (v != 0) {
      echelon.push_back(v);
      std::sort(echelon.rbegin(), echelon.rend());
    }
  }
  for (auto e : echelon) target = std::min(target, target ^ e);
  return target == 0;
}

bool TowerContext::contains(const TowerElement& x) const {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [&](const auto& t) { return generates(t.first); });
}

TowerElement TowerContext::sqrt(std::int64_t m) const {
  if (m <= 0) throw PreconditionViolation("radicand must be positive");
  if (!generates(squarefree_part(m))) {
    throw FieldPromotionRequired("sqrt(" + std::to_string(m) + ") is outside the tower");
  }
  return TowerElement::radical(m);
}

}  // namespace tricanon
