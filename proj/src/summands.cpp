#include "tricanon/summands.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "tricanon/errors.hpp"

namespace tricanon {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names{
      {Family::CM1, "CM1"},     {Family::CM2, "CM2"},   {Family::CM3, "CM3"},
      {Family::CMI1, "CMI1"},   {Family::CMI2, "CMI2"}, {Family::SSS1N, "SSS1N"},
      {Family::SS2N, "SS2N"},   {Family::LYG, "LYG"},   {Family::NN_IDENT, "NN_IDENT"},
      {Family::SSNEW, "SSNEW"}, {Family::SC1, "SC1"},   {Family::SC2, "SC2"},
      {Family::SC3, "SC3"},     {Family::CC1, "CC1"},   {Family::CC23, "CC23"},
      {Family::HE1, "HE1"},     {Family::HE2, "HE2"},
  };
  return names;
}

const std::vector<std::pair<Relation, std::string>>& relation_names() {
  static const std::vector<std::pair<Relation, std::string>> names{
      {Relation::Congruence, "congruence"}, {Relation::Star, "star"},
      {Relation::SymSym, "sym-sym"},        {Relation::SymSymSecond, "sym-sym-second"},
      {Relation::SymSkew, "sym-skew"},      {Relation::SkewSkew, "skew-skew"},
      {Relation::Hermitian, "herm-herm"},
  };
  return names;
}

[[noreturn]] void violation(const SummandDescriptor& d, const std::string& what) {
  throw InvariantViolation(family_name(d.family) + " with n=" + std::to_string(d.n) + ": " + what);
}

bool odd(std::size_t n) { return n % 2 == 1; }

SummandDescriptor base(Family f, std::size_t n) {
  SummandDescriptor d;
  d.family = f;
  d.n = n;
  return d;
}

Gaussian min_lex(const Gaussian& a, const Gaussian& b) { return lex_less(b, a) ? b : a; }
Gaussian max_lex(const Gaussian& a, const Gaussian& b) { return lex_less(a, b) ? b : a; }

SignState flip(SignState s) {
  switch (s) {
    case SignState::Plus:
      return SignState::Minus;
    case SignState::Minus:
      return SignState::Plus;
    case SignState::Unknown:
      return SignState::Unknown;
  }
  return s;
}

Gaussian signed_value(const Gaussian& x, SignState s) { return s == SignState::Minus ? -x : x; }

// Tridiagonal n x n with entry (0,0) = d0, (i,i+1) = up(i), (i+1,i) = lo(i).
template <class T>
Matrix<T> tridiagonal(std::size_t n, const T& d0, const std::function<T(std::size_t)>& up,
                      const std::function<T(std::size_t)>& lo) {
  Matrix<T> m(n, n);
  m(0, 0) = d0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = up(i);
    m(i + 1, i) = lo(i);
  }
  return m;
}

template <class T>
T alternating(std::size_t i, const T& even, const T& odd_value) {
  return i % 2 == 0 ? even : odd_value;
}

// (a, b) of the HE2 summand.
std::pair<TowerElement, TowerElement> he2_coefficients(const SummandDescriptor& d) {
  TowerElement a;
  TowerElement b;
  if (d.c_infinite) {
    if (odd(d.n)) {
      b = TowerElement(1);
    } else {
      a = TowerElement(1);
    }
  } else {
    TowerElement r = TowerElement::sqrt_rational(Rational(1) + d.c * d.c).inverse();
    TowerElement c{Gaussian(d.c)};
    if (odd(d.n)) {
      a = r;
      b = c * r;
    } else {
      b = r;
      a = -(c * r);
    }
  }
  if (d.sign == SignState::Minus) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : family_names()) {
    if (fam == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : family_names()) {
    if (n == name) return fam;
  }
  throw ParseError("unknown summand family '" + std::string(name) + "'");
}

Relation relation_of(Family f) {
  switch (f) {
    case Family::CM1:
    case Family::CM2:
    case Family::CM3:
      return Relation::Congruence;
    case Family::CMI1:
    case Family::CMI2:
      return Relation::Star;
    case Family::SSS1N:
    case Family::SS2N:
      return Relation::SymSym;
    case Family::LYG:
    case Family::NN_IDENT:
    case Family::SSNEW:
      return Relation::SymSymSecond;
    case Family::SC1:
    case Family::SC2:
    case Family::SC3:
      return Relation::SymSkew;
    case Family::CC1:
    case Family::CC23:
      return Relation::SkewSkew;
    case Family::HE1:
    case Family::HE2:
      return Relation::Hermitian;
  }
  throw Error("unknown family");
}

bool is_pair_family(Family f) {
  Relation r = relation_of(f);
  return r != Relation::Congruence && r != Relation::Star;
}

bool carries_sign(const SummandDescriptor& d) {
  return d.family == Family::CMI2 || d.family == Family::HE2 || (d.family == Family::HE1 && odd(d.n));
}

std::string relation_name(Relation r) {
  for (const auto& [rel, name] : relation_names()) {
    if (rel == r) return name;
  }
  return "?";
}

Relation parse_relation(std::string_view name) {
  for (const auto& [rel, n] : relation_names()) {
    if (n == name) return rel;
  }
  throw ParseError("unknown relation '" + std::string(name) + "'");
}

SummandDescriptor make_cm1(std::size_t n, const Gaussian& lambda) {
  SummandDescriptor d = base(Family::CM1, n);
  d.lambda = lambda;
  return normalize(d);
}

SummandDescriptor make_cm2(std::size_t n, int eps) {
  SummandDescriptor d = base(Family::CM2, n);
  d.eps = eps;
  return d;
}

SummandDescriptor make_cm3(std::size_t n) { return base(Family::CM3, n); }

SummandDescriptor make_cmi1(std::size_t n, const Gaussian& lambda) {
  SummandDescriptor d = base(Family::CMI1, n);
  d.lambda = lambda;
  return normalize(d);
}

SummandDescriptor make_cmi2(std::size_t n, const Gaussian& mu, SignState sign) {
  SummandDescriptor d = base(Family::CMI2, n);
  d.mu = mu;
  d.sign = sign;
  return d;
}

SummandDescriptor make_sss1n(std::size_t n, int eps, const Gaussian& lambda) {
  SummandDescriptor d = base(Family::SSS1N, n);
  d.eps = eps;
  d.lambda = lambda;
  return d;
}

SummandDescriptor make_ss2n(std::size_t n, const Gaussian& lambda) {
  SummandDescriptor d = base(Family::SS2N, n);
  d.lambda = lambda;
  return d;
}

SummandDescriptor make_lyg(std::size_t n, const Gaussian& lambda) {
  SummandDescriptor d = base(Family::LYG, n);
  d.lambda = lambda;
  return d;
}

SummandDescriptor make_nn_ident(std::size_t n) { return base(Family::NN_IDENT, n); }
SummandDescriptor make_ssnew(std::size_t n) { return base(Family::SSNEW, n); }

SummandDescriptor make_sc1(std::size_t n, const Gaussian& lambda) {
  SummandDescriptor d = base(Family::SC1, n);
  d.lambda = lambda;
  return normalize(d);
}

SummandDescriptor make_sc2(std::size_t n, int eps) {
  SummandDescriptor d = base(Family::SC2, n);
  d.eps = eps;
  return d;
}

SummandDescriptor make_sc3(std::size_t n) { return base(Family::SC3, n); }

SummandDescriptor make_cc1(std::size_t n, const Gaussian& lambda) {
  SummandDescriptor d = base(Family::CC1, n);
  d.lambda = lambda;
  return d;
}

SummandDescriptor make_cc23(std::size_t n) { return base(Family::CC23, n); }

SummandDescriptor make_he1(std::size_t n, const Gaussian& mu, SignState sign) {
  SummandDescriptor d = base(Family::HE1, n);
  d.mu = mu;
  d.sign = odd(n) ? sign : SignState::Plus;
  return normalize(d);
}

SummandDescriptor make_he2(std::size_t n, const Rational& c, SignState sign) {
  SummandDescriptor d = base(Family::HE2, n);
  d.c = c;
  d.sign = sign;
  return d;
}

SummandDescriptor make_he2_infinite(std::size_t n, SignState sign) {
  SummandDescriptor d = base(Family::HE2, n);
  d.c_infinite = true;
  d.sign = sign;
  return d;
}

SummandDescriptor normalize(SummandDescriptor d) {
  switch (d.family) {
    case Family::CM1:
      if (!d.lambda.is_zero()) d.lambda = min_lex(d.lambda, d.lambda.inverse());
      break;
    case Family::CMI1:
      if (!d.lambda.is_zero() && modulus_squared(d.lambda) > 1) d.lambda = conjugate(d.lambda).inverse();
      break;
    case Family::SC1:
      d.lambda = max_lex(d.lambda, -d.lambda);
      break;
    case Family::HE1:
      if (odd(d.n)) {
        if (d.mu == -Gaussian::i()) {
          d.mu = Gaussian::i();
          d.sign = flip(d.sign);
        }
      } else if (sgn(d.mu.im()) < 0) {
        d.mu = conjugate(d.mu);
      }
      break;
    default:
      break;
  }
  if (!carries_sign(d) && d.sign == SignState::Minus) d.sign = SignState::Plus;
  return d;
}

void validate(const SummandDescriptor& d) {
  if (d.n == 0) violation(d, "size must be positive");
  if (d.eps != 0 && d.eps != 1) violation(d, "eps must be 0 or 1");
  const Gaussian one(1);
  switch (d.family) {
    case Family::CM1:
      if (odd(d.n)) violation(d, "size must be even");
      if (d.lambda == one || d.lambda == -one) violation(d, "lambda must differ from 1 and -1");
      if (!d.lambda.is_zero() && !(d.lambda == min_lex(d.lambda, d.lambda.inverse()))) {
        violation(d, "lambda must be the smaller of lambda and 1/lambda");
      }
      break;
    case Family::CM2:
    case Family::SC2:
      if (d.n % 4 == 0 && d.eps != 1) violation(d, "eps must be 1 when n is a multiple of 4");
      break;
    case Family::CM3:
    case Family::SC3:
      if (d.n % 4 != 0) violation(d, "size must be a multiple of 4");
      break;
    case Family::CMI1:
      if (modulus_squared(d.lambda) == 1) violation(d, "|lambda| must differ from 1");
      if (odd(d.n) && !d.lambda.is_zero()) violation(d, "lambda must be 0 when n is odd");
      if (modulus_squared(d.lambda) > 1) violation(d, "representative must have |lambda| < 1");
      break;
    case Family::CMI2:
      if (modulus_squared(d.mu) != 1) violation(d, "|mu| must be 1");
      break;
    case Family::SSS1N:
      if (!odd(d.n) && d.eps != 1) violation(d, "eps must be 1 when n is even");
      if (odd(d.n) && !d.lambda.is_zero()) violation(d, "lambda must be 0 when n is odd");
      break;
    case Family::SS2N:
      if (!odd(d.n) && !d.lambda.is_zero()) violation(d, "lambda must be 0 when n is even");
      break;
    case Family::LYG:
    case Family::NN_IDENT:
    case Family::CC23:
      break;
    case Family::SSNEW:
      if (!odd(d.n)) violation(d, "size must be odd");
      break;
    case Family::SC1:
      if (odd(d.n)) violation(d, "size must be even");
      if (d.lambda.is_zero()) violation(d, "lambda must be nonzero");
      if (!(d.lambda == max_lex(d.lambda, -d.lambda))) {
        violation(d, "lambda must be the larger of lambda and -lambda");
      }
      break;
    case Family::CC1:
      if (odd(d.n)) violation(d, "size must be even");
      break;
    case Family::HE1:
      if (odd(d.n)) {
        if (!(d.mu == Gaussian::i())) violation(d, "mu is stored as i when n is odd; the sign carries +-");
      } else if (sgn(d.mu.im()) <= 0) {
        violation(d, "mu must have positive imaginary part when n is even");
      }
      break;
    case Family::HE2:
      break;
  }
}

std::strong_ordering compare_descriptors(const SummandDescriptor& a, const SummandDescriptor& b) {
  if (a.family != b.family) return static_cast<int>(a.family) <=> static_cast<int>(b.family);
  if (a.n != b.n) return a.n <=> b.n;
  if (auto c = lex_compare(a.lambda, b.lambda); c != 0) return c;
  if (a.eps != b.eps) return a.eps <=> b.eps;
  if (auto c = lex_compare(a.mu, b.mu); c != 0) return c;
  if (a.c_infinite != b.c_infinite) return a.c_infinite <=> b.c_infinite;
  if (auto c = compare_fixed(a.c, b.c); c != 0) return c;
  return static_cast<int>(a.sign) <=> static_cast<int>(b.sign);
}

void sort_descriptors(std::vector<SummandDescriptor>& ds) {
  std::stable_sort(ds.begin(), ds.end(), [](const SummandDescriptor& a, const SummandDescriptor& b) {
    return compare_descriptors(a, b) < 0;
  });
}

bool equal_modulo_sign(const SummandDescriptor& a, const SummandDescriptor& b) {
  if (a.sign_determined() && b.sign_determined()) return a == b;
  SummandDescriptor x = a;
  SummandDescriptor y = b;
  x.sign = y.sign = SignState::Plus;
  if (x.family == Family::CMI2 && y.family == Family::CMI2 && x.mu == -y.mu) y.mu = x.mu;
  return x == y;
}

std::string to_string(const SummandDescriptor& d) {
  std::string out = family_name(d.family) + "(n=" + std::to_string(d.n);
  auto field = [&](const std::string& key, const std::string& value) { out += ", " + key + "=" + value; };
  switch (d.family) {
    case Family::CM1:
    case Family::CMI1:
    case Family::SS2N:
    case Family::LYG:
    case Family::SC1:
    case Family::CC1:
      field("lambda", to_string(d.lambda));
      break;
    case Family::SSS1N:
      field("lambda", to_string(d.lambda));
      field("eps", std::to_string(d.eps));
      break;
    case Family::CM2:
    case Family::SC2:
      field("eps", std::to_string(d.eps));
      break;
    case Family::CMI2:
    case Family::HE1:
      field("mu", to_string(d.mu));
      break;
    case Family::HE2:
      field("c", d.c_infinite ? "inf" : to_string(d.c));
      break;
    default:
      break;
  }
  if (carries_sign(d)) {
    const char* s = d.sign == SignState::Plus ? "+" : d.sign == SignState::Minus ? "-" : "?";
    field("sign", s);
  }
  return out + ")";
}

SummandDescriptor parse_descriptor(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw ParseError("descriptor must look like FAMILY(n=..., ...): '" + std::string(text) + "'");
  }
  SummandDescriptor d;
  d.family = parse_family(strip(text.substr(0, open)));
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  bool have_n = false;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = strip(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("descriptor field without '=': " + std::string(item));
    std::string key(strip(item.substr(0, eq)));
    std::string_view value = strip(item.substr(eq + 1));
    if (key == "n") {
      std::string v(value);
      if (v.empty() || !std::all_of(v.begin(), v.end(), ::isdigit)) throw ParseError("bad size '" + v + "'");
      d.n = std::stoul(v);
      have_n = true;
    } else if (key == "lambda") {
      d.lambda = parse_gaussian(value);
    } else if (key == "mu") {
      d.mu = parse_gaussian(value);
    } else if (key == "eps") {
      if (value == "0") {
        d.eps = 0;
      } else if (value == "1") {
        d.eps = 1;
      } else {
        throw ParseError("eps must be 0 or 1");
      }
    } else if (key == "c") {
      if (value == "inf") {
        d.c_infinite = true;
      } else {
        Gaussian g = parse_gaussian(value);
        if (!g.is_real()) throw ParseError("c must be rational");
        d.c = g.re();
      }
    } else if (key == "sign") {
      if (value == "+") {
        d.sign = SignState::Plus;
      } else if (value == "-") {
        d.sign = SignState::Minus;
      } else if (value == "?") {
        d.sign = SignState::Unknown;
      } else {
        throw ParseError("sign must be +, - or ?");
      }
    } else {
      throw ParseError("unknown descriptor field '" + key + "'");
    }
  }
  if (!have_n) throw ParseError("descriptor lacks n");
  d = normalize(d);
  validate(d);
  return d;
}

GMatrix materialize(const SummandDescriptor& d) {
  validate(d);
  using G = Gaussian;
  const G one(1);
  const G zero(0);
  switch (d.family) {
    case Family::CM1:
    case Family::CMI1:
      return tridiagonal<G>(
          d.n, zero, [&](std::size_t) { return one; }, [&](std::size_t) { return d.lambda; });
    case Family::CM2:
      return tridiagonal<G>(
          d.n, G(d.eps), [&](std::size_t) { return one; },
          [&](std::size_t i) { return alternating(i, -one, one); });
    case Family::CM3:
      return tridiagonal<G>(
          d.n, zero, [&](std::size_t) { return one; },
          [&](std::size_t i) { return alternating(i, one, -one); });
    case Family::CMI2: {
      G mu = signed_value(d.mu, d.sign);
      return tridiagonal<G>(
          d.n, mu, [&](std::size_t) { return mu; },
          [&](std::size_t i) { return alternating(i, -mu, mu); });
    }
    default:
      throw PreconditionViolation(family_name(d.family) + " is a pair family");
  }
}

TMatrix build_N(std::size_t n) {
  if (n == 0) throw PreconditionViolation("N_n needs n >= 1");
  TMatrix m(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    m(l, l) = TowerElement(static_cast<long>(n) - 1 - 2 * static_cast<long>(l));
  }
  for (std::size_t l = 1; l < n; ++l) {
    auto prod = static_cast<std::int64_t>(l * (n - l));
    TowerElement d = TowerElement::radical(prod, Gaussian::i());
    m(l - 1, l) = d;
    m(l, l - 1) = d;
  }
  return m;
}

std::pair<TMatrix, TMatrix> materialize_pair_tower(const SummandDescriptor& d) {
  validate(d);
  using T = TowerElement;
  const T one(1);
  const T zero(0);
  const std::size_t n = d.n;
  const T lambda(d.lambda);
  auto constant = [](const T& v) { return [v](std::size_t) { return v; }; };
  auto alt = [](const T& e, const T& o) { return [e, o](std::size_t i) { return alternating(i, e, o); }; };
  switch (d.family) {
    case Family::SSS1N:
      return {tridiagonal<T>(n, zero, alt(one, zero), alt(one, zero)),
              tridiagonal<T>(n, T(d.eps), alt(lambda, one), alt(lambda, one))};
    case Family::SS2N:
      return {tridiagonal<T>(n, one, alt(zero, one), alt(zero, one)),
              tridiagonal<T>(n, lambda, alt(one, lambda), alt(one, lambda))};
    case Family::LYG: {
      TMatrix b = build_N(n);
      for (std::size_t i = 0; i < n; ++i) b(i, i) += lambda;
      return {TMatrix::identity(n), b};
    }
    case Family::NN_IDENT:
      return {build_N(n), TMatrix::identity(n)};
    case Family::SSNEW:
      return {tridiagonal<T>(n, zero, alt(one, zero), alt(one, zero)),
              tridiagonal<T>(n, zero, alt(zero, one), alt(zero, one))};
    case Family::SC1:
      return {tridiagonal<T>(n, zero, constant(one), constant(one)),
              tridiagonal<T>(n, zero, constant(lambda), constant(-lambda))};
    case Family::SC2:
      return {tridiagonal<T>(n, T(d.eps), alt(zero, one), alt(zero, one)),
              tridiagonal<T>(n, zero, alt(one, zero), alt(-one, zero))};
    case Family::SC3:
      return {tridiagonal<T>(n, zero, alt(one, zero), alt(one, zero)),
              tridiagonal<T>(n, zero, alt(zero, one), alt(zero, -one))};
    case Family::CC1:
      return {tridiagonal<T>(n, zero, alt(one, zero), alt(-one, zero)),
              tridiagonal<T>(n, zero, alt(lambda, one), alt(-lambda, -one))};
    case Family::CC23:
      return {tridiagonal<T>(n, zero, alt(zero, one), alt(zero, -one)),
              tridiagonal<T>(n, zero, alt(one, zero), alt(-one, zero))};
    case Family::HE1: {
      T mu(signed_value(d.mu, odd(n) ? d.sign : SignState::Plus));
      T mubar = conjugate(mu);
      return {tridiagonal<T>(n, zero, constant(one), constant(one)),
              tridiagonal<T>(n, zero, constant(mu), constant(mubar))};
    }
    case Family::HE2: {
      auto [a, b] = he2_coefficients(d);
      return {tridiagonal<T>(n, a, alt(b, a), alt(b, a)), tridiagonal<T>(n, b, alt(-a, b), alt(-a, b))};
    }
    default:
      throw PreconditionViolation(family_name(d.family) + " is a single-matrix family");
  }
}

bool needs_tower(const SummandDescriptor& d) {
  switch (d.family) {
    case Family::LYG:
    case Family::NN_IDENT:
      return d.n >= 3;
    case Family::HE2:
      return !d.c_infinite && !rational_sqrt(Rational(1) + d.c * d.c);
    default:
      return false;
  }
}

std::pair<GMatrix, GMatrix> materialize_pair(const SummandDescriptor& d) {
  auto [a, b] = materialize_pair_tower(d);
  auto ga = to_gaussian(a);
  auto gb = to_gaussian(b);
  if (!ga || !gb) {
    throw FieldPromotionRequired(to_string(d) + " has entries outside Q(i); materialize over the radical tower");
  }
  return {*ga, *gb};
}

GMatrix materialize_sum(const std::vector<SummandDescriptor>& ds) {
  GMatrix out;
  for (const auto& d : ds) out = direct_sum(out, materialize(d));
  return out;
}

std::pair<TMatrix, TMatrix> materialize_pair_sum_tower(const std::vector<SummandDescriptor>& ds) {
  TMatrix a;
  TMatrix b;
  for (const auto& d : ds) {
    auto [x, y] = materialize_pair_tower(d);
    a = direct_sum(a, x);
    b = direct_sum(b, y);
  }
  return {a, b};
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> p_transform_orders(std::size_t n) {
  if (n == 0) throw PreconditionViolation("p_transform needs n >= 1");
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  const long k = static_cast<long>(n / 2);
  // 1-based orders from the construction, stored 0-based.
  auto run = [](std::vector<std::size_t>& out, long from, long to, long step) {
    for (long v = from; step > 0 ? v <= to : v >= to; v += step) out.push_back(static_cast<std::size_t>(v - 1));
  };
  if (odd(n)) {
    run(rows, 2 * k, 2, -2);
    run(rows, 1, 2 * k + 1, 2);
    run(cols, 2 * k + 1, 1, -2);
    run(cols, 2, 2 * k, 2);
  } else {
    run(rows, 2 * k - 1, 1, -2);
    run(rows, 2, 2 * k, 2);
    run(cols, 2 * k, 2, -2);
    run(cols, 1, 2 * k - 1, 2);
  }
  return {rows, cols};
}

template <class T>
Matrix<T> p_transform(const Matrix<T>& a) {
  if (!a.is_square() || a.rows() == 0) throw ShapeError("p_transform needs a nonempty square matrix");
  if (!is_tridiagonal(a)) throw StructureError("p_transform needs a tridiagonal matrix");
  for (std::size_t i = 1; i < a.rows(); ++i) {
    if (!a(i, i).is_zero()) throw StructureError("p_transform needs a zero diagonal below the first entry");
  }
  auto [rows, cols] = p_transform_orders(a.rows());
  return permute_cols(permute_rows(a, rows), cols);
}

template <class T>
std::pair<Matrix<T>, Matrix<T>> sym_skew_split(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("sym_skew_split needs a square matrix");
  T half(Gaussian::from_fraction(1, 2));
  Matrix<T> at = a.transpose();
  return {(a + at) * half, (a - at) * half};
}

template <class T>
std::pair<Matrix<T>, Matrix<T>> cartesian_split(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("cartesian_split needs a square matrix");
  T half(Gaussian::from_fraction(1, 2));
  T ihalf(Gaussian(0, Rational(1, 2)));
  Matrix<T> as = a.conjugate_transpose();
  return {(a + as) * half, (as - a) * ihalf};
}

template Matrix<Gaussian> p_transform<Gaussian>(const Matrix<Gaussian>&);
template Matrix<TowerElement> p_transform<TowerElement>(const Matrix<TowerElement>&);
template std::pair<GMatrix, GMatrix> sym_skew_split<Gaussian>(const GMatrix&);
template std::pair<TMatrix, TMatrix> sym_skew_split<TowerElement>(const TMatrix&);
template std::pair<GMatrix, GMatrix> cartesian_split<Gaussian>(const GMatrix&);
template std::pair<TMatrix, TMatrix> cartesian_split<TowerElement>(const TMatrix&);

Gaussian cayley(const Gaussian& x) {
  Gaussian den = Gaussian(1) + x;
  if (den.is_zero()) throw DivisionByZero("(1 - x)/(1 + x) has a pole at x = -1");
  return (Gaussian(1) - x) / den;
}

Gaussian mu_from_lambda(const Gaussian& lambda) {
  Gaussian lb = conjugate(lambda);
  Gaussian den = lb + Gaussian(1);
  if (den.is_zero()) throw DivisionByZero("mu_from_lambda has a pole at conj(lambda) = -1");
  return (lb - Gaussian(1)) / den * Gaussian::i();
}

Gaussian lambda_from_mu(const Gaussian& mu) {
  Gaussian mb = conjugate(mu);
  Gaussian den = Gaussian::i() + mb;
  if (den.is_zero()) throw DivisionByZero("lambda_from_mu has a pole at conj(mu) = -i");
  return (Gaussian::i() - mb) / den;
}

}  // namespace tricanon
