#include "tricanon/random.hpp"

#include <cstdlib>
#include <type_traits>

#include "tricanon/errors.hpp"

namespace tricanon {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <class V>
const typename V::value_type& pick(const V& v, Rng& rng) {
  return v[uniform(rng, 0, v.size() - 1)];
}

const std::vector<Gaussian>& scalar_samples() {
  static const std::vector<Gaussian> s{
      Gaussian(0),       Gaussian(1),          Gaussian(-1),
      Gaussian(2),       Gaussian(-3),         Gaussian::from_fraction(1, 2),
      Gaussian::from_fraction(-2, 3),          Gaussian::i(),
      -Gaussian::i(),    Gaussian(1, 1),       Gaussian(Rational(-1, 2), Rational(2)),
      Gaussian(Rational(3, 5), Rational(4, 5)), Gaussian(Rational(-5, 13), Rational(12, 13)),
  };
  return s;
}

const std::vector<Family>& families_of(Relation r) {
  static const std::vector<Family> congruence{Family::CM1, Family::CM2, Family::CM3};
  static const std::vector<Family> star{Family::CMI1, Family::CMI2};
  static const std::vector<Family> sym{Family::SSS1N, Family::SS2N};
  static const std::vector<Family> second{Family::LYG, Family::NN_IDENT, Family::SSNEW};
  static const std::vector<Family> symskew{Family::SC1, Family::SC2, Family::SC3};
  static const std::vector<Family> skew{Family::CC1, Family::CC23};
  static const std::vector<Family> herm{Family::HE1, Family::HE2};
  switch (r) {
    case Relation::Congruence:
      return congruence;
    case Relation::Star:
      return star;
    case Relation::SymSym:
      return sym;
    case Relation::SymSymSecond:
      return second;
    case Relation::SymSkew:
      return symskew;
    case Relation::SkewSkew:
      return skew;
    case Relation::Hermitian:
      return herm;
  }
  throw Error("unknown relation");
}

SummandDescriptor candidate(Family f, std::size_t n, Rng& rng) {
  const Gaussian& l = pick(scalar_samples(), rng);
  int eps = static_cast<int>(uniform(rng, 0, 1));
  SignState sign = uniform(rng, 0, 1) == 0 ? SignState::Plus : SignState::Minus;
  switch (f) {
    case Family::CM1:
      return make_cm1(n, l);
    case Family::CM2:
      return make_cm2(n, eps);
    case Family::CM3:
      return make_cm3(n);
    case Family::CMI1:
      return make_cmi1(n, l);
    case Family::CMI2:
      return make_cmi2(n, l, sign);
    case Family::SSS1N:
      return make_sss1n(n, eps, l);
    case Family::SS2N:
      return make_ss2n(n, l);
    case Family::LYG:
      return make_lyg(n, l);
    case Family::NN_IDENT:
      return make_nn_ident(n);
    case Family::SSNEW:
      return make_ssnew(n);
    case Family::SC1:
      return make_sc1(n, l);
    case Family::SC2:
      return make_sc2(n, eps);
    case Family::SC3:
      return make_sc3(n);
    case Family::CC1:
      return make_cc1(n, l);
    case Family::CC23:
      return make_cc23(n);
    case Family::HE1:
      return make_he1(n, n % 2 == 1 ? Gaussian::i() : l, sign);
    case Family::HE2: {
      static const std::vector<Rational> cs{Rational(0), Rational(2), Rational(-1, 2), Rational(3, 4),
                                            Rational(-12, 5)};
      if (uniform(rng, 0, 5) == 0) return make_he2_infinite(n, sign);
      return make_he2(n, pick(cs, rng), sign);
    }
  }
  throw Error("unknown family");
}

template <class T>
std::vector<SummandDescriptor> canon_of_transformed(Relation relation, const std::vector<SummandDescriptor>& ds,
                                                    const Matrix<T>& s) {
  Matrix<T> st = s.transpose();
  Matrix<T> sh = s.conjugate_transpose();
  if (relation == Relation::Congruence || relation == Relation::Star) {
    Matrix<T> d;
    if constexpr (std::is_same_v<T, Gaussian>) {
      d = materialize_sum(ds);
    } else {
      d = to_tower(materialize_sum(ds));
    }
    const Matrix<T>& left = relation == Relation::Star ? sh : st;
    return canonicalize(relation, Matrix<T>(left * d * s), Matrix<T>()).summands;
  }
  auto [a, b] = materialize_pair_sum_tower(ds);
  Matrix<T> ta;
  Matrix<T> tb;
  if constexpr (std::is_same_v<T, Gaussian>) {
    ta = *to_gaussian(a);
    tb = *to_gaussian(b);
  } else {
    ta = a;
    tb = b;
  }
  const Matrix<T>& left = relation == Relation::Hermitian ? sh : st;
  return canonicalize(relation, Matrix<T>(left * ta * s), Matrix<T>(left * tb * s)).summands;
}

}  // namespace

Rng make_rng(std::uint64_t fallback) {
  if (const char* env = std::getenv("TRICANON_SEED")) {
    try {
      return Rng(std::stoull(env));
    } catch (const std::exception&) {
      throw ParseError(std::string("TRICANON_SEED is not an integer: ") + env);
    }
  }
  return Rng(fallback);
}

SummandDescriptor random_summand(Relation relation, std::size_t max_size, Rng& rng) {
  const auto& fams = families_of(relation);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SummandDescriptor d = candidate(pick(fams, rng), uniform(rng, 1, max_size), rng);
    try {
      validate(d);
      return d;
    } catch (const InvariantViolation&) {
    }
  }
  throw Error("no valid summand found for " + relation_name(relation));
}

std::vector<SummandDescriptor> random_decomposition(Relation relation, Rng& rng, std::size_t max_total,
                                                    std::size_t max_count) {
  std::size_t count = uniform(rng, 1, max_count);
  std::vector<SummandDescriptor> out;
  std::size_t total = 0;
  for (std::size_t k = 0; k < count && total < max_total; ++k) {
    SummandDescriptor d = random_summand(relation, std::min<std::size_t>(max_total - total, 5), rng);
    total += d.n;
    out.push_back(d);
  }
  sort_descriptors(out);
  return out;
}

GMatrix random_nonsingular(std::size_t n, Rng& rng, bool complex) {
  std::uniform_int_distribution<long> entry(-2, 2);
  while (true) {
    GMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s(i, j) = Gaussian(entry(rng), complex ? entry(rng) : 0);
    }
    if (is_nonsingular(s)) return s;
  }
}

RoundTripResult round_trip(Relation relation, const std::vector<SummandDescriptor>& summands, const GMatrix& s) {
  RoundTripResult out;
  out.expected = summands;
  sort_descriptors(out.expected);
  bool tower = false;
  for (const auto& d : summands) tower = tower || (is_pair_family(d.family) && needs_tower(d));
  try {
    out.actual = tower ? canon_of_transformed<TowerElement>(relation, summands, to_tower(s))
                       : canon_of_transformed<Gaussian>(relation, summands, s);
    out.ok = same_class(out.expected, out.actual);
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace tricanon
