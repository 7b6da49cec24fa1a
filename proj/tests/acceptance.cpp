#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "tricanon/canon.hpp"
#include "tricanon/errors.hpp"
#include "tricanon/random.hpp"
#include "tricanon/witness.hpp"

using namespace tricanon;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

Outcome table_reproduction() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t rows = 0;
  for (int f = 0; f <= static_cast<int>(Family::HE2); ++f) {
    for (const auto& d : table_samples(static_cast<Family>(f), 9)) {
      ++rows;
      try {
        if (!verify_table(d).ok) fail(o, "mismatch at " + to_string(d));
      } catch (const std::exception& e) {
        fail(o, to_string(d) + ": " + e.what());
      }
    }
  }
  double s = seconds_since(t0);
  if (s >= 30) fail(o, "runtime " + fmt(s) + " over 30s");
  if (o.ok) o.detail = std::to_string(rows) + " table rows, 17 families, sizes <= 9, " + fmt(s);
  return o;
}

Outcome round_trips() {
  Outcome o;
  Rng rng = make_rng(20240601);
  std::string timing;
  for (Relation r : {Relation::Congruence, Relation::Star, Relation::SymSym, Relation::SymSkew, Relation::SkewSkew,
                     Relation::Hermitian}) {
    auto t0 = Clock::now();
    for (int t = 0; t < 100; ++t) {
      auto ds = random_decomposition(r, rng, 12, 4);
      std::size_t n = 0;
      for (const auto& d : ds) n += d.n;
      RoundTripResult res = round_trip(r, ds, random_nonsingular(n, rng));
      if (!res.ok) {
        std::string exp;
        for (const auto& d : ds) exp += " " + to_string(d);
        fail(o, relation_name(r) + " trial " + std::to_string(t) + " failed for" + exp +
                    (res.error.empty() ? "" : ": " + res.error));
      }
    }
    double s = seconds_since(t0);
    if (s >= 60) fail(o, relation_name(r) + " took " + fmt(s));
    timing += " " + relation_name(r) + "=" + fmt(s);
  }
  if (o.ok) o.detail = "6 relations x 100 trials;" + timing;
  return o;
}

// Symmetric or skew pair (A, B) with A nonsingular and A^{-1}B nilpotent.
std::pair<GMatrix, GMatrix> nilpotent_block(bool skew, std::size_t size, Rng& rng) {
  if (skew) return materialize_pair(make_cc1(2 * size, Gaussian(0)));
  switch (rng() % 3) {
    case 0:
      return materialize_pair(make_ss2n(2 * size - 1, Gaussian(0)));
    case 1:
      return materialize_pair(make_sss1n(2 * size, 1, Gaussian(0)));
    default:
      return {GMatrix{{Gaussian(static_cast<long>(1 + rng() % 3))}}, GMatrix{{0}}};
  }
}

Outcome witnesses() {
  Outcome o;
  Rng rng = make_rng(777);
  const std::vector<Gaussian> spectrum{Gaussian(1), Gaussian(4), Gaussian(-4), Gaussian(0, 2)};
  for (int t = 0; t < 50; ++t) {
    bool skew = t % 2 == 1;
    GMatrix a;
    GMatrix b;
    GMatrix m;
    std::size_t blocks = 1 + rng() % 3;
    for (std::size_t j = 0; j < blocks; ++j) {
      auto [aj, bj] = nilpotent_block(skew, 1 + rng() % 2, rng);
      GMatrix k = inverse(aj) * bj;
      Gaussian c = spectrum[rng() % spectrum.size()];
      Gaussian d(static_cast<long>(1 + rng() % 3));
      a = direct_sum(a, aj);
      b = direct_sum(b, bj);
      m = direct_sum(m, GMatrix(GMatrix::identity(aj.rows()) * c + k * d));
    }
    GMatrix t0 = random_nonsingular(a.rows(), rng);
    a = t0.transpose() * a * t0;
    b = t0.transpose() * b * t0;
    m = inverse(t0) * m * t0;
    GMatrix tt = random_nonsingular(a.rows(), rng);
    GMatrix r = tt;
    GMatrix s = m * tt;
    GMatrix a2 = r.transpose() * a * s;
    GMatrix b2 = r.transpose() * b * s;
    try {
      CongruenceWitness w = upgrade_to_congruence(a, b, a2, b2, r, s);
      GMatrix nt = w.N.transpose();
      if (!(nt * a * w.N == a2) || !(nt * b * w.N == b2)) fail(o, "congruence identity fails in trial " + std::to_string(t));
      if (!(w.sqrt.fM * w.sqrt.fM == w.M)) fail(o, "f(M)^2 != M in trial " + std::to_string(t));
    } catch (const std::exception& e) {
      fail(o, "trial " + std::to_string(t) + ": " + e.what());
    }
  }
  if (o.ok) o.detail = "50 pairs (25 symmetric, 25 skew), spectrum from {1, 4, -4, 2i}";
  return o;
}

Outcome sign_equivalences() {
  Outcome o;
  using B = PencilBlock;
  auto check = [&](const GMatrix& a, const GMatrix& b, std::vector<PencilBlock> want, const std::string& label) {
    sort_blocks(want);
    if (kronecker_decompose(a, b).blocks != want) fail(o, label + " blocks differ");
    if (kronecker_decompose(p_transform(a), p_transform(b)).blocks != want) fail(o, label + " differs after p_transform");
  };
  const GMatrix z1(1, 1);
  const GMatrix i1 = GMatrix::identity(1);
  std::size_t cases = 0;
  for (Sigma s : {Sigma::Plus, Sigma::Minus}) {
    for (Sigma t : {Sigma::Plus, Sigma::Minus}) {
      for (std::size_t k = 0; k <= 5; ++k) {
        std::string tag = std::string(s == Sigma::Plus ? "+" : "-") + (t == Sigma::Plus ? "+" : "-") + " k=" +
                          std::to_string(k);
        GMatrix ms = build_M<Gaussian>(s, k);
        GMatrix mt = build_M<Gaussian>(t, k);
        check(direct_sum(z1, ms), direct_sum(mt, z1), {B::right(k), B::left(k)}, "(2) " + tag);
        check(direct_sum(i1, ms), direct_sum(mt, z1), {B::finite(Gaussian(0), 2 * k + 1)}, "(3) " + tag);
        cases += 2;
        if (k == 0) continue;
        GMatrix ms1 = build_M<Gaussian>(s, k - 1);
        check(direct_sum(direct_sum(z1, ms1), z1), mt, {B::infinite(k), B::infinite(k)}, "(4) " + tag);
        check(direct_sum(direct_sum(i1, ms1), z1), mt, {B::infinite(2 * k)}, "(5) " + tag);
        cases += 2;
      }
    }
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    GMatrix a(n, n);
    a(0, 0) = Gaussian(-9);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      a(i, i + 1) = Gaussian(static_cast<long>(i + 2), 1);
      a(i + 1, i) = Gaussian(static_cast<long>(10 * i + 3));
    }
    auto [rows, cols] = p_transform_orders(n);
    GMatrix pa = row_permutation_matrix<Gaussian>(rows) * a * row_permutation_matrix<Gaussian>(cols).transpose();
    if (!(p_transform(a) == pa)) fail(o, "p_transform differs from permutation conjugation at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = std::to_string(cases) + " equivalences for k <= 5, all sign pairs; p_transform n <= 10";
  return o;
}

Outcome nilpotent_N() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    TMatrix m = build_N(n);
    TMatrix p = TMatrix::identity(n);
    for (std::size_t k = 0; k + 1 < n; ++k) p = p * m;
    bool ok = is_tridiagonal(m) && is_symmetric(m) && rank(m) == n - 1 && (p * m).is_zero() &&
              (n == 1 ? true : !p.is_zero());
    if (!ok) fail(o, "N_" + std::to_string(n) + " fails");
  }
  if (o.ok) o.detail = "n <= 8: tridiagonal, symmetric, rank n-1, nilpotency index n";
  return o;
}

Outcome dictionary_consistency() {
  Outcome o;
  std::size_t count = 0;
  for (Family f : {Family::SC1, Family::SC2, Family::SC3}) {
    for (const auto& d : table_samples(f, 8)) {
      auto [b, c] = materialize_pair(d);
      GMatrix a = b + c;
      auto got = canon_congruence(a);
      SummandDescriptor want = congruence_counterpart(d);
      if (got.summands != std::vector{want}) fail(o, to_string(d) + " does not give " + to_string(want));
      if (got.blocks != predicted_blocks(want)) fail(o, to_string(d) + " pencil differs from the table");
      if (!(a.transpose() == b - c)) fail(o, "(A^T, A) != (B - C, B + C) for " + to_string(d));
      if (d.family == Family::SC2 && d.eps == 1) {
        Gaussian l = d.n % 2 == 1 ? Gaussian(1) : Gaussian(-1);
        if (kronecker_decompose(GMatrix(b - c), GMatrix(b + c)).blocks != std::vector{PencilBlock::finite(l, d.n)}) {
          fail(o, "(A^T, A) of " + to_string(d) + " is not (I, J(+-1))");
        }
      }
      ++count;
    }
  }
  for (Family f : {Family::CMI1, Family::CMI2}) {
    for (const auto& d : table_samples(f, 6)) {
      auto [b, c] = cartesian_split(materialize(d));
      if (!same_class(canon_pair_hermitian(b, c).summands, {hermitian_counterpart(d)})) {
        fail(o, to_string(d) + " does not give " + to_string(hermitian_counterpart(d)));
      }
      ++count;
    }
  }
  if (!(mu_from_lambda(Gaussian(3)) == Gaussian(0, Rational(1, 2)))) fail(o, "mu(3) != i/2");
  if (o.ok) o.detail = std::to_string(count) + " summands; mu(3) = i/2";
  return o;
}

template <class E>
bool raises(const std::function<void()>& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

Outcome negative_paths() {
  Outcome o;
  try {
    auto d = canon_congruence(GMatrix{{0, 1}, {3, 0}});
    if (d.summands != std::vector{make_cm1(2, Gaussian::from_fraction(1, 3))}) fail(o, "[[0,1],[3,0]] misclassified");
  } catch (const std::exception& e) {
    fail(o, std::string("[[0,1],[3,0]] raised: ") + e.what());
  }
  if (!raises<EigenvalueOutsideField>([] { kronecker_decompose(GMatrix{{0, 1}, {-2, 0}}, GMatrix::identity(2)); })) {
    fail(o, "pencil with t^2 + 2 did not raise");
  }
  if (!raises<EigenvalueOutsideField>([] { canon_congruence(GMatrix{{1, 1}, {-1, 2}}); })) {
    fail(o, "congruence with 3t^2 - 2t + 3 did not raise");
  }
  if (!raises<SqrtNotInField>([] { matrix_sqrt_poly(GMatrix{{2}}); })) fail(o, "sqrt of [2] did not raise");
  if (!raises<SqrtNotInField>([] {
        upgrade_to_congruence(GMatrix{{1}}, GMatrix{{0}}, GMatrix{{2}}, GMatrix{{0}}, GMatrix{{1}}, GMatrix{{2}});
      })) {
    fail(o, "witness with M = [2] did not raise");
  }
  if (o.ok) o.detail = "rational eigenvalues accepted; t^2+2 and M=[2] rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction},
      {"round-trip canonicalization", round_trips},
      {"congruence witness", witnesses},
      {"permutation and M-sign equivalences", sign_equivalences},
      {"nilpotent N_n", nilpotent_N},
      {"dictionary consistency", dictionary_consistency},
      {"negative paths", negative_paths},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("uncaught: ") + e.what();
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
