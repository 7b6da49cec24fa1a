#include <doctest.h>

#include "oracle.hpp"
#include "tricanon/canon.hpp"
#include "tricanon/errors.hpp"
#include "tricanon/random.hpp"

using namespace tricanon;

namespace {

const Gaussian I = Gaussian::i();
using B = PencilBlock;
using Ds = std::vector<SummandDescriptor>;

Ds congruence(const GMatrix& a) { return canon_congruence(a).summands; }
Ds star(const GMatrix& a) { return canon_star_congruence(a).summands; }

}  // namespace

TEST_CASE("congruence examples") {
  CHECK(congruence(GMatrix{{1}}) == Ds{make_cm2(1, 1)});
  CHECK(congruence(GMatrix{{0, 1}, {-1, 0}}) == Ds{make_cm2(2, 0)});
  CHECK(congruence(GMatrix{{0, 1}, {2, 0}}) == Ds{make_cm1(2, Gaussian::from_fraction(1, 2))});
  CHECK(congruence(GMatrix{{0}}) == Ds{make_cm2(1, 0)});
  // the pencil (A^T, A) of [[0,1],[2,0]] has eigenvalues 2 and 1/2 by the determinant oracle
  GMatrix a{{0, 1}, {2, 0}};
  for (const auto& l : {Gaussian(2), Gaussian::from_fraction(1, 2)}) {
    CHECK(oracle::det(a - a.transpose() * l).is_zero());
  }
  CHECK(canon_congruence(a).blocks ==
        oracle::regular_blocks(a.transpose(), a, {Gaussian(2), Gaussian::from_fraction(1, 2)}));
}

TEST_CASE("*congruence examples") {
  CHECK(star(GMatrix{{1}}) == Ds{make_cmi2(1, Gaussian(1), SignState::Unknown)});
  CHECK(star(build_jordan<Gaussian>(2, Gaussian(0))) == Ds{make_cmi1(2, Gaussian(0))});
  CHECK(star(GMatrix{{0, 1}, {2, 0}}) == Ds{make_cmi1(2, Gaussian::from_fraction(1, 2))});
  auto d = canon_star_congruence(GMatrix{{1}});
  CHECK_FALSE(d.notes.empty());
  // nu = i has no square root in Q(i)
  CHECK_THROWS_AS(star(GMatrix{{Gaussian(1, 1)}}), EigenvalueOutsideField);
}

TEST_CASE("symmetric pair examples") {
  CHECK(canon_pair_sym_sym(GMatrix{{1}}, GMatrix{{5}}).summands == Ds{make_ss2n(1, Gaussian(5))});
  CHECK(canon_pair_sym_sym(GMatrix{{0, 1}, {1, 0}}, GMatrix{{1, 0}, {0, 0}}).summands ==
        Ds{make_sss1n(2, 1, Gaussian(0))});
  CHECK(canon_pair_sym_sym(GMatrix{{1}}, GMatrix{{5}}, true).summands == Ds{make_lyg(1, Gaussian(5))});
  CHECK(canon_pair_sym_sym(GMatrix{{0}}, GMatrix{{0}}, true).summands == Ds{make_ssnew(1)});
  CHECK_THROWS_AS(canon_pair_sym_sym(GMatrix{{0, 1}, {0, 0}}, GMatrix(2, 2)), StructureError);
}

TEST_CASE("symmetric/skew pair examples") {
  CHECK(canon_pair_sym_skew(GMatrix{{0, 1}, {1, 0}}, GMatrix{{0, 1}, {-1, 0}}).summands ==
        Ds{make_sc1(2, Gaussian(1))});
  CHECK(canon_pair_sym_skew(GMatrix{{1}}, GMatrix{{0}}).summands == Ds{make_sc2(1, 1)});
  CHECK(canon_pair_sym_skew(GMatrix{{0}}, GMatrix{{0}}).summands == Ds{make_sc2(1, 0)});
  CHECK_THROWS_AS(canon_pair_sym_skew(GMatrix{{1, 0}, {0, 1}}, GMatrix{{1, 0}, {0, 1}}), StructureError);
}

TEST_CASE("skew pair examples") {
  GMatrix m = build_M<Gaussian>(Sigma::Minus, 1);
  CHECK(canon_pair_skew_skew(m, GMatrix{{0, 7}, {-7, 0}}).summands == Ds{make_cc1(2, Gaussian(7))});
  CHECK(canon_pair_skew_skew(GMatrix(2, 2), m).summands == Ds{make_cc23(2)});
  CHECK(canon_pair_skew_skew(GMatrix(1, 1), GMatrix(1, 1)).summands == Ds{make_cc23(1)});
}

TEST_CASE("Hermitian pair examples") {
  CHECK(canon_pair_hermitian(GMatrix{{0, 1}, {1, 0}}, GMatrix{{0, I}, {-I, 0}}).summands == Ds{make_he1(2, I)});
  CHECK(canon_pair_hermitian(GMatrix{{Gaussian::from_fraction(3, 5)}}, GMatrix{{Gaussian::from_fraction(4, 5)}})
            .summands == Ds{make_he2(1, Rational(4, 3), SignState::Unknown)});
  CHECK(canon_pair_hermitian(GMatrix{{1}}, GMatrix{{0}}).summands == Ds{make_he2(1, Rational(0), SignState::Unknown)});
  CHECK(canon_pair_hermitian(GMatrix{{0}}, GMatrix{{1}}).summands == Ds{make_he2_infinite(1, SignState::Unknown)});
  CHECK_THROWS_AS(canon_pair_hermitian(GMatrix{{I}}, GMatrix{{0}}), StructureError);
}

TEST_CASE("table verification examples") {
  auto c1 = verify_table(make_cm1(2, Gaussian(2)));
  CHECK(c1.ok);
  CHECK(c1.actual == std::vector{B::finite(Gaussian::from_fraction(1, 2), 1), B::finite(Gaussian(2), 1)});
  auto c2 = verify_table(make_cmi2(3, Gaussian(1)));
  CHECK(c2.ok);
  CHECK(c2.actual == std::vector{B::finite(Gaussian(1), 3)});
  auto c3 = verify_table(make_sc3(4));
  CHECK(c3.ok);
  CHECK(c3.actual == std::vector{B::finite(Gaussian(0), 2), B::finite(Gaussian(0), 2)});
}

TEST_CASE("every table row up to size 6") {
  for (int f = 0; f <= static_cast<int>(Family::HE2); ++f) {
    for (const auto& d : table_samples(static_cast<Family>(f), 6)) {
      CAPTURE(to_string(d));
      CHECK(verify_table(d).ok);
    }
  }
}

TEST_CASE("table inversion is the inverse of the table") {
  // each sample alone canonicalizes to itself, through the predicted blocks
  for (int f = 0; f <= static_cast<int>(Family::HE2); ++f) {
    for (const auto& d : table_samples(static_cast<Family>(f), 6)) {
      CAPTURE(to_string(d));
      Relation r = relation_of(d.family);
      auto back = summands_from_blocks(r, predicted_blocks(d));
      CHECK(same_class(back, {d}));
      if (d.sign_determined() || !carries_sign(d)) {
        bool exact = r != Relation::Star && r != Relation::Hermitian;
        if (exact) CHECK(back == Ds{d});
      }
    }
  }
}

TEST_CASE("block patterns of distinct rows are disjoint") {
  for (int rel = 0; rel <= static_cast<int>(Relation::Hermitian); ++rel) {
    std::vector<std::pair<std::vector<PencilBlock>, SummandDescriptor>> rows;
    for (int f = 0; f <= static_cast<int>(Family::HE2); ++f) {
      if (relation_of(static_cast<Family>(f)) != static_cast<Relation>(rel)) continue;
      for (const auto& d : table_samples(static_cast<Family>(f), 6)) rows.emplace_back(predicted_blocks(d), d);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (rows[i].first == rows[j].first) {
          CAPTURE(to_string(rows[i].second));
          CAPTURE(to_string(rows[j].second));
          SummandDescriptor x = rows[i].second;
          SummandDescriptor y = rows[j].second;
          x.sign = y.sign = SignState::Unknown;
          CHECK(equal_modulo_sign(x, y));
        }
      }
    }
  }
}

TEST_CASE("idempotence and completeness") {
  Rng rng(99);
  for (int rel = 0; rel <= static_cast<int>(Relation::Hermitian); ++rel) {
    Relation r = static_cast<Relation>(rel);
    if (r == Relation::SymSymSecond) continue;
    for (int t = 0; t < 8; ++t) {
      auto ds = random_decomposition(r, rng, 8, 3);
      std::size_t n = 0;
      for (const auto& d : ds) n += d.n;
      auto res = round_trip(r, ds, GMatrix::identity(n));
      CAPTURE(relation_name(r));
      CHECK(res.error == "");
      CHECK(res.ok);
      std::size_t m = 0;
      for (const auto& d : res.actual) m += d.n;
      CHECK(m == n);
    }
  }
}

TEST_CASE("round trips under random congruence") {
  Rng rng(2024);
  for (int rel = 0; rel <= static_cast<int>(Relation::Hermitian); ++rel) {
    Relation r = static_cast<Relation>(rel);
    int trials = r == Relation::SymSymSecond ? 2 : 10;
    for (int t = 0; t < trials; ++t) {
      auto ds = r == Relation::SymSymSecond ? random_decomposition(r, rng, 5, 2) : random_decomposition(r, rng, 8, 3);
      std::size_t n = 0;
      for (const auto& d : ds) n += d.n;
      auto res = round_trip(r, ds, random_nonsingular(n, rng));
      CAPTURE(relation_name(r));
      CHECK(res.error == "");
      CHECK(res.ok);
    }
  }
}

TEST_CASE("sym/skew pairs and their congruence counterparts") {
  for (Family f : {Family::SC1, Family::SC2, Family::SC3}) {
    for (const auto& d : table_samples(f, 8)) {
      CAPTURE(to_string(d));
      auto [b, c] = materialize_pair(d);
      auto got = canon_congruence(GMatrix(b + c));
      CHECK(got.summands == Ds{congruence_counterpart(d)});
      CHECK(got.blocks == predicted_blocks(congruence_counterpart(d)));
    }
  }
  CHECK(congruence_counterpart(make_sc1(2, Gaussian(1))) == make_cm1(2, Gaussian(0)));
  CHECK_THROWS_AS(congruence_counterpart(make_cm3(4)), PreconditionViolation);
}

TEST_CASE("*congruence summands and their Hermitian counterparts") {
  for (Family f : {Family::CMI1, Family::CMI2}) {
    for (const auto& d : table_samples(f, 6)) {
      CAPTURE(to_string(d));
      auto [b, c] = cartesian_split(materialize(d));
      CHECK(same_class(canon_pair_hermitian(b, c).summands, {hermitian_counterpart(d)}));
    }
  }
  CHECK(hermitian_counterpart(make_cmi1(2, Gaussian(3).inverse())).mu == mu_from_lambda(Gaussian(3)));
}

TEST_CASE("malformed and incompatible block multisets") {
  CHECK_THROWS_AS(summands_from_blocks(Relation::Congruence, {B::finite(Gaussian(2), 1)}), MalformedPencil);
  CHECK_THROWS_AS(summands_from_blocks(Relation::Congruence, {B::right(1)}), MalformedPencil);
  CHECK_THROWS_AS(summands_from_blocks(Relation::SkewSkew, {B::finite(Gaussian(2), 1)}), PencilNotCompatible);
  CHECK_THROWS_AS(summands_from_blocks(Relation::SymSkew, {B::finite(Gaussian(2), 1)}), PencilNotCompatible);
  CHECK_THROWS_AS(summands_from_blocks(Relation::Hermitian, {B::finite(I, 1)}), PencilNotCompatible);
  CHECK_THROWS_AS(summands_from_blocks(Relation::SymSym, {B::left(2)}), MalformedPencil);
}
