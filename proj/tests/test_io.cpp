#include <doctest.h>

#include <json.hpp>

#include "tricanon/errors.hpp"
#include "tricanon/io.hpp"
#include "tricanon/random.hpp"

using namespace tricanon;

TEST_CASE("matrix files") {
  auto ms = parse_matrix_file("2 2\n0 1\n2 0\n---\n# comment\n2 2\n1 0 0 -1/2+i\n");
  REQUIRE(ms.size() == 2);
  CHECK(ms[0] == GMatrix{{0, 1}, {2, 0}});
  CHECK(ms[1] == GMatrix{{1, 0}, {0, Gaussian(Rational(-1, 2), Rational(1))}});
  CHECK(parse_matrix("1 3\n1 2 3") == GMatrix{{1, 2, 3}});
  CHECK(parse_matrix("0 0\n").rows() == 0);
  CHECK_THROWS_AS(parse_matrix("2\n1 2"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 x\n1 2"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n1"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 1\nfoo"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 1\n1\n---\n1 1\n1"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    std::vector<GMatrix> ms{random_nonsingular(1 + t % 4, rng), GMatrix(2, 3)};
    ms[0](0, 0) = Gaussian(Rational(-7, 3), Rational(5, 2));
    CHECK(parse_matrix_file(serialize_matrices(ms)) == ms);
  }
}

TEST_CASE("reports") {
  auto d = canon_pair_hermitian(GMatrix{{Gaussian::from_fraction(3, 5)}}, GMatrix{{Gaussian::from_fraction(4, 5)}});
  std::string text = format_report(d, true);
  CHECK(text.find("HE2(n=1, c=4/3, sign=?)") != std::string::npos);
  CHECK(text.find("FiniteEigen(4/3) size 1") != std::string::npos);
  CHECK(text.find("canonical form:") != std::string::npos);
  CHECK(parse_report_summands(text) == d.summands);
}

TEST_CASE("report descriptor lines round-trip and JSON agrees with text") {
  Rng rng(6);
  for (int rel = 0; rel <= static_cast<int>(Relation::Hermitian); ++rel) {
    Relation r = static_cast<Relation>(rel);
    if (r == Relation::SymSymSecond) continue;
    for (int t = 0; t < 4; ++t) {
      auto ds = random_decomposition(r, rng, 6, 3);
      bool tower = false;
      for (const auto& x : ds) tower = tower || (is_pair_family(x.family) && needs_tower(x));
      if (tower) continue;
      GMatrix a;
      GMatrix b;
      if (is_pair_family(ds.front().family)) {
        for (const auto& x : ds) {
          auto [p, q] = materialize_pair(x);
          a = direct_sum(a, p);
          b = direct_sum(b, q);
        }
      } else {
        a = materialize_sum(ds);
      }
      auto d = canonicalize(r, a, b);
      std::string text = format_report(d, false);
      CHECK(parse_report_summands(text) == d.summands);
      auto j = nlohmann::json::parse(format_report_json(d, true));
      REQUIRE(j["summands"].size() == d.summands.size());
      for (std::size_t k = 0; k < d.summands.size(); ++k) {
        CHECK(j["summands"][k]["text"].get<std::string>() == to_string(d.summands[k]));
      }
      CHECK(j["blocks"].size() == d.blocks.size());
      CHECK(j["relation"].get<std::string>() == relation_name(r));
    }
  }
}
