#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tricanon/errors.hpp"
#include "tricanon/matrix.hpp"
#include "tricanon/polynomial.hpp"

using namespace tricanon;

namespace {

GMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, long range = 3) {
  std::uniform_int_distribution<long> e(-range, range);
  GMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Gaussian(e(rng), e(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("canonical building blocks") {
  CHECK(build_jordan<Gaussian>(2, Gaussian(5)) == GMatrix{{5, 1}, {0, 5}});
  CHECK(build_jordan<Gaussian>(1, Gaussian(0)) == GMatrix{{0}});
  CHECK_THROWS_AS(build_jordan<Gaussian>(0, Gaussian(1)), PreconditionViolation);
  auto [f1, g1] = build_FG<Gaussian>(1);
  CHECK(f1 == GMatrix{{1, 0}});
  CHECK(g1 == GMatrix{{0, 1}});
  auto [f2, g2] = build_FG<Gaussian>(2);
  CHECK(f2 == GMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(g2 == GMatrix{{0, 1, 0}, {0, 0, 1}});
  auto [f0, g0] = build_FG<Gaussian>(0);
  CHECK(f0.rows() == 0);
  CHECK(f0.cols() == 1);
  CHECK(build_M<Gaussian>(Sigma::Plus, 1) == GMatrix{{0, 1}, {1, 0}});
  CHECK(build_M<Gaussian>(Sigma::Minus, 1) == GMatrix{{0, 1}, {-1, 0}});
  CHECK(build_M<Gaussian>(Sigma::Plus, 2) == GMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(build_M<Gaussian>(Sigma::Plus, 0).rows() == 0);
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(is_symmetric(build_M<Gaussian>(Sigma::Plus, k)));
    CHECK_FALSE(is_skew_symmetric(build_M<Gaussian>(Sigma::Plus, k)));
    CHECK(is_skew_symmetric(build_M<Gaussian>(Sigma::Minus, k)));
    CHECK_FALSE(is_symmetric(build_M<Gaussian>(Sigma::Minus, k)));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(GMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(GMatrix(3, 3)) == 0);
  CHECK(rank(GMatrix::identity(4)) == 4);
  CHECK(rank(GMatrix{{Gaussian(1), Gaussian::i()}, {Gaussian::i(), Gaussian(-1)}}) == 1);
}

TEST_CASE("structural predicates") {
  CHECK(is_symmetric(GMatrix{{1, 2}, {2, 3}}));
  CHECK_FALSE(is_symmetric(GMatrix{{1, 2}, {3, 3}}));
  CHECK(is_skew_symmetric(GMatrix{{0, 2}, {-2, 0}}));
  CHECK_FALSE(is_skew_symmetric(GMatrix{{1, 2}, {-2, 0}}));
  GMatrix h{{Gaussian(1), Gaussian(2, 1)}, {Gaussian(2, -1), Gaussian(3)}};
  CHECK(is_hermitian(h));
  CHECK_FALSE(is_hermitian(GMatrix{{Gaussian::i()}}));
  CHECK(is_tridiagonal(GMatrix{{1, 2, 0}, {3, 4, 5}, {0, 6, 7}}));
  CHECK_FALSE(is_tridiagonal(GMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(GMatrix(2, 3) * GMatrix(2, 3), ShapeError);
  CHECK_THROWS_AS(inverse(GMatrix(2, 3)), ShapeError);
  CHECK_THROWS_AS(inverse(GMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
  CHECK_THROWS_AS(is_symmetric(GMatrix(1, 2)), ShapeError);
}

TEST_CASE("algebra properties against the oracle") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + t % 5;
    GMatrix a = random_matrix(n, n, rng);
    GMatrix b = random_matrix(n, n, rng);
    CHECK(rank(a) == oracle::rank(a));
    CHECK(a * b == oracle::mul(a, b));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK((a * b).conjugate_transpose() == b.conjugate_transpose() * a.conjugate_transpose());
    if (!oracle::det(a).is_zero()) {
      CHECK(is_nonsingular(a));
      CHECK(a * inverse(a) == GMatrix::identity(n));
    } else {
      CHECK_FALSE(is_nonsingular(a));
    }
    GMatrix k = nullspace(a);
    CHECK(k.cols() == n - oracle::rank(a));
    CHECK((a * k).is_zero());
    GMatrix ds = direct_sum(a, b);
    CHECK(ds.block(0, 0, n, n) == a);
    CHECK(ds.block(n, n, n, n) == b);
    CHECK(ds.block(0, n, n, n).is_zero());
  }
}

TEST_CASE("permutations") {
  GMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  std::vector<std::size_t> p{2, 0, 1};
  GMatrix rows = permute_rows(a, p);
  CHECK(rows == GMatrix{{7, 8, 9}, {1, 2, 3}, {4, 5, 6}});
  CHECK(row_permutation_matrix<Gaussian>(p) * a == rows);
  CHECK(permute_cols(a, p) == a * row_permutation_matrix<Gaussian>(p).transpose());
}

TEST_CASE("polynomials of matrices") {
  GMatrix m{{4, 1}, {0, 4}};
  // x^2 - 8x + 16 annihilates M
  CHECK(evaluate_polynomial<Gaussian>({Gaussian(16), Gaussian(-8), Gaussian(1)}, m).is_zero());
  CHECK(power(m, 0) == GMatrix::identity(2));
  CHECK(power(m, 3) == m * m * m);
  Poly<Gaussian> cp = charpoly(GMatrix{{0, 1}, {-2, 0}});
  CHECK(cp == Poly<Gaussian>{Gaussian(2), Gaussian(0), Gaussian(1)});
}

TEST_CASE("characteristic polynomial agrees with the cofactor determinant") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + t % 4;
    GMatrix a = random_matrix(n, n, rng, 2);
    Poly<Gaussian> cp = charpoly(a);
    for (long x = -2; x <= 2; ++x) {
      GMatrix shifted = GMatrix::identity(n) * Gaussian(x) - a;
      CHECK(poly_eval(cp, Gaussian(x)) == oracle::det(shifted));
    }
  }
}

TEST_CASE("roots over Q(i)") {
  // (t - 2)^2 (t + i)(t - 1/3)
  Poly<Gaussian> p{Gaussian(1)};
  for (const auto& r : {Gaussian(2), Gaussian(2), -Gaussian::i(), Gaussian::from_fraction(1, 3)}) {
    p = poly_mul(p, Poly<Gaussian>{-r, Gaussian(1)});
  }
  auto roots = roots_in_field(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].value == Gaussian::from_fraction(1, 3));
  CHECK(roots[1].value == -Gaussian::i());
  CHECK(roots[2].value == Gaussian(2));
  CHECK(roots[2].multiplicity == 2);
  CHECK_THROWS_AS(roots_in_field(Poly<Gaussian>{Gaussian(2), Gaussian(0), Gaussian(1)}), EigenvalueOutsideField);
  CHECK_THROWS_AS(roots_in_field(Poly<Gaussian>{Gaussian(-2), Gaussian(0), Gaussian(0), Gaussian(1)}),
                  EigenvalueOutsideField);
}

TEST_CASE("roots of random split polynomials") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> e(-6, 6);
  std::uniform_int_distribution<long> d(1, 4);
  for (int t = 0; t < 40; ++t) {
    std::vector<Gaussian> rs;
    Poly<Gaussian> p{Gaussian(1)};
    for (int k = 0; k < 1 + t % 5; ++k) {
      Gaussian r(Rational(e(rng), d(rng)), Rational(e(rng), d(rng)));
      rs.push_back(r);
      p = poly_mul(p, Poly<Gaussian>{-r, Gaussian(1)});
    }
    auto roots = roots_in_field(poly_scale(p, Gaussian(3, 1)));
    std::size_t total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      CHECK(std::count(rs.begin(), rs.end(), r.value) == static_cast<long>(r.multiplicity));
    }
    CHECK(total == rs.size());
  }
}

TEST_CASE("worked matrix examples") {
  CHECK(inverse(GMatrix{{1, 1}, {0, 1}}) == GMatrix{{1, -1}, {0, 1}});
  CHECK(evaluate_polynomial<Gaussian>({Gaussian(0), Gaussian(0), Gaussian(1)}, GMatrix{{0, 1}, {0, 0}}).is_zero());
}
