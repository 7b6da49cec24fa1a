#pragma once

// Upgrading an equivalence of symmetric or skew-symmetric pairs to a congruence
// through a polynomial square root of M = S R^{-1}.

#include <cstddef>
#include <vector>

#include "tricanon/gaussian.hpp"
#include "tricanon/matrix.hpp"
#include "tricanon/polynomial.hpp"

namespace tricanon {

/// Coefficients c_0..c_{k-1} of a polynomial modulo x^k.
using TruncatedSeries = std::vector<Gaussian>;

/// psi with psi(x)^2 = lambda + x mod x^k and psi(0) = sqrt_in_field(lambda).
TruncatedSeries series_sqrt(const Gaussian& lambda, std::size_t k);

/// tau with phi(lambda + x) tau(x) = psi(x) mod x^k, for a polynomial phi.
TruncatedSeries series_solve_tau(const Gaussian& lambda, const Poly<Gaussian>& phi, const TruncatedSeries& psi,
                                 std::size_t k);

struct MatrixSqrt {
  /// f with f(M)^2 = M.
  Poly<Gaussian> f;
  GMatrix fM;
};

MatrixSqrt matrix_sqrt_poly(const GMatrix& m);

struct CongruenceWitness {
  GMatrix N;
  GMatrix M;
  MatrixSqrt sqrt;
};

/// Given R^T A S = A', R^T B S = B' with A, A' (and B, B') both symmetric or both
/// skew-symmetric, returns N with N^T A N = A' and N^T B N = B'.
CongruenceWitness upgrade_to_congruence(const GMatrix& a, const GMatrix& b, const GMatrix& a2, const GMatrix& b2,
                                        const GMatrix& r, const GMatrix& s);

struct PairWitness {
  /// R^T A S = A', R^T B S = B'.
  GMatrix R;
  GMatrix S;
};

/// Equivalence witnesses between two pairs from their Kronecker decompositions.
/// Throws NotEquivalent when the block multisets differ.
PairWitness equivalence_witness(const GMatrix& a, const GMatrix& b, const GMatrix& a2, const GMatrix& b2);

}  // namespace tricanon
