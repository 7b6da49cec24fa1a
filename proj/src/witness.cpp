#include "tricanon/witness.hpp"

#include <algorithm>

#include "tricanon/errors.hpp"
#include "tricanon/pencil.hpp"

namespace tricanon {

namespace {

Gaussian coefficient(const TruncatedSeries& s, std::size_t j) { return j < s.size() ? s[j] : Gaussian(0); }

bool symmetric_or_skew(const GMatrix& x) { return is_symmetric(x) || is_skew_symmetric(x); }

void require_same_symmetry(const GMatrix& x, const GMatrix& y, const char* name) {
  bool sym = is_symmetric(x) && is_symmetric(y);
  bool skew = is_skew_symmetric(x) && is_skew_symmetric(y);
  if (!sym && !skew) {
    throw PreconditionViolation(std::string(name) + " and its image must both be symmetric or both skew-symmetric");
  }
}

}  // namespace

TruncatedSeries series_sqrt(const Gaussian& lambda, std::size_t k) {
  if (k == 0) throw PreconditionViolation("series length must be positive");
  if (lambda.is_zero()) throw PreconditionViolation("series square root of x is not a power series");
  auto root = sqrt_in_field(lambda);
  if (!root) throw SqrtNotInField(to_string(lambda));
  TruncatedSeries c(k);
  c[0] = *root;
  Gaussian inv = (Gaussian(2) * c[0]).inverse();
  for (std::size_t m = 1; m < k; ++m) {
    Gaussian acc = m == 1 ? Gaussian(1) : Gaussian(0);
    for (std::size_t j = 1; j < m; ++j) acc -= c[j] * c[m - j];
    c[m] = acc * inv;
  }
  return c;
}

TruncatedSeries series_solve_tau(const Gaussian& lambda, const Poly<Gaussian>& phi, const TruncatedSeries& psi,
                                 std::size_t k) {
  if (k == 0) throw PreconditionViolation("series length must be positive");
  Poly<Gaussian> shifted = taylor_shift(phi, lambda);
  if (shifted.empty() || shifted[0].is_zero()) {
    throw PreconditionViolation("phi(lambda + x) has zero constant term");
  }
  Gaussian inv = shifted[0].inverse();
  TruncatedSeries tau(k);
  for (std::size_t m = 0; m < k; ++m) {
    Gaussian acc = coefficient(psi, m);
    for (std::size_t j = 1; j <= m; ++j) acc -= coefficient(shifted, j) * tau[m - j];
    tau[m] = acc * inv;
  }
  return tau;
}

MatrixSqrt matrix_sqrt_poly(const GMatrix& m) {
  if (!m.is_square()) throw ShapeError("matrix square root of a non-square matrix");
  if (!is_nonsingular(m)) throw SingularMatrixError("matrix square root needs a nonsingular matrix");
  JordanForm<Gaussian> jf = jordan_form(m);
  // eigenvalue -> largest Jordan block, in eigenvalue order
  std::vector<std::pair<Gaussian, std::size_t>> index;
  for (const auto& [lambda, size] : jf.blocks) {
    auto it = std::find_if(index.begin(), index.end(), [&](const auto& e) { return e.first == lambda; });
    if (it == index.end()) {
      index.emplace_back(lambda, size);
    } else {
      it->second = std::max(it->second, size);
    }
  }
  Poly<Gaussian> f;
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto& [lambda, mult] = index[i];
    Poly<Gaussian> phi{Gaussian(1)};
    for (std::size_t j = 0; j < index.size(); ++j) {
      if (j == i) continue;
      Poly<Gaussian> lin{-index[j].first, Gaussian(1)};
      for (std::size_t e = 0; e < index[j].second; ++e) phi = poly_mul(phi, lin);
    }
    TruncatedSeries psi = series_sqrt(lambda, mult);
    TruncatedSeries tau = series_solve_tau(lambda, phi, psi, mult);
    // tau(x - lambda)
    Poly<Gaussian> shifted = taylor_shift(Poly<Gaussian>(tau.begin(), tau.end()), -lambda);
    f = poly_add(f, poly_mul(phi, shifted));
  }
  MatrixSqrt out;
  out.f = f;
  out.fM = evaluate_polynomial(f, m);
  if (!(out.fM * out.fM == m)) throw InvariantViolation("f(M)^2 differs from M");
  return out;
}

CongruenceWitness upgrade_to_congruence(const GMatrix& a, const GMatrix& b, const GMatrix& a2, const GMatrix& b2,
                                        const GMatrix& r, const GMatrix& s) {
  for (const GMatrix* x : {&a, &b, &a2, &b2, &r, &s}) {
    if (!x->is_square() || x->rows() != a.rows()) throw ShapeError("witness inputs must be square of one size");
  }
  if (!symmetric_or_skew(a) || !symmetric_or_skew(b)) {
    throw PreconditionViolation("pair members must be symmetric or skew-symmetric");
  }
  require_same_symmetry(a, a2, "A");
  require_same_symmetry(b, b2, "B");
  if (!is_nonsingular(r) || !is_nonsingular(s)) throw PreconditionViolation("R and S must be nonsingular");
  GMatrix rt = r.transpose();
  if (!(rt * a * s == a2) || !(rt * b * s == b2)) {
    throw PreconditionViolation("R^T A S = A' and R^T B S = B' must hold");
  }
  CongruenceWitness out;
  out.M = s * inverse(r);
  out.sqrt = matrix_sqrt_poly(out.M);
  out.N = out.sqrt.fM * r;
  GMatrix nt = out.N.transpose();
  if (!(nt * a * out.N == a2) || !(nt * b * out.N == b2)) {
    throw InvariantViolation("N^T A N or N^T B N differs from the target pair");
  }
  return out;
}

PairWitness equivalence_witness(const GMatrix& a, const GMatrix& b, const GMatrix& a2, const GMatrix& b2) {
  KroneckerForm<Gaussian> k1 = kronecker_decompose(a, b);
  KroneckerForm<Gaussian> k2 = kronecker_decompose(a2, b2);
  if (k1.blocks != k2.blocks) throw NotEquivalent("the pairs have different Kronecker block multisets");
  // R2^{-1} R1 (A, B) S1 S2^{-1} = (A', B')
  PairWitness out;
  out.R = (inverse(k2.R) * k1.R).transpose();
  out.S = k1.S * inverse(k2.S);
  return out;
}

}  // namespace tricanon
