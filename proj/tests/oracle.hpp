#pragma once

// Independent reference computations for tests: cofactor determinants,
// a separate elimination for rank, and Jordan block sizes from rank drops.

#include <algorithm>
#include <map>
#include <vector>

#include "tricanon/gaussian.hpp"
#include "tricanon/matrix.hpp"
#include "tricanon/pencil.hpp"

namespace oracle {

using tricanon::Gaussian;
using tricanon::GMatrix;

inline Gaussian det(const GMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Gaussian(1);
  if (n == 1) return m(0, 0);
  Gaussian acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    GMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Gaussian term = m(0, j) * det(minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

inline std::size_t rank(std::vector<std::vector<Gaussian>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Gaussian f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const GMatrix& m) {
  std::vector<std::vector<Gaussian>> rows(m.rows(), std::vector<Gaussian>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rank(rows);
}

inline GMatrix mul(const GMatrix& a, const GMatrix& b) {
  GMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

/// Jordan block sizes of M at lambda from rank(M - lambda)^j.
inline std::vector<std::size_t> jordan_sizes(const GMatrix& m, const Gaussian& lambda) {
  const std::size_t n = m.rows();
  GMatrix shifted = m;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  std::vector<std::size_t> ranks{n};
  GMatrix power = GMatrix::identity(n);
  while (true) {
    power = mul(power, shifted);
    ranks.push_back(rank(power));
    if (ranks.back() == ranks[ranks.size() - 2]) break;
  }
  // at_least[j] = number of blocks of size >= j
  std::vector<std::size_t> sizes;
  for (std::size_t j = 1; j + 1 < ranks.size(); ++j) {
    std::size_t at_least = ranks[j - 1] - ranks[j];
    std::size_t at_least_next = ranks[j] - ranks[j + 1];
    for (std::size_t c = 0; c < at_least - at_least_next; ++c) sizes.push_back(j);
  }
  return sizes;
}

/// Kronecker blocks of a regular pencil (A, B) with A or B nonsingular, given
/// the candidate finite eigenvalues. Uses a cofactor inverse.
inline std::vector<tricanon::PencilBlock> regular_blocks(const GMatrix& a, const GMatrix& b,
                                                         const std::vector<Gaussian>& eigenvalues) {
  auto cofactor_inverse = [](const GMatrix& m) {
    const std::size_t n = m.rows();
    Gaussian d = det(m);
    GMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        GMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == i) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c == j) continue;
            minor(rr, cc++) = m(r, c);
          }
          ++rr;
        }
        Gaussian cof = n == 1 ? Gaussian(1) : det(minor);
        inv(j, i) = ((i + j) % 2 == 0 ? cof : -cof) / d;
      }
    }
    return inv;
  };
  std::vector<tricanon::PencilBlock> out;
  const std::size_t n = a.rows();
  if (!det(a).is_zero()) {
    GMatrix m = mul(cofactor_inverse(a), b);
    for (const auto& l : eigenvalues) {
      for (auto s : jordan_sizes(m, l)) out.push_back(tricanon::PencilBlock::finite(l, s));
    }
  } else {
    // B nonsingular: finite eigenvalues of B^{-1}A are 1/lambda, 0 is infinite
    GMatrix m = mul(cofactor_inverse(b), a);
    for (auto s : jordan_sizes(m, Gaussian(0))) out.push_back(tricanon::PencilBlock::infinite(s));
    for (const auto& l : eigenvalues) {
      if (l.is_zero()) continue;
      for (auto s : jordan_sizes(m, l.inverse())) out.push_back(tricanon::PencilBlock::finite(l, s));
    }
  }
  std::size_t total = 0;
  for (const auto& blk : out) total += blk.size;
  if (total != n) out.clear();
  tricanon::sort_blocks(out);
  return out;
}

}  // namespace oracle
