#pragma once

// Dense row-major matrices over an exact scalar domain (Gaussian or TowerElement).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricanon/errors.hpp"
#include "tricanon/gaussian.hpp"
#include "tricanon/tower.hpp"

namespace tricanon {

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw ShapeError("entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<T>& data() const noexcept { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
  friend Matrix operator*(const T& c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("inner dimensions differ in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  Matrix conjugated() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = conjugate(x);
    return out;
  }

  Matrix conjugate_transpose() const { return conjugated().transpose(); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    }
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }

  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using GMatrix = Matrix<Gaussian>;
using TMatrix = Matrix<TowerElement>;

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  Matrix<T> out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
  Matrix<T> out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

/// Row i of the result is row perm[i] of a.
template <class T>
Matrix<T> permute_rows(const Matrix<T>& a, const std::vector<std::size_t>& perm) {
  if (perm.size() != a.rows()) throw ShapeError("row permutation has wrong length");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(perm[i], j);
  }
  return out;
}

/// Column j of the result is column perm[j] of a.
template <class T>
Matrix<T> permute_cols(const Matrix<T>& a, const std::vector<std::size_t>& perm) {
  if (perm.size() != a.cols()) throw ShapeError("column permutation has wrong length");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, perm[j]);
  }
  return out;
}

/// P with (P*A) == permute_rows(A, perm).
template <class T>
Matrix<T> row_permutation_matrix(const std::vector<std::size_t>& perm) {
  Matrix<T> p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = T(1);
  return p;
}

/// Reduced row echelon form in place; returns pivot columns.
/// Pivots on the first nonzero entry in column order.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    T inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      T f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  // Forward elimination only.
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    T inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      T f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    ++r;
  }
  return r;
}

/// Columns form a basis of the right kernel.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a) {
  Matrix<T> r = a;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Matrix<T> out(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    out(free[f], f) = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], f) = -r(i, free[f]);
  }
  return out;
}

/// Some X with A X = B, or nullopt when the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
  Matrix<T> aug = hstack(a, b);
  auto pivots = rref_in_place(aug);
  for (auto p : pivots) {
    if (p >= a.cols()) return std::nullopt;
  }
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  }
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  std::size_t n = a.rows();
  Matrix<T> aug = hstack(a, Matrix<T>::identity(n));
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) {
    throw SingularMatrixError("matrix is singular");
  }
  return aug.block(0, n, n, n);
}

template <class T>
bool is_nonsingular(const Matrix<T>& a) {
  return a.is_square() && rank(a) == a.rows();
}

/// Extends the independent columns of `basis` to a basis of the whole space
/// using standard unit vectors; returns only the added columns.
template <class T>
Matrix<T> complement_columns(const Matrix<T>& basis) {
  std::size_t n = basis.rows();
  Matrix<T> cur = basis;
  std::size_t r = rank(cur);
  std::vector<std::size_t> added;
  for (std::size_t e = 0; e < n && r < n; ++e) {
    Matrix<T> unit(n, 1);
    unit(e, 0) = T(1);
    Matrix<T> trial = hstack(cur, unit);
    std::size_t tr = rank(trial);
    if (tr > r) {
      cur = std::move(trial);
      r = tr;
      added.push_back(e);
    }
  }
  Matrix<T> out(n, added.size());
  for (std::size_t k = 0; k < added.size(); ++k) out(added[k], k) = T(1);
  return out;
}

/// Columns of `vectors` that increase the rank of `base`, chosen greedily.
template <class T>
Matrix<T> extend_columns(const Matrix<T>& base, const Matrix<T>& vectors) {
  Matrix<T> cur = base;
  std::size_t r = rank(cur);
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    Matrix<T> trial = hstack(cur, vectors.column(j));
    std::size_t tr = rank(trial);
    if (tr > r) {
      cur = std::move(trial);
      r = tr;
      chosen.push_back(j);
    }
  }
  Matrix<T> out(vectors.rows(), chosen.size());
  for (std::size_t k = 0; k < chosen.size(); ++k) out.set_block(0, k, vectors.column(chosen[k]));
  return out;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, std::size_t e) {
  if (!a.is_square()) throw ShapeError("power of a non-square matrix");
  Matrix<T> out = Matrix<T>::identity(a.rows());
  for (std::size_t k = 0; k < e; ++k) out = out * a;
  return out;
}

/// p(A) for coefficients listed from the constant term upward.
template <class T>
Matrix<T> evaluate_polynomial(const std::vector<T>& coeffs, const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("polynomial of a non-square matrix");
  std::size_t n = a.rows();
  Matrix<T> out(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out = out * a;
    for (std::size_t i = 0; i < n; ++i) out(i, i) += *it;
  }
  return out;
}

// Structural predicates.

template <class T>
bool is_symmetric(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("symmetry test on a non-square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (!(a(i, j) == a(j, i))) return false;
    }
  }
  return true;
}

template <class T>
bool is_skew_symmetric(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("skew-symmetry test on a non-square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (!(a(i, j) == -a(j, i))) return false;
    }
  }
  return true;
}

template <class T>
bool is_hermitian(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("Hermitian test on a non-square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (!(a(i, j) == conjugate(a(j, i)))) return false;
    }
  }
  return true;
}

template <class T>
bool is_tridiagonal(const Matrix<T>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::size_t d = i > j ? i - j : j - i;
      if (d > 1 && !a(i, j).is_zero()) return false;
    }
  }
  return true;
}

// Builders.

template <class T = Gaussian>
Matrix<T> build_jordan(std::size_t n, const T& lambda) {
  if (n == 0) throw PreconditionViolation("Jordan block of size 0");
  Matrix<T> j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i, i + 1) = T(1);
  }
  return j;
}

/// (F_n, G_n): F_n = [I_n | 0], G_n = [0 | I_n], both n x (n+1).
template <class T = Gaussian>
std::pair<Matrix<T>, Matrix<T>> build_FG(std::size_t n) {
  Matrix<T> f(n, n + 1);
  Matrix<T> g(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    f(i, i) = T(1);
    g(i, i + 1) = T(1);
  }
  return {f, g};
}

enum class Sigma { Plus, Minus };

/// Direct sum of k copies of [[0,1],[s,0]] with s = +1 or -1.
template <class T = Gaussian>
Matrix<T> build_M(Sigma sign, std::size_t k) {
  Matrix<T> m(2 * k, 2 * k);
  for (std::size_t b = 0; b < k; ++b) {
    m(2 * b, 2 * b + 1) = T(1);
    m(2 * b + 1, 2 * b) = T(sign == Sigma::Plus ? 1 : -1);
  }
  return m;
}

template <class T>
Matrix<T> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<T>(rows, cols);
}

// Field conversions.

inline TMatrix to_tower(const GMatrix& a) {
  TMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = TowerElement(a(i, j));
  }
  return out;
}

/// The same matrix over Q(i) when no entry carries a radical.
inline std::optional<GMatrix> to_gaussian(const TMatrix& a) {
  GMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto g = a(i, j).to_gaussian();
      if (!g) return std::nullopt;
      out(i, j) = *g;
    }
  }
  return out;
}

template <class T>
std::string to_string(const Matrix<T>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ", ";
      out += to_string(a(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace tricanon
