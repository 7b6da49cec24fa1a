#pragma once

// Kronecker canonical form of a pencil (A, B) under (A, B) -> (RAS, RBS).

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tricanon/gaussian.hpp"
#include "tricanon/matrix.hpp"
#include "tricanon/polynomial.hpp"

namespace tricanon {

enum class BlockKind { RightSingular, LeftSingular, InfiniteEigen, FiniteEigen };

/// One Kronecker block:
///   FiniteEigen(l)  = (I_n, J_n(l))
///   InfiniteEigen   = (J_n(0), I_n)
///   RightSingular k = (F_k, G_k), k x (k+1)
///   LeftSingular k  = (F_k^T, G_k^T), (k+1) x k
struct PencilBlock {
  BlockKind kind = BlockKind::FiniteEigen;
  std::size_t size = 0;
  Gaussian lambda;

  static PencilBlock finite(const Gaussian& l, std::size_t n) { return {BlockKind::FiniteEigen, n, l}; }
  static PencilBlock infinite(std::size_t n) { return {BlockKind::InfiniteEigen, n, {}}; }
  static PencilBlock right(std::size_t k) { return {BlockKind::RightSingular, k, {}}; }
  static PencilBlock left(std::size_t k) { return {BlockKind::LeftSingular, k, {}}; }

  std::size_t rows() const noexcept { return kind == BlockKind::LeftSingular ? size + 1 : size; }
  std::size_t cols() const noexcept { return kind == BlockKind::RightSingular ? size + 1 : size; }

  friend bool operator==(const PencilBlock& a, const PencilBlock& b) {
    return a.kind == b.kind && a.size == b.size && a.lambda == b.lambda;
  }
};

/// Kind, then size, then eigenvalue order (|l|^2, re, im).
std::strong_ordering compare_blocks(const PencilBlock& a, const PencilBlock& b);
void sort_blocks(std::vector<PencilBlock>& blocks);

std::string kind_name(BlockKind kind);
/// e.g. "FiniteEigen(1/2) size 1", "RightSingular size 1".
std::string to_string(const PencilBlock& b);

template <class T>
std::pair<Matrix<T>, Matrix<T>> materialize_block(const PencilBlock& b);

/// Block-diagonal concatenation in the given order.
template <class T>
std::pair<Matrix<T>, Matrix<T>> materialize_blocks(const std::vector<PencilBlock>& blocks);

template <class T>
struct KroneckerForm {
  std::vector<PencilBlock> blocks;
  Matrix<T> R;
  Matrix<T> S;
};

/// Blocks sorted canonically, with R A S and R B S equal to the materialized blocks.
template <class T>
KroneckerForm<T> kronecker_decompose(const Matrix<T>& a, const Matrix<T>& b);

/// Roots of det(tB - A) on the regular part, from the Kronecker blocks.
template <class T>
std::vector<Root> regular_eigenvalues(const Matrix<T>& a, const Matrix<T>& b);

template <class T>
struct JordanForm {
  /// (eigenvalue, block size), sorted by eigenvalue order then size.
  std::vector<std::pair<Gaussian, std::size_t>> blocks;
  /// P^{-1} M P is the direct sum of the Jordan blocks.
  Matrix<T> P;
};

template <class T>
JordanForm<T> jordan_form(const Matrix<T>& m);

/// Normal rank of the pencil A - tB.
template <class T>
std::size_t normal_rank(const Matrix<T>& a, const Matrix<T>& b);

}  // namespace tricanon
