#pragma once

// Canonical decompositions under congruence, *congruence and pair congruence,
// obtained by decomposing the associated pencil and inverting the block tables.

#include <string>
#include <vector>

#include "tricanon/matrix.hpp"
#include "tricanon/pencil.hpp"
#include "tricanon/summands.hpp"

namespace tricanon {

struct CanonicalDecomposition {
  Relation relation = Relation::Congruence;
  /// Sorted by compare_descriptors.
  std::vector<SummandDescriptor> summands;
  /// Kronecker blocks of the associated pencil: (A^T, A), (A*, A) or (A, B).
  std::vector<PencilBlock> blocks;
  /// Ambiguities the pencil leaves open.
  std::vector<std::string> notes;
};

template <class T>
CanonicalDecomposition canon_congruence(const Matrix<T>& a);
template <class T>
CanonicalDecomposition canon_star_congruence(const Matrix<T>& a);
template <class T>
CanonicalDecomposition canon_pair_sym_sym(const Matrix<T>& a, const Matrix<T>& b, bool second_form = false);
template <class T>
CanonicalDecomposition canon_pair_sym_skew(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
CanonicalDecomposition canon_pair_skew_skew(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
CanonicalDecomposition canon_pair_hermitian(const Matrix<T>& a, const Matrix<T>& b);

/// Dispatch on the relation. `b` is ignored for Congruence and Star.
template <class T>
CanonicalDecomposition canonicalize(Relation relation, const Matrix<T>& a, const Matrix<T>& b);

/// Table inversion: summands whose pencils have exactly these blocks.
std::vector<SummandDescriptor> summands_from_blocks(Relation relation, const std::vector<PencilBlock>& blocks);

/// Blocks the table assigns to a summand, sorted.
std::vector<PencilBlock> predicted_blocks(const SummandDescriptor& d);
/// Blocks of the materialized summand's pencil, sorted.
std::vector<PencilBlock> actual_blocks(const SummandDescriptor& d);

struct TableCheck {
  bool ok = false;
  std::vector<PencilBlock> predicted;
  std::vector<PencilBlock> actual;
};

TableCheck verify_table(const SummandDescriptor& d);

/// Valid descriptors of a family up to the given size over the parameter samples
/// {0, 2, -1/2, i, 1+i, 3/5+4/5i} (plus c = inf for HE2).
std::vector<SummandDescriptor> table_samples(Family family, std::size_t max_size);

/// The congruence summand of B + C for a symmetric/skew canonical pair (B, C).
SummandDescriptor congruence_counterpart(const SummandDescriptor& sym_skew);
/// The Hermitian pair summand of cartesian_split(A) for a *congruence summand A.
SummandDescriptor hermitian_counterpart(const SummandDescriptor& star);

/// Equal summand multisets, with undetermined signs ignored.
bool same_class(const std::vector<SummandDescriptor>& a, const std::vector<SummandDescriptor>& b);

}  // namespace tricanon
