#pragma once

// Canonical tridiagonal summands: descriptors, explicit matrices, and the
// structural transforms used around them.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricanon/gaussian.hpp"
#include "tricanon/matrix.hpp"
#include "tricanon/tower.hpp"

namespace tricanon {

enum class Family {
  CM1,
  CM2,
  CM3,
  CMI1,
  CMI2,
  SSS1N,
  SS2N,
  LYG,
  NN_IDENT,
  SSNEW,
  SC1,
  SC2,
  SC3,
  CC1,
  CC23,
  HE1,
  HE2,
};

enum class Relation { Congruence, Star, SymSym, SymSymSecond, SymSkew, SkewSkew, Hermitian };

/// Plus/Minus multiply mu (CMI2, odd HE1) or (a, b) (HE2) by +1/-1; Unknown means the
/// pencil does not fix that sign and the summand is materialized as Plus.
enum class SignState { Plus, Minus, Unknown };

struct SummandDescriptor {
  Family family = Family::CM1;
  std::size_t n = 1;
  Gaussian lambda;
  Gaussian mu;
  Rational c;
  bool c_infinite = false;
  int eps = 0;
  SignState sign = SignState::Plus;

  bool sign_determined() const noexcept { return sign != SignState::Unknown; }

  friend bool operator==(const SummandDescriptor& a, const SummandDescriptor& b) = default;
};

std::string family_name(Family f);
Family parse_family(std::string_view name);
/// The relation whose table lists the family.
Relation relation_of(Family f);
/// True for families whose summand is a pair of matrices.
bool is_pair_family(Family f);
/// True when the descriptor prints and compares a sign field.
bool carries_sign(const SummandDescriptor& d);

std::string relation_name(Relation r);
Relation parse_relation(std::string_view name);

// Constructors with default representatives.
SummandDescriptor make_cm1(std::size_t n, const Gaussian& lambda);
SummandDescriptor make_cm2(std::size_t n, int eps);
SummandDescriptor make_cm3(std::size_t n);
SummandDescriptor make_cmi1(std::size_t n, const Gaussian& lambda);
SummandDescriptor make_cmi2(std::size_t n, const Gaussian& mu, SignState sign = SignState::Plus);
SummandDescriptor make_sss1n(std::size_t n, int eps, const Gaussian& lambda);
SummandDescriptor make_ss2n(std::size_t n, const Gaussian& lambda);
SummandDescriptor make_lyg(std::size_t n, const Gaussian& lambda);
SummandDescriptor make_nn_ident(std::size_t n);
SummandDescriptor make_ssnew(std::size_t n);
SummandDescriptor make_sc1(std::size_t n, const Gaussian& lambda);
SummandDescriptor make_sc2(std::size_t n, int eps);
SummandDescriptor make_sc3(std::size_t n);
SummandDescriptor make_cc1(std::size_t n, const Gaussian& lambda);
SummandDescriptor make_cc23(std::size_t n);
SummandDescriptor make_he1(std::size_t n, const Gaussian& mu, SignState sign = SignState::Plus);
SummandDescriptor make_he2(std::size_t n, const Rational& c, SignState sign = SignState::Plus);
SummandDescriptor make_he2_infinite(std::size_t n, SignState sign = SignState::Plus);

/// Throws InvariantViolation when the descriptor breaks its family's constraints,
/// including the choice of representative.
void validate(const SummandDescriptor& d);
/// Replaces parameters by their canonical representatives.
SummandDescriptor normalize(SummandDescriptor d);

/// Total order on descriptors: family, size, then parameters.
std::strong_ordering compare_descriptors(const SummandDescriptor& a, const SummandDescriptor& b);
void sort_descriptors(std::vector<SummandDescriptor>& ds);
/// Equality with sign fields ignored where the sign is not determined on either side.
bool equal_modulo_sign(const SummandDescriptor& a, const SummandDescriptor& b);

/// Text form `FAMILY(n=..., lambda=..., eps=..., mu=..., c=..., sign=...)` with
/// only the fields relevant to the family.
std::string to_string(const SummandDescriptor& d);
SummandDescriptor parse_descriptor(std::string_view text);

/// Single-matrix summands (CM*, CMI*).
GMatrix materialize(const SummandDescriptor& d);
/// Pair summands over Q(i); throws FieldPromotionRequired when radicals are needed.
std::pair<GMatrix, GMatrix> materialize_pair(const SummandDescriptor& d);
/// Pair summands over the radical tower.
std::pair<TMatrix, TMatrix> materialize_pair_tower(const SummandDescriptor& d);
/// True when the pair summand has entries outside Q(i).
bool needs_tower(const SummandDescriptor& d);

/// Direct sum of single-matrix summands.
GMatrix materialize_sum(const std::vector<SummandDescriptor>& ds);
/// Direct sum of pair summands, over the tower.
std::pair<TMatrix, TMatrix> materialize_pair_sum_tower(const std::vector<SummandDescriptor>& ds);

/// Symmetric tridiagonal nilpotent N_n with diagonal n-1, n-3, ..., 1-n and
/// off-diagonal entries i*sqrt(l(n-l)).
TMatrix build_N(std::size_t n);

/// Rearranges rows and columns of an n x n tridiagonal matrix with zero diagonal
/// except possibly at (1,1) into the bidiagonal staircase form.
template <class T>
Matrix<T> p_transform(const Matrix<T>& a);
/// Row and column orders (0-based) used by p_transform.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> p_transform_orders(std::size_t n);

template <class T>
std::pair<Matrix<T>, Matrix<T>> sym_skew_split(const Matrix<T>& a);
/// (B, C) with B = (A + A*)/2, C = i(A* - A)/2, so A = B + iC.
template <class T>
std::pair<Matrix<T>, Matrix<T>> cartesian_split(const Matrix<T>& a);

/// (1 - x)/(1 + x); self-inverse.
Gaussian cayley(const Gaussian& x);
/// i(conj(l) - 1)/(conj(l) + 1).
Gaussian mu_from_lambda(const Gaussian& lambda);
/// Inverse of mu_from_lambda: (i - conj(mu))/(i + conj(mu)).
Gaussian lambda_from_mu(const Gaussian& mu);

}  // namespace tricanon
