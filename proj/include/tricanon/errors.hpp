#pragma once

#include <stdexcept>
#include <string>

namespace tricanon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (scalar tokens, matrix files, descriptors).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A characteristic polynomial has an irreducible factor of degree > 1 over Q(i).
class EigenvalueOutsideField : public Error {
 public:
  using Error::Error;
};

/// A square root needed by the construction does not exist in Q(i).
class SqrtNotInField : public Error {
 public:
  SqrtNotInField(const std::string& value)
      : Error("square root of " + value + " is not in Q(i)"), value_(value) {}
  const std::string& value() const noexcept { return value_; }

 private:
  std::string value_;
};

/// A materialization leaves Q(i) and must be carried out over the radical tower.
class FieldPromotionRequired : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural hypothesis (symmetry, skew-symmetry, Hermitian, shape of a form).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Kronecker structure is inconsistent with the symmetry class of the pair.
class PencilNotCompatible : public Error {
 public:
  using Error::Error;
};

/// Block multiset admits no cover by the rows of a classification table.
class MalformedPencil : public Error {
 public:
  using Error::Error;
};

/// A summand descriptor violates the invariants of its family.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Two pencils have different Kronecker block multisets.
class NotEquivalent : public Error {
 public:
  using Error::Error;
};

}  // namespace tricanon
