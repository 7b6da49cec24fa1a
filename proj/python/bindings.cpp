#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tricanon/canon.hpp"
#include "tricanon/errors.hpp"
#include "tricanon/pencil.hpp"
#include "tricanon/witness.hpp"

namespace py = pybind11;
using namespace tricanon;

namespace {

// Entries may be ints or strings such as "3/4-2i".
GMatrix to_matrix(const py::list& rows) {
  std::size_t n = rows.size();
  std::size_t m = n == 0 ? 0 : py::len(rows[0]);
  GMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    py::list row = rows[i];
    if (row.size() != m) throw ShapeError("ragged matrix");
    for (std::size_t j = 0; j < m; ++j) out(i, j) = parse_gaussian(py::str(row[j]).cast<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> from_matrix(const GMatrix& a) {
  std::vector<std::vector<std::string>> out(a.rows(), std::vector<std::string>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = to_string(a(i, j));
  }
  return out;
}

template <class V>
std::vector<std::string> texts(const V& items) {
  std::vector<std::string> out;
  for (const auto& x : items) out.push_back(to_string(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(tricanon, m) {
  m.doc() = "Exact canonical forms for congruence, *congruence and pairs of tridiagonal matrices";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ShapeError>(m, "ShapeError", base);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", base);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", base);
  py::register_exception<EigenvalueOutsideField>(m, "EigenvalueOutsideField", base);
  py::register_exception<SqrtNotInField>(m, "SqrtNotInField", base);
  py::register_exception<FieldPromotionRequired>(m, "FieldPromotionRequired", base);
  py::register_exception<StructureError>(m, "StructureError", base);
  py::register_exception<PencilNotCompatible>(m, "PencilNotCompatible", base);
  py::register_exception<MalformedPencil>(m, "MalformedPencil", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", base);
  py::register_exception<NotEquivalent>(m, "NotEquivalent", base);

  m.def(
      "kronecker",
      [](const py::list& a, const py::list& b) { return texts(kronecker_decompose(to_matrix(a), to_matrix(b)).blocks); },
      py::arg("a"), py::arg("b"), "Kronecker blocks of the pencil (A, B).");

  m.def(
      "canon",
      [](const std::string& relation, const py::list& a, const py::object& b) {
        Relation r = parse_relation(relation);
        GMatrix mb = b.is_none() ? GMatrix() : to_matrix(b.cast<py::list>());
        CanonicalDecomposition d = canonicalize(r, to_matrix(a), mb);
        py::dict out;
        out["relation"] = relation_name(d.relation);
        out["summands"] = texts(d.summands);
        out["blocks"] = texts(d.blocks);
        out["notes"] = d.notes;
        return out;
      },
      py::arg("relation"), py::arg("a"), py::arg("b") = py::none(),
      "Canonical summands. Relations: congruence, star, sym-sym, sym-sym-second, sym-skew, skew-skew, herm-herm.");

  m.def(
      "normalize_descriptor", [](const std::string& text) { return to_string(parse_descriptor(text)); },
      py::arg("text"));

  m.def(
      "materialize",
      [](const std::string& text) -> py::object {
        SummandDescriptor d = parse_descriptor(text);
        if (!is_pair_family(d.family)) return py::cast(from_matrix(materialize(d)));
        auto [a, b] = materialize_pair(d);
        return py::make_tuple(from_matrix(a), from_matrix(b));
      },
      py::arg("text"), "Canonical matrix (or pair over Q(i)) of a descriptor.");

  m.def(
      "verify_table",
      [](const std::string& text) {
        TableCheck c = verify_table(parse_descriptor(text));
        return py::make_tuple(c.ok, texts(c.predicted), texts(c.actual));
      },
      py::arg("text"), "(ok, predicted blocks, actual blocks) for one table row.");

  m.def(
      "congruence_witness",
      [](const py::list& a, const py::list& b, const py::list& a2, const py::list& b2) {
        GMatrix ma = to_matrix(a);
        GMatrix mb = to_matrix(b);
        GMatrix ma2 = to_matrix(a2);
        GMatrix mb2 = to_matrix(b2);
        PairWitness eq = equivalence_witness(ma, mb, ma2, mb2);
        return from_matrix(upgrade_to_congruence(ma, mb, ma2, mb2, eq.R, eq.S).N);
      },
      py::arg("a"), py::arg("b"), py::arg("a2"), py::arg("b2"),
      "N with N^T A N = A2 and N^T B N = B2 for equivalent (skew-)symmetric pairs.");
}
