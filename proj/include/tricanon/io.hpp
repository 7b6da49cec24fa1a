#pragma once

// Matrix files and canonical-form reports.
//
// Matrix file: a header line `rows cols`, then rows*cols scalar tokens in
// row-major order. Several matrices are separated by a line `---`. Lines
// starting with '#' are ignored.

#include <string>
#include <string_view>
#include <vector>

#include "tricanon/canon.hpp"
#include "tricanon/matrix.hpp"

namespace tricanon {

std::vector<GMatrix> parse_matrix_file(std::string_view text);
GMatrix parse_matrix(std::string_view text);

template <class T>
std::string serialize_matrix(const Matrix<T>& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string serialize_matrices(const std::vector<GMatrix>& ms);

std::string read_file(const std::string& path);

/// Text report: relation, summands, pencil blocks, notes, and with
/// `materialize` the canonical matrices.
std::string format_report(const CanonicalDecomposition& d, bool materialize);
/// Same content as JSON.
std::string format_report_json(const CanonicalDecomposition& d, bool materialize);
/// Descriptor lines of a text report.
std::vector<SummandDescriptor> parse_report_summands(std::string_view report);

}  // namespace tricanon
