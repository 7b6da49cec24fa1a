#include "tricanon/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tricanon/errors.hpp"

namespace tricanon {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_sections(std::string_view text) {
  std::vector<std::string> sections(1);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = strip(line);
    if (!t.empty() && t.front() == '#') continue;
    if (t == "---") {
      sections.emplace_back();
      continue;
    }
    sections.back() += line;
    sections.back() += '\n';
  }
  return sections;
}

std::size_t parse_dimension(const std::string& token) {
  if (token.empty() || token.size() > 9 || !std::all_of(token.begin(), token.end(), ::isdigit)) {
    throw ParseError("bad matrix dimension '" + token + "'");
  }
  return std::stoul(token);
}

GMatrix parse_section(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.size() < 2) throw ParseError("matrix section lacks a `rows cols` header");
  std::size_t rows = parse_dimension(tokens[0]);
  std::size_t cols = parse_dimension(tokens[1]);
  if (tokens.size() - 2 != rows * cols) {
    throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " +
                     std::to_string(tokens.size() - 2));
  }
  GMatrix m(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = parse_gaussian(tokens[k + 2]);
  return m;
}

template <class T>
nlohmann::json matrix_json(const Matrix<T>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string sign_text(SignState s) {
  switch (s) {
    case SignState::Plus:
      return "+";
    case SignState::Minus:
      return "-";
    case SignState::Unknown:
      return "?";
  }
  return "?";
}

bool single_matrix(Relation r) { return r == Relation::Congruence || r == Relation::Star; }

}  // namespace

std::vector<GMatrix> parse_matrix_file(std::string_view text) {
  std::vector<GMatrix> out;
  for (const auto& section : split_sections(text)) out.push_back(parse_section(section));
  return out;
}

GMatrix parse_matrix(std::string_view text) {
  auto ms = parse_matrix_file(text);
  if (ms.size() != 1) throw ParseError("expected one matrix, found " + std::to_string(ms.size()));
  return ms.front();
}

std::string serialize_matrices(const std::vector<GMatrix>& ms) {
  std::string out;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (k > 0) out += "---\n";
    out += serialize_matrix(ms[k]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_report(const CanonicalDecomposition& d, bool materialize) {
  std::string out = "relation: " + relation_name(d.relation) + "\nsummands:\n";
  for (const auto& s : d.summands) out += "  " + to_string(s) + "\n";
  out += "blocks:\n";
  for (const auto& b : d.blocks) out += "  " + to_string(b) + "\n";
  if (!d.notes.empty()) {
    out += "notes:\n";
    for (const auto& n : d.notes) out += "  " + n + "\n";
  }
  if (materialize) {
    out += "canonical form:\n";
    if (single_matrix(d.relation)) {
      out += serialize_matrix(materialize_sum(d.summands));
    } else {
      auto [a, b] = materialize_pair_sum_tower(d.summands);
      out += serialize_matrix(a) + "---\n" + serialize_matrix(b);
    }
  }
  return out;
}

std::string format_report_json(const CanonicalDecomposition& d, bool materialize) {
  nlohmann::json j;
  j["relation"] = relation_name(d.relation);
  j["summands"] = nlohmann::json::array();
  for (const auto& s : d.summands) {
    nlohmann::json e;
    e["text"] = to_string(s);
    e["family"] = family_name(s.family);
    e["n"] = s.n;
    e["lambda"] = to_string(s.lambda);
    e["mu"] = to_string(s.mu);
    e["eps"] = s.eps;
    e["c"] = s.c_infinite ? "inf" : to_string(s.c);
    e["sign"] = sign_text(s.sign);
    e["sign_determined"] = s.sign_determined();
    j["summands"].push_back(e);
  }
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : d.blocks) {
    j["blocks"].push_back({{"kind", kind_name(b.kind)}, {"size", b.size}, {"lambda", to_string(b.lambda)}});
  }
  j["notes"] = d.notes;
  if (materialize) {
    if (single_matrix(d.relation)) {
      j["canonical_form"] = {matrix_json(materialize_sum(d.summands))};
    } else {
      auto [a, b] = materialize_pair_sum_tower(d.summands);
      j["canonical_form"] = {matrix_json(a), matrix_json(b)};
    }
  }
  return j.dump(2);
}

std::vector<SummandDescriptor> parse_report_summands(std::string_view report) {
  std::vector<SummandDescriptor> out;
  std::istringstream in{std::string(report)};
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    std::string_view t = strip(line);
    if (t == "summands:") {
      inside = true;
      continue;
    }
    if (!inside) continue;
    if (line.empty() || !std::isspace(static_cast<unsigned char>(line.front()))) break;
    out.push_back(parse_descriptor(t));
  }
  return out;
}

}  // namespace tricanon
