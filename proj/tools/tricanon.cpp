#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tricanon/canon.hpp"
#include "tricanon/errors.hpp"
#include "tricanon/io.hpp"
#include "tricanon/pencil.hpp"
#include "tricanon/random.hpp"
#include "tricanon/witness.hpp"

using namespace tricanon;

namespace {

enum Exit { Ok = 0, Internal = 1, Parse = 2, Field = 3, Structure = 4, NotEquivalentExit = 5 };

std::vector<GMatrix> load(const std::string& path, std::size_t expected) {
  auto ms = parse_matrix_file(read_file(path));
  if (ms.size() != expected) {
    throw ParseError(path + ": expected " + std::to_string(expected) + " matrices, found " +
                     std::to_string(ms.size()));
  }
  return ms;
}

bool single(Relation r) { return r == Relation::Congruence || r == Relation::Star; }

int run_kronecker(const std::string& path, bool witness) {
  auto ms = load(path, 2);
  auto form = kronecker_decompose(ms[0], ms[1]);
  for (const auto& b : form.blocks) std::cout << to_string(b) << "\n";
  if (witness) {
    std::cout << "R:\n" << serialize_matrix(form.R) << "S:\n" << serialize_matrix(form.S);
  }
  return Ok;
}

int run_canon(const std::string& relation_text, const std::string& path, bool materialize, bool json) {
  Relation relation = parse_relation(relation_text);
  auto ms = load(path, single(relation) ? 1 : 2);
  GMatrix b = ms.size() > 1 ? ms[1] : GMatrix();
  CanonicalDecomposition d = canonicalize(relation, ms[0], b);
  std::cout << (json ? format_report_json(d, materialize) + "\n" : format_report(d, materialize));
  return Ok;
}

int run_witness(const std::string& path) {
  auto ms = load(path, 4);
  PairWitness eq = equivalence_witness(ms[0], ms[1], ms[2], ms[3]);
  CongruenceWitness w = upgrade_to_congruence(ms[0], ms[1], ms[2], ms[3], eq.R, eq.S);
  std::cout << "N:\n" << serialize_matrix(w.N);
  GMatrix nt = w.N.transpose();
  bool ok = nt * ms[0] * w.N == ms[2] && nt * ms[1] * w.N == ms[3];
  std::cout << "verification: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? Ok : Internal;
}

int run_verify_tables(std::size_t max_size) {
  if (max_size == 0) throw PreconditionViolation("--max-size must be at least 1");
  bool all = true;
  for (int f = 0; f <= static_cast<int>(Family::HE2); ++f) {
    std::size_t pass = 0;
    std::size_t fail = 0;
    for (const auto& d : table_samples(static_cast<Family>(f), max_size)) {
      TableCheck c = verify_table(d);
      if (c.ok) {
        ++pass;
        continue;
      }
      ++fail;
      std::cout << "  mismatch " << to_string(d) << "\n";
    }
    all = all && fail == 0;
    std::cout << family_name(static_cast<Family>(f)) << " " << relation_name(relation_of(static_cast<Family>(f)))
              << " pass=" << pass << " fail=" << fail << " " << (fail == 0 ? "PASS" : "FAIL") << "\n";
  }
  return all ? Ok : Internal;
}

int run_selfcheck(const std::string& relation_text, std::size_t trials) {
  Relation relation = parse_relation(relation_text);
  Rng rng = make_rng(1);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto ds = random_decomposition(relation, rng);
    std::size_t n = 0;
    for (const auto& d : ds) n += d.n;
    RoundTripResult r = round_trip(relation, ds, random_nonsingular(n, rng));
    if (r.ok) continue;
    ++failures;
    std::cout << "trial " << t << " failed" << (r.error.empty() ? "" : ": " + r.error) << "\n";
  }
  std::cout << relation_name(relation) << " round trips: " << trials - failures << "/" << trials << "\n";
  return failures == 0 ? Ok : Internal;
}

int report(const std::exception& e, int code) {
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tridiagonal canonical forms under congruence and *congruence"};
  app.require_subcommand(1);

  std::string file;
  bool witness = false;
  auto* kron = app.add_subcommand("kronecker", "Kronecker blocks of a pencil (A, B)");
  kron->add_option("file", file, "pencil file")->required();
  kron->add_flag("--witness", witness, "print R and S with R A S, R B S canonical");

  std::string relation;
  bool materialize = false;
  bool json = false;
  auto* canon = app.add_subcommand("canon", "canonical summands of a matrix or pair");
  canon->add_option("--relation", relation, "relation")
      ->required()
      ->check(CLI::IsMember({"congruence", "star", "sym-sym", "sym-sym-second", "sym-skew", "skew-skew", "herm-herm"}));
  canon->add_option("file", file, "matrix or pair file")->required();
  canon->add_flag("--materialize", materialize, "print the canonical matrices");
  canon->add_flag("--json", json, "JSON output");

  auto* wit = app.add_subcommand("witness", "congruence N between two equivalent (skew-)symmetric pairs");
  wit->add_option("file", file, "file with A, B, A', B'")->required();

  std::size_t max_size = 4;
  auto* tables = app.add_subcommand("verify-tables", "check every table row up to a size");
  tables->add_option("--max-size", max_size, "largest summand size");

  std::size_t trials = 20;
  auto* self = app.add_subcommand("selfcheck", "random round trips; seed from TRICANON_SEED");
  self->add_option("--relation", relation, "relation")->required();
  self->add_option("--trials", trials, "number of trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Parse;
  }

  try {
    if (*kron) return run_kronecker(file, witness);
    if (*canon) return run_canon(relation, file, materialize, json);
    if (*wit) return run_witness(file);
    if (*tables) return run_verify_tables(max_size);
    if (*self) return run_selfcheck(relation, trials);
  } catch (const ParseError& e) {
    return report(e, Parse);
  } catch (const SqrtNotInField& e) {
    std::cerr << "offending eigenvalue: " << e.value() << "\n";
    return report(e, Field);
  } catch (const EigenvalueOutsideField& e) {
    return report(e, Field);
  } catch (const FieldPromotionRequired& e) {
    return report(e, Field);
  } catch (const NotEquivalent& e) {
    return report(e, NotEquivalentExit);
  } catch (const StructureError& e) {
    return report(e, Structure);
  } catch (const ShapeError& e) {
    return report(e, Structure);
  } catch (const PencilNotCompatible& e) {
    return report(e, Structure);
  } catch (const PreconditionViolation& e) {
    return report(e, Structure);
  } catch (const std::exception& e) {
    return report(e, Internal);
  }
  return Internal;
}
