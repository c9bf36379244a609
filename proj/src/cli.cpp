#include "filtcx/cli.hpp"

#include <CLI11.hpp>

#include "filtcx/contact.hpp"
#include "filtcx/io.hpp"
#include "filtcx/subcomplex.hpp"

namespace filtcx::cli {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string vector_text(const VectorQ& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v(i));
  return out + ")";
}

// Coordinates on the lexicographic basis, e.g. "(1,2,4) - 1/2*(1,3,5)".
std::string form_text(const VectorQ& v, const std::vector<BasisElement>& basis) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    const bool negative = v(i) < 0;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const Rational magnitude = negative ? Rational(-v(i)) : v(i);
    out += (magnitude == 1 ? "" : to_string(magnitude) + "*") + to_string(basis[static_cast<std::size_t>(i)].index);
  }
  return out.empty() ? "0" : out;
}

LieAlgebraSpec load_valid(const std::string& source) {
  LieAlgebraSpec spec = io::load_algebra(source);
  require_valid(spec);
  return spec;
}

int cmd_validate(const std::string& source, std::ostream& out) {
  const LieAlgebraSpec spec = io::load_algebra(source);
  const ValidationReport report = validate(spec);
  if (report.ok()) {
    out << "valid: " << spec.name << " (" << (report.graded ? "graded" : "filtered") << ", dimension " << spec.n
        << ")\n";
    return ok;
  }
  out << "invalid: " << spec.name << "\n";
  for (const auto& s : report.structural) out << "structure: " << s << "\n";
  for (const auto& v : report.jacobi)
    out << "jacobi: triple (" << v.triple[0] << ", " << v.triple[1] << ", " << v.triple[2]
        << ") residual " << vector_text(v.residual) << "\n";
  for (const auto& f : report.filtration)
    out << "filtration: [e" << f.i << ",e" << f.j << "] has coefficient " << to_string(f.coefficient) << " on e" << f.k
        << " of weight " << spec.weights[static_cast<std::size_t>(f.k - 1)] << "\n";
  return input_error;
}

int cmd_subcomplex(const std::string& source, const std::string& gram_source, const std::string& differential,
                   const std::string& output, bool emit_matrices, std::ostream& out, std::ostream& err) {
  const LieAlgebraSpec spec = load_valid(source);
  const MatrixQ g1 = io::load_gram(gram_source, spec.n);
  const auto top = differential == "algebraic" ? TopDifferential::algebraic : TopDifferential::full;
  const SubcomplexReport report = build_subcomplex(spec, g1, top);
  const io::ReportData data = io::make_report_data(report, spec, emit_matrices);
  out << (output == "structured" ? io::report_to_json(data) : io::report_to_text(data));
  if (const IdentityCheck* failure = report.first_failure()) {
    err << "identity failed: " << failure->name << ": " << failure->witness << "\n";
    return identity_failure;
  }
  return ok;
}

int cmd_compare(const std::string& source, const std::string& gram_a, const std::string& gram_b, std::ostream& out) {
  const LieAlgebraSpec spec = load_valid(source);
  const MatrixQ a = io::load_gram(gram_a, spec.n), b = io::load_gram(gram_b, spec.n);
  const ComparisonResult r = compare_e0(spec, a, b);
  if (r.equal && r.projectors_equal) {
    out << "equal: E0 and Pi0 agree in every degree\n";
    return ok;
  }
  if (!r.projectors_equal)
    out << "Pi0 differs: degree " << r.projector_degree << ", entry (" << r.row << ", " << r.col
        << "): " << to_string(r.entry_a) << " vs " << to_string(r.entry_b) << "\n";
  if (r.equal) {
    out << "E0 agrees in every degree\n";
  } else {
    const BasisPtr basis = enumerate_basis(spec.n, spec.weights);
    out << "E0 differs: degree " << r.degree << ", witness " << form_text(r.witness, basis->degree(r.degree))
        << " lies in E0("
        << (r.witness_in_first ? "gram-a" : "gram-b") << ") but not in E0(" << (r.witness_in_first ? "gram-b" : "gram-a")
        << ")\n";
  }
  return differs;
}

int cmd_contact(bool check, std::ostream& out, std::ostream& err) {
  const contact::Tables tables = contact::contact_tables();
  if (!check) {
    for (const auto& t : tables) out << t.label() << " = " << contact::to_string(t.matrix) << "\n";
    return ok;
  }
  const auto result = contact::verify_tables(tables, contact::expected_tables());
  for (const auto& name : result.passed) out << "ok  " << name << "\n";
  for (const auto& m : result.mismatches) {
    err << "mismatch " << m.table;
    if (m.row >= 0) err << " (" << m.row << ", " << m.col << ")";
    if (!m.note.empty()) err << " [" << m.note << "]";
    err << "\n- " << m.expected << "\n+ " << m.computed << "\n";
  }
  out << result.passed.size() << " checks passed, " << result.mismatches.size() << " mismatches\n";
  return result.ok() ? ok : identity_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rumin-type subcomplexes of filtered Lie algebras", "filtcx"};
  app.require_subcommand(1);

  std::string source, gram = "identity", gram_a = "identity", gram_b = "identity";
  std::string differential = "full", output = "text";
  bool emit_matrices = false, check = false, emit = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check an algebra file");
  validate_cmd->add_option("source", source, "Algebra file or builtin:NAME")->required();

  auto* subcomplex_cmd = app.add_subcommand("subcomplex", "Build the subcomplex and its identity ledger");
  subcomplex_cmd->add_option("source", source, "Algebra file or builtin:NAME")->required();
  subcomplex_cmd->add_option("--gram", gram, "Gram file on covectors, or identity");
  subcomplex_cmd->add_option("--differential", differential, "Top differential")
      ->check(CLI::IsMember({"full", "algebraic"}));
  subcomplex_cmd->add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "structured"}));
  subcomplex_cmd->add_flag("--emit-matrices", emit_matrices, "Include every operator matrix");

  auto* compare_cmd = app.add_subcommand("compare", "Compare E0 under two Grams");
  compare_cmd->add_option("source", source, "Algebra file or builtin:NAME")->required();
  compare_cmd->add_option("--gram-a", gram_a, "First Gram file, or identity");
  compare_cmd->add_option("--gram-b", gram_b, "Second Gram file, or identity");

  auto* contact_cmd = app.add_subcommand("contact", "Symbolic tables of the three-dimensional contact frame");
  auto* check_opt = contact_cmd->add_flag("--check", check, "Verify against the expected tables");
  auto* emit_opt = contact_cmd->add_flag("--emit", emit, "Print every table");
  check_opt->excludes(emit_opt);
  contact_cmd->require_option(1);

  auto* oracle_cmd = app.add_subcommand("oracle", "Chevalley-Eilenberg Betti numbers");
  oracle_cmd->add_option("source", source, "Algebra file or builtin:NAME")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : input_error;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(source, out);
    if (subcomplex_cmd->parsed())
      return cmd_subcomplex(source, gram, differential, output, emit_matrices, out, err);
    if (compare_cmd->parsed()) return cmd_compare(source, gram_a, gram_b, out);
    if (contact_cmd->parsed()) return cmd_contact(check, out, err);
    if (oracle_cmd->parsed()) {
      const LieAlgebraSpec spec = load_valid(source);
      out << "betti: " << join(ce_cohomology_oracle(spec)) << "\n";
      return ok;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << (source.empty() ? "" : source + ": ") << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace filtcx::cli
