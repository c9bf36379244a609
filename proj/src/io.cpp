#include "filtcx/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace filtcx::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offsets are 1-based and point just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw FormatError("", "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at_key(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const Json& require(const Json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(at_key(path, key), "missing");
  return *it;
}

void allow_only(const Json& obj, const std::string& path, const std::set<std::string>& keys) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!keys.contains(it.key())) throw FormatError(at_key(path, it.key()), "unknown field");
}

void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected an object");
}

void expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected an array");
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FormatError(path, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw FormatError(path, "expected a rational as \"p/q\" or \"p\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(path, e.what());
  }
}

std::vector<int> as_int_list(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], at_index(path, i)));
  return out;
}

Json matrix_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixQ matrix_from(const Json& j, const std::string& path, Index rows, Index cols) {
  expect_array(j, path);
  if (static_cast<Index>(j.size()) != rows) throw FormatError(path, "expected " + std::to_string(rows) + " rows");
  MatrixQ m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const std::string row_path = at_index(path, static_cast<std::size_t>(r));
    const Json& row = j[static_cast<std::size_t>(r)];
    expect_array(row, row_path);
    if (static_cast<Index>(row.size()) != cols) throw FormatError(row_path, "expected " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = as_rational(row[static_cast<std::size_t>(c)], at_index(row_path, static_cast<std::size_t>(c)));
  }
  return m;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("", "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

LieAlgebraSpec algebra_from_json(std::string_view text) {
  const Json root = parse_json(text);
  expect_object(root, "");
  allow_only(root, "", {"name", "description", "dimension", "weights", "brackets"});
  LieAlgebraSpec spec;
  spec.name = as_string(require(root, "", "name"), "name");
  spec.n = as_int(require(root, "", "dimension"), "dimension");
  if (spec.n < 1) throw FormatError("dimension", "must be positive");
  spec.weights = as_int_list(require(root, "", "weights"), "weights");
  try {
    check_weighting(spec.weights, spec.n);
  } catch (const std::invalid_argument& e) {
    throw FormatError("weights", e.what());
  }
  const Json& brackets = require(root, "", "brackets");
  expect_array(brackets, "brackets");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = at_index("brackets", b);
    const Json& rec = brackets[b];
    expect_object(rec, path);
    allow_only(rec, path, {"i", "j", "coeffs"});
    const int i = as_int(require(rec, path, "i"), at_key(path, "i"));
    const int j = as_int(require(rec, path, "j"), at_key(path, "j"));
    if (i < 1 || i > spec.n) throw FormatError(at_key(path, "i"), "must be in 1.." + std::to_string(spec.n));
    if (j < 1 || j > spec.n) throw FormatError(at_key(path, "j"), "must be in 1.." + std::to_string(spec.n));
    if (i >= j) throw FormatError(at_key(path, "i"), "must be less than j");
    if (spec.brackets.contains({i, j}))
      throw FormatError(path, "duplicate bracket [" + std::to_string(i) + "," + std::to_string(j) + "]");
    const std::string coeffs_path = at_key(path, "coeffs");
    const Json& coeffs = require(rec, path, "coeffs");
    expect_object(coeffs, coeffs_path);
    std::map<int, Rational> row;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      const std::string key_path = at_key(coeffs_path, it.key());
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw FormatError(key_path, "key must be a generator index");
      }
      if (k < 1 || k > spec.n) throw FormatError(key_path, "index must be in 1.." + std::to_string(spec.n));
      const Rational c = as_rational(it.value(), key_path);
      if (c != 0) row[k] = c;
    }
    spec.brackets[{i, j}] = std::move(row);
  }
  return spec;
}

std::string algebra_to_json(const LieAlgebraSpec& spec) {
  Json root;
  root["name"] = spec.name;
  root["dimension"] = spec.n;
  root["weights"] = spec.weights;
  Json brackets = Json::array();
  for (const auto& [ij, row] : spec.brackets) {
    Json coeffs = Json::object();
    for (const auto& [k, c] : row) coeffs[std::to_string(k)] = to_string(c);
    brackets.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"coeffs", coeffs}});
  }
  root["brackets"] = brackets;
  return root.dump(2) + "\n";
}

LieAlgebraSpec load_algebra(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return builtin(std::string_view(source).substr(prefix.size()));
  return algebra_from_json(read_file(source));
}

MatrixQ gram_from_json(std::string_view text, int n) {
  const Json root = parse_json(text);
  expect_object(root, "");
  allow_only(root, "", {"name", "description", "gram"});
  return matrix_from(require(root, "", "gram"), "gram", n, n);
}

std::string gram_to_json(const MatrixQ& g) { return Json{{"gram", matrix_json(g)}}.dump(2) + "\n"; }

MatrixQ load_gram(const std::string& source, int n) {
  if (source == "identity") return MatrixQ::Identity(n, n);
  return gram_from_json(read_file(source), n);
}

bool ReportData::passed() const {
  for (const auto& [name, status] : ledger)
    if (status != "pass") return false;
  return true;
}

bool ReportData::operator==(const ReportData& o) const {
  if (algebra != o.algebra || gram != o.gram || dimension != o.dimension || weights != o.weights ||
      dim_e0 != o.dim_e0 || dim_f0 != o.dim_f0 || betti != o.betti || oracle_betti != o.oracle_betti ||
      ledger != o.ledger || matrices.size() != o.matrices.size())
    return false;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].first != o.matrices[i].first || matrices[i].second.size() != o.matrices[i].second.size()) return false;
    for (std::size_t k = 0; k < matrices[i].second.size(); ++k)
      if (!equal(matrices[i].second[k], o.matrices[i].second[k])) return false;
  }
  return true;
}

ReportData make_report_data(const SubcomplexReport& report, const LieAlgebraSpec& spec, bool with_matrices) {
  ReportData out;
  out.algebra = report.algebra;
  out.gram = report.gram_fingerprint;
  out.dimension = spec.n;
  out.weights = spec.weights;
  out.dim_e0 = report.dim_e0;
  out.dim_f0 = report.dim_f0;
  out.betti = report.betti;
  out.oracle_betti = ce_cohomology_oracle(spec);
  for (const auto& c : report.ledger) out.ledger.emplace_back(c.name, c.passed ? "pass" : "fail: " + c.witness);
  if (!with_matrices) return out;
  const auto blocks = [](const Family& f) {
    std::vector<MatrixQ> v;
    for (int k = 0; k <= f.max_degree(); ++k) v.push_back(f[k]);
    return v;
  };
  const auto& b = report.bundle;
  out.matrices = {
      {"d", blocks(report.d)},         {"d0", blocks(report.d0)},         {"delta0", blocks(report.delta0)},
      {"Box0", blocks(b.box0)},        {"Pi0", blocks(b.pi0)},            {"d0inv", blocks(b.d0inv)},
      {"Box", blocks(b.box)},          {"P", blocks(b.p)},                {"PiF", blocks(b.pi_f)},
      {"PiE", blocks(b.pi_e)},         {"L", blocks(b.l)},                {"Linv", blocks(b.l_inv)},
      {"D", blocks(report.big_d)},     {"C", blocks(report.big_c)},       {"d_c", blocks(report.d_c)},
      {"g", blocks(report.homotopy.g)}, {"ginv", blocks(report.homotopy.g_inv)}, {"h", blocks(report.homotopy.h)},
      {"E0 basis", report.e0_basis},   {"D on E0", report.d_e0},
  };
  return out;
}

std::string report_to_json(const ReportData& data) {
  Json root;
  root["algebra"] = data.algebra;
  root["gram"] = data.gram;
  root["dimension"] = data.dimension;
  root["weights"] = data.weights;
  root["dim_E0"] = data.dim_e0;
  root["dim_F0"] = data.dim_f0;
  root["betti"] = data.betti;
  root["oracle_betti"] = data.oracle_betti;
  Json ledger = Json::object();
  for (const auto& [name, status] : data.ledger) ledger[name] = status;
  root["ledger"] = ledger;
  if (!data.matrices.empty()) {
    Json matrices = Json::object();
    for (const auto& [name, per_degree] : data.matrices) {
      Json list = Json::array();
      for (const auto& m : per_degree)
        list.push_back(Json{{"shape", {m.rows(), m.cols()}}, {"rows", matrix_json(m)}});
      matrices[name] = list;
    }
    root["matrices"] = matrices;
  }
  return root.dump(2) + "\n";
}

ReportData report_from_json(std::string_view text) {
  const Json root = parse_json(text);
  expect_object(root, "");
  ReportData out;
  out.algebra = as_string(require(root, "", "algebra"), "algebra");
  out.gram = as_string(require(root, "", "gram"), "gram");
  out.dimension = as_int(require(root, "", "dimension"), "dimension");
  out.weights = as_int_list(require(root, "", "weights"), "weights");
  out.dim_e0 = as_int_list(require(root, "", "dim_E0"), "dim_E0");
  out.dim_f0 = as_int_list(require(root, "", "dim_F0"), "dim_F0");
  out.betti = as_int_list(require(root, "", "betti"), "betti");
  out.oracle_betti = as_int_list(require(root, "", "oracle_betti"), "oracle_betti");
  const Json& ledger = require(root, "", "ledger");
  expect_object(ledger, "ledger");
  for (auto it = ledger.begin(); it != ledger.end(); ++it)
    out.ledger.emplace_back(it.key(), as_string(it.value(), at_key("ledger", it.key())));
  if (auto it = root.find("matrices"); it != root.end()) {
    expect_object(*it, "matrices");
    for (auto m = it->begin(); m != it->end(); ++m) {
      const std::string path = at_key("matrices", m.key());
      expect_array(m.value(), path);
      std::vector<MatrixQ> per_degree;
      for (std::size_t k = 0; k < m.value().size(); ++k) {
        const std::string kp = at_index(path, k);
        const Json& entry = m.value()[k];
        expect_object(entry, kp);
        const auto shape = as_int_list(require(entry, kp, "shape"), at_key(kp, "shape"));
        if (shape.size() != 2 || shape[0] < 0 || shape[1] < 0) throw FormatError(at_key(kp, "shape"), "expected [rows, cols]");
        per_degree.push_back(matrix_from(require(entry, kp, "rows"), at_key(kp, "rows"), shape[0], shape[1]));
      }
      out.matrices.emplace_back(m.key(), std::move(per_degree));
    }
  }
  return out;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string report_to_text(const ReportData& data) {
  std::ostringstream out;
  std::size_t held = 0;
  for (const auto& entry : data.ledger)
    if (entry.second == "pass") ++held;
  out << "algebra: " << data.algebra << "\n"
      << "gram: " << data.gram << "\n"
      << "dim E0: " << join(data.dim_e0) << "\n"
      << "dim F0: " << join(data.dim_f0) << "\n"
      << "betti (E0, D): " << join(data.betti) << "\n"
      << "betti (Chevalley-Eilenberg): " << join(data.oracle_betti) << "\n"
      << "identities: " << held << "/" << data.ledger.size() << " hold\n";
  for (const auto& [name, status] : data.ledger) out << "  " << (status == "pass" ? "pass  " : "FAIL  ") << name
                                                     << (status == "pass" ? "" : "  (" + status.substr(6) + ")") << "\n";
  for (const auto& [name, per_degree] : data.matrices)
    for (std::size_t k = 0; k < per_degree.size(); ++k) {
      const MatrixQ& m = per_degree[k];
      out << name << "[" << k << "] (" << m.rows() << "x" << m.cols() << ")\n";
      for (Index r = 0; r < m.rows(); ++r) {
        out << "  ";
        for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
        out << "\n";
      }
    }
  return out.str();
}

}  // namespace filtcx::io
