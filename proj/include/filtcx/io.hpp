#pragma once

// Text formats: algebra files, Gram files and subcomplex reports (JSON).

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filtcx/lie.hpp"
#include "filtcx/subcomplex.hpp"

namespace filtcx::io {

// Malformed input. `what()` starts with the field path, e.g.
// "brackets[1].i: must be less than j".
class FormatError : public std::invalid_argument {
 public:
  FormatError(const std::string& path, const std::string& message)
      : std::invalid_argument(path.empty() ? message : path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// {"name", "dimension", "weights", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}
LieAlgebraSpec algebra_from_json(std::string_view text);
std::string algebra_to_json(const LieAlgebraSpec& spec);

// "builtin:NAME" or a path to an algebra file.
LieAlgebraSpec load_algebra(const std::string& source);

// {"gram": [["p/q", ...], ...]} on the covector basis.
MatrixQ gram_from_json(std::string_view text, int n);
std::string gram_to_json(const MatrixQ& g);
// "identity" or a path to a Gram file.
MatrixQ load_gram(const std::string& source, int n);

// Serializable mirror of a SubcomplexReport.
struct ReportData {
  std::string algebra;
  std::string gram;
  int dimension = 0;
  Weighting weights;
  std::vector<int> dim_e0, dim_f0;
  BettiVector betti, oracle_betti;
  std::vector<std::pair<std::string, std::string>> ledger;  // name, "pass" or "fail: witness"
  std::vector<std::pair<std::string, std::vector<MatrixQ>>> matrices;  // only with emitted matrices

  bool passed() const;
  bool operator==(const ReportData& o) const;
};

ReportData make_report_data(const SubcomplexReport& report, const LieAlgebraSpec& spec, bool with_matrices);
std::string report_to_json(const ReportData& data);
ReportData report_from_json(std::string_view text);
std::string report_to_text(const ReportData& data);

std::string read_file(const std::string& path);

}  // namespace filtcx::io
