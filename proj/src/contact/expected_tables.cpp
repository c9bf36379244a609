#include "filtcx/contact.hpp"

// Rows are listed top to bottom, entries left to right. Scalar factors sit
// where the defining product puts them: for example the (2,1) entry of
// Box(2) is the composite X o (-c0), written "-X*c0". Where the printed
// tables pull such a factor to the left, that reading is kept in `printed`
// and is checked after derivatives of c0 are dropped.

namespace filtcx::contact {

namespace {

ExpectedTable table(std::string name, int degree, int rows, int cols, std::vector<std::string> entries,
                    std::vector<std::string> printed = {}) {
  return {std::move(name), degree, rows, cols, std::move(entries), std::move(printed)};
}

std::vector<std::string> zeros(int n) { return std::vector<std::string>(static_cast<std::size_t>(n), "0"); }

std::vector<std::string> diag3(const std::string& a, const std::string& b, const std::string& c) {
  return {a, "0", "0", "0", b, "0", "0", "0", c};
}

}  // namespace

std::vector<ExpectedTable> expected_tables() {
  return {
      table("dtilde", 0, 3, 1, zeros(3)),
      table("dtilde", 1, 3, 3, {"-c1", "-c2", "-c0", "-c3", "-c4", "0", "-c5", "-c6", "0"}),
      table("dtilde", 2, 1, 3, {"c3 + c6", "-c1", "-c2"}),

      table("d", 0, 3, 1, {"X", "Y", "T"}),
      table("d", 1, 3, 3, {"-Y - c1", "X - c2", "-c0", "-T - c3", "-c4", "X", "-c5", "-T - c6", "Y"}),
      table("d", 2, 1, 3, {"T + c3 + c6", "-Y - c1", "X - c2"}),

      table("dgM", 0, 3, 1, zeros(3)),
      table("dgM", 1, 3, 3, {"0", "0", "-c0", "0", "0", "0", "0", "0", "0"}),
      table("dgM", 2, 1, 3, zeros(3)),

      table("d0", 0, 3, 1, zeros(3)),
      table("d0", 1, 3, 3, {"0", "0", "-c0", "0", "0", "0", "0", "0", "0"}),
      table("d0", 2, 1, 3, zeros(3)),

      table("d0t", 1, 1, 3, zeros(3)),
      table("d0t", 2, 3, 3, {"0", "0", "0", "0", "0", "0", "-c0", "0", "0"}),
      table("d0t", 3, 3, 1, zeros(3)),

      table("Box0", 0, 1, 1, {"0"}),
      table("Box0", 1, 3, 3, diag3("0", "0", "c0^2")),
      table("Box0", 2, 3, 3, diag3("c0^2", "0", "0")),
      table("Box0", 3, 1, 1, {"0"}),

      table("Pi0", 0, 1, 1, {"1"}),
      table("Pi0", 1, 3, 3, diag3("1", "1", "0")),
      table("Pi0", 2, 3, 3, diag3("0", "1", "1")),
      table("Pi0", 3, 1, 1, {"1"}),

      table("Box", 0, 1, 1, {"0"}),
      table("Box", 1, 3, 3, {"0", "0", "0", "0", "0", "0", "c0*(Y + c1)", "c0*(-X + c2)", "c0*c0"}),
      table("Box", 2, 3, 3, {"c0^2", "0", "0", "-X*c0", "0", "0", "-Y*c0", "0", "0"},
            {"c0^2", "0", "0", "-c0*X", "0", "0", "-c0*Y", "0", "0"}),
      table("Box", 3, 1, 1, {"0"}),

      table("P", 0, 1, 1, {"1"}),
      table("P", 1, 3, 3, {"1", "0", "0", "0", "1", "0", "-c0^-1*(Y + c1)", "-c0^-1*(-X + c2)", "0"}),
      table("P", 2, 3, 3, {"0", "0", "0", "X*c0^-1", "1", "0", "Y*c0^-1", "0", "1"},
            {"0", "0", "0", "c0^-1*X", "1", "0", "c0^-1*Y", "0", "1"}),
      table("P", 3, 1, 1, {"1"}),

      table("L", 0, 1, 1, {"1"}),
      table("L", 1, 3, 3, {"1", "0", "0", "0", "1", "0", "-c0^-1*(Y + c1)", "-c0^-1*(-X + c2)", "1"}),
      table("L", 2, 3, 3, {"1", "0", "0", "-X*c0^-1", "1", "0", "-Y*c0^-1", "0", "1"},
            {"1", "0", "0", "-c0^-1*X", "1", "0", "-c0^-1*Y", "0", "1"}),
      table("L", 3, 1, 1, {"1"}),

      table("D", 0, 3, 1, {"X", "Y", "0"}, {"X", "Y", "T + c0^-1*((Y + c1)*X + (-X + c2)*Y)"}),
      table("D", 1, 3, 3,
            {"0", "0", "0",                                                          //
             "-T - c3 - X*c0^-1*(Y + c1)", "-c4 + X*c0^-1*(X - c2)", "0",            //
             "-c5 - Y*c0^-1*(Y + c1)", "-T - c6 + Y*c0^-1*(X - c2)", "0"},
            {"0", "0", "0",                                                          //
             "-T - c3 - c0^-1*X*(Y + c1)", "-c4 + c0^-1*X*(X - c2)", "0",            //
             "-c5 - c0^-1*Y*(Y + c1)", "-T - c6 + Y*c0^-1*(X - c2)", "0"}),
      table("D", 2, 1, 3, {"0", "-Y - c1", "X - c2"}),

      table("Boxtilde", 0, 1, 1, {"0"}),
      table("Boxtilde", 1, 3, 3, {"0", "0", "0", "0", "0", "0", "c0*c1", "c0*c2", "c0*c0"}),
      table("Boxtilde", 2, 3, 3, diag3("c0^2", "0", "0")),
      table("Boxtilde", 3, 1, 1, {"0"}),

      table("Ptilde", 0, 1, 1, {"1"}),
      table("Ptilde", 1, 3, 3, {"1", "0", "0", "0", "1", "0", "-c0^-1*c1", "-c0^-1*c2", "0"}),
      table("Ptilde", 2, 3, 3, diag3("0", "1", "1")),
      table("Ptilde", 3, 1, 1, {"1"}),

      table("Ltilde", 0, 1, 1, {"1"}),
      table("Ltilde", 1, 3, 3, {"1", "0", "0", "0", "1", "0", "-c0^-1*c1", "-c0^-1*c2", "1"}),
      table("Ltilde", 2, 3, 3, diag3("1", "1", "1")),
      table("Ltilde", 3, 1, 1, {"1"}),

      table("Dtilde", 0, 3, 1, zeros(3)),
      table("Dtilde", 1, 3, 3, {"0", "0", "0", "-c3", "-c4", "0", "-c5", "-c6", "0"}),
      table("Dtilde", 2, 1, 3, {"0", "-c1", "-c2"}),
  };
}

}  // namespace filtcx::contact
