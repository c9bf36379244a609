#include <stdexcept>

#include "filtcx/contact.hpp"

namespace filtcx::contact {

SymbolicMatrix::SymbolicMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SymbolicMatrix: negative size");
}

SymbolicMatrix SymbolicMatrix::identity(int n) {
  SymbolicMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = NCOperator(Rational(1));
  return out;
}

SymbolicMatrix SymbolicMatrix::diagonal(const std::vector<NCOperator>& entries) {
  const int n = static_cast<int>(entries.size());
  SymbolicMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = entries[static_cast<std::size_t>(i)];
  return out;
}

bool SymbolicMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool SymbolicMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

SymbolicMatrix& SymbolicMatrix::operator+=(const SymbolicMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SymbolicMatrix: shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

SymbolicMatrix& SymbolicMatrix::operator-=(const SymbolicMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SymbolicMatrix: shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

SymbolicMatrix operator-(SymbolicMatrix a) {
  for (auto& e : a.entries_) e = -e;
  return a;
}

SymbolicMatrix operator*(const CoefPoly& f, SymbolicMatrix a) {
  for (auto& e : a.entries_) e = f * e;
  return a;
}

SymbolicMatrix multiply(const SymbolicMatrix& a, const SymbolicMatrix& b, Relations mode) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  SymbolicMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      for (int k = 0; k < a.cols(); ++k)
        if (!a(r, k).is_zero() && !b(k, c).is_zero()) out(r, c) += nc_multiply(a(r, k), b(k, c), mode);
  return out;
}

SymbolicMatrix transpose(const SymbolicMatrix& a) {
  SymbolicMatrix out(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

SymbolicMatrix from_rational(const MatrixQ& m) {
  SymbolicMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out(static_cast<int>(r), static_cast<int>(c)) = NCOperator(m(r, c));
  return out;
}

std::string to_string(const SymbolicMatrix& m) {
  std::string out;
  if (m.rows() == m.cols() && m.rows() > 1 && m.is_diagonal()) {
    out = "diag(";
    for (int i = 0; i < m.rows(); ++i) out += (i ? ", " : "") + to_string(m(i, i));
    return out + ")";
  }
  out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    out += r ? "; (" : "(";
    for (int c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += ")";
  }
  return out + "]";
}

std::vector<int> form_weights(int degree) {
  switch (degree) {
    case 0: return {0};
    case 1: return {1, 1, 2};
    case 2: return {2, 3, 3};
    case 3: return {4};
  }
  throw std::invalid_argument("form_weights: degree must be in 0..3");
}

SymbolicMatrix gr_of_symbolic(const SymbolicMatrix& m, int source_degree, int shift) {
  const auto src = form_weights(source_degree);
  const auto dst = form_weights(source_degree + shift);
  if (static_cast<int>(src.size()) != m.cols() || static_cast<int>(dst.size()) != m.rows())
    throw std::invalid_argument("gr_of_symbolic: shape does not match the degrees");
  SymbolicMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (dst[static_cast<std::size_t>(r)] == src[static_cast<std::size_t>(c)])
        out(r, c) = NCOperator(m(r, c).order_zero_part());
  return out;
}

namespace {

template <class Keep>
CoefPoly filter_monomials(const CoefPoly& f, Keep keep) {
  CoefPoly out;
  for (const auto& [mono, coef] : f.terms())
    if (keep(mono)) out.add_term(mono, coef);
  return out;
}

template <class Map>
SymbolicMatrix map_entries(const SymbolicMatrix& m, Map fn) {
  SymbolicMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = fn(m(r, c));
  return out;
}

}  // namespace

SymbolicMatrix specialize_heisenberg(const SymbolicMatrix& m, bool drop_fields) {
  return map_entries(m, [&](const NCOperator& e) {
    NCOperator out;
    for (const auto& [w, f] : e.terms()) {
      if (drop_fields && w.order() > 0) continue;
      Rational value(0);
      for (const auto& [mono, coef] : f.terms()) {
        bool survives = true;
        for (const auto& [s, exp] : mono)
          if (s.base != 0 || s.word.order() > 0) survives = false;
        if (survives) value += coef;
      }
      out.add(w, CoefPoly(value));
    }
    return out;
  });
}

SymbolicMatrix drop_c0_derivatives(const SymbolicMatrix& m) {
  return map_entries(m, [](const NCOperator& e) {
    NCOperator out;
    for (const auto& [w, f] : e.terms())
      out.add(w, filter_monomials(f, [](const Monomial& mono) {
                for (const auto& [s, exp] : mono)
                  if (s.base == 0 && s.word.order() > 0) return false;
                return true;
              }));
    return out;
  });
}

}  // namespace filtcx::contact
