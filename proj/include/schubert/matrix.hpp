#pragma once

// Dense matrices over an exact field, Gauss-Jordan elimination, and the
// plain-text matrix format used by the command-line tool.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "schubert/field.hpp"

namespace schubert {

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Field F>
using Vector = std::vector<typename F::value_type>;

template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw dimension_error("Matrix::from_rows: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  // Integer convenience constructor, mostly for tests.
  static Matrix from_ints(const F& field, std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m(field, rows.size(), cols);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != cols) throw dimension_error("Matrix::from_ints: ragged rows");
      std::size_t j = 0;
      for (long x : row) m(i, j++) = field.from_int(x);
      ++i;
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector<F> row_vector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Rows of *this followed by rows of other.
  Matrix stack(const Matrix& other) const {
    if (other.cols_ != cols_) throw dimension_error("Matrix::stack: column mismatch");
    Matrix m(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + data_.size());
    return m;
  }

  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix m(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols.size(); ++k) m(i, k) = (*this)(i, cols[k]);
    return m;
  }

  Matrix select_rows(std::span<const std::size_t> rows) const {
    Matrix m(field_, rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(rows[k], j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw dimension_error("Matrix multiply: inner dimension mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (F::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const value_type& x) { return F::is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<value_type> data_;
};

// In-place reduced row-echelon form. Zero rows are dropped, so afterwards
// m.rows() == rank. Returns the pivot column of each remaining row.
template <Field F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && F::is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const typename F::value_type inv = m.field().one() / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || F::is_zero(m(i, c))) continue;
      const typename F::value_type factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < rows) {
    Matrix<F> trimmed(m.field(), r, cols);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cols; ++j) trimmed(i, j) = std::move(m(i, j));
    m = std::move(trimmed);
  }
  return pivots;
}

template <Field F>
Matrix<F> rref(Matrix<F> m) {
  rref_in_place(m);
  return m;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> copy = m;
  return rref_in_place(copy).size();
}

// Determinant of a square matrix by elimination.
template <Field F>
typename F::value_type determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw dimension_error("determinant: matrix is not square");
  const std::size_t n = m.rows();
  auto det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && F::is_zero(m(p, c))) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const typename F::value_type inv = m.field().one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (F::is_zero(m(i, c))) continue;
      const typename F::value_type factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

// Basis (as rows, in reduced row-echelon form) of {v : m v = 0}.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  Matrix<F> r = m;
  auto pivots = rref_in_place(r);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);

  Matrix<F> k(m.field(), free.size(), cols);
  for (std::size_t t = 0; t < free.size(); ++t) {
    k(t, free[t]) = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) k(t, pivots[i]) = -r(i, free[t]);
  }
  rref_in_place(k);
  return k;
}

// ---------------------------------------------------------------------------
// Text format:
//   field Q            | field Fp <p>
//   <rows> <cols>
//   <entries...>       (integers or a/b, whitespace separated, one row per line)

using AnyField = std::variant<RationalField, PrimeField>;

inline AnyField parse_field_spec(const std::string& line) {
  std::istringstream in(line);
  std::string kw, name;
  in >> kw >> name;
  if (kw != "field") throw parse_error("expected 'field Q' or 'field Fp <p>', got '" + line + "'");
  if (name == "Q") {
    std::string extra;
    if (in >> extra) throw parse_error("trailing text after 'field Q'");
    return RationalField{};
  }
  if (name == "Fp") {
    long long p = 0;
    if (!(in >> p) || p <= 0) throw parse_error("missing prime in '" + line + "'");
    std::string extra;
    if (in >> extra) throw parse_error("trailing text after field prime");
    if (!is_prime(static_cast<std::uint64_t>(p))) throw parse_error(std::to_string(p) + " is not prime");
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw parse_error("unknown field '" + name + "'");
}

template <Field F>
std::string field_header(const F& field) {
  return "field " + field.name();
}

// Reads the body (dimension line and entries) after the field header.
template <Field F>
Matrix<F> read_matrix_body(std::istream& in, const F& field) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream dims(line);
  long long rows = -1, cols = -1;
  if (!(dims >> rows >> cols) || rows < 0 || cols < 0) throw parse_error("bad dimension line '" + line + "'");
  Matrix<F> m(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string tok;
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j) {
      if (!(in >> tok)) throw parse_error("matrix: too few entries");
      m(i, j) = field.parse(tok);
    }
  if (in >> tok) throw parse_error("matrix: unexpected trailing token '" + tok + "'");
  return m;
}

template <Field F>
void write_matrix(std::ostream& out, const Matrix<F>& m) {
  out << field_header(m.field()) << '\n' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.field().to_string(m(i, j));
    }
    out << '\n';
  }
}

template <Field F>
std::string to_text(const Matrix<F>& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

// A matrix whose field is only known at runtime.
using AnyMatrix = std::variant<Matrix<RationalField>, Matrix<PrimeField>>;

inline AnyMatrix read_matrix(std::istream& in) {
  std::string header;
  while (std::getline(in, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  AnyField field = parse_field_spec(header);
  return std::visit([&](const auto& f) -> AnyMatrix { return read_matrix_body(in, f); }, field);
}

inline AnyMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

}  // namespace schubert
