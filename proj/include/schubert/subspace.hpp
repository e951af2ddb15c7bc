#pragma once

// Subspaces of a fixed ambient space k^d, stored as the reduced row-echelon
// basis of their row span. The representation is canonical: two Subspace
// values are equal iff they describe the same subspace.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/matrix.hpp"

namespace schubert {

template <Field F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  // Row span of `generators`; generators may be dependent.
  explicit Subspace(Matrix<F> generators) : basis_(std::move(generators)) { pivots_ = rref_in_place(basis_); }

  static Subspace zero(const F& field, std::size_t ambient) { return Subspace(Matrix<F>(field, 0, ambient)); }
  static Subspace full(const F& field, std::size_t ambient) { return Subspace(Matrix<F>::identity(field, ambient)); }
  static Subspace span(const F& field, std::size_t ambient, const std::vector<Vector<F>>& vectors) {
    return Subspace(Matrix<F>::from_rows(field, ambient, vectors));
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return dim() == 0; }

  bool contains(std::span<const value_type> v) const {
    if (v.size() != ambient_dim()) throw dimension_error("Subspace::contains: vector length mismatch");
    // Reduce v against the echelon basis; v is inside iff nothing is left.
    Vector<F> w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto c = pivots_[i];
      if (F::is_zero(w[c])) continue;
      auto factor = w[c];
      for (std::size_t j = c; j < w.size(); ++j) w[j] -= factor * basis_(i, j);
    }
    for (const auto& x : w)
      if (!F::is_zero(x)) return false;
    return true;
  }

  // Coordinates of a vector of this subspace in the echelon basis; these
  // are simply its entries in the pivot columns.
  Vector<F> coordinates(std::span<const value_type> v) const {
    Vector<F> c;
    c.reserve(dim());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {
template <Field F>
void check_same_ambient(const Subspace<F>& u, const Subspace<F>& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim())
    throw dimension_error(std::string(op) + ": ambient dimensions differ (" + std::to_string(u.ambient_dim()) +
                          " vs " + std::to_string(v.ambient_dim()) + ")");
}
}  // namespace detail

template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
  return Subspace<F>(kernel_basis(m));
}

template <Field F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
  detail::check_same_ambient(u, v, "sum");
  return Subspace<F>(u.basis().stack(v.basis()));
}

template <Field F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v) {
  detail::check_same_ambient(u, v, "intersect");
  if (u.is_zero() || v.is_zero()) return Subspace<F>::zero(u.field(), u.ambient_dim());
  // (x, y) with x U = y V; then x U spans the intersection.
  Matrix<F> stacked = u.basis().stack(v.basis());
  Matrix<F> relations = kernel_basis(stacked.transpose());
  Matrix<F> gens(u.field(), relations.rows(), u.ambient_dim());
  for (std::size_t k = 0; k < relations.rows(); ++k)
    for (std::size_t i = 0; i < u.dim(); ++i) {
      const auto& c = relations(k, i);
      if (F::is_zero(c)) continue;
      for (std::size_t j = 0; j < u.ambient_dim(); ++j) gens(k, j) += c * u.basis()(i, j);
    }
  return Subspace<F>(std::move(gens));
}

// True iff v is a subspace of u.
template <Field F>
bool contains(const Subspace<F>& u, const Subspace<F>& v) {
  detail::check_same_ambient(u, v, "contains");
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!u.contains(v.basis().row(i))) return false;
  return true;
}

template <Field F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v, const Subspace<F>& w) {
  return sum(sum(u, v), w);
}

}  // namespace schubert
