#pragma once

// Complete flags indexed by codimension, the relative position of a pair of
// flags, and a common adapted basis witnessing it.
//
// For flags P and Q in H = k^d there is a unique permutation sigma and a
// basis e_1..e_d with e_i in P^{i-1} minus P^i and e_i in Q^{sigma(i)-1}
// minus Q^{sigma(i)}. Consequently
//
//     dim(P^i ∩ Q^j) = #{ l : l > i and sigma(l) > j },
//
// which is how sigma is read off from the table of intersection dimensions.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/subspace.hpp"

namespace schubert {

template <Field F>
class Flag {
 public:
  // steps[i] has codimension i; steps.front() = H, steps.back() = 0.
  explicit Flag(std::vector<Subspace<F>> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw dimension_error("Flag: no steps");
    const std::size_t d = steps_.front().ambient_dim();
    if (steps_.size() != d + 1) throw dimension_error("Flag: expected ambient_dim + 1 steps");
    for (std::size_t i = 0; i <= d; ++i) {
      if (steps_[i].ambient_dim() != d) throw dimension_error("Flag: ambient mismatch between steps");
      if (steps_[i].dim() != d - i) throw dimension_error("Flag: step " + std::to_string(i) + " has wrong dimension");
      if (i > 0 && !contains(steps_[i - 1], steps_[i])) throw dimension_error("Flag: steps are not nested");
    }
  }

  std::size_t ambient_dim() const { return steps_.size() - 1; }
  const F& field() const { return steps_.front().field(); }
  // The codimension-i subspace P^i.
  const Subspace<F>& operator[](std::size_t i) const { return steps_.at(i); }
  const std::vector<Subspace<F>>& steps() const { return steps_; }

  friend bool operator==(const Flag&, const Flag&) = default;

 private:
  std::vector<Subspace<F>> steps_;
};

// Flag with P^i = span(v_{i+1}, ..., v_d) where v_k is row k-1 of `vectors`.
template <Field F>
Flag<F> flag_from_basis(const Matrix<F>& vectors) {
  const std::size_t d = vectors.cols();
  if (vectors.rows() != d) throw dimension_error("flag_from_basis: need exactly d vectors in k^d");
  if (rank(vectors) != d) throw std::invalid_argument("flag_from_basis: vectors are linearly dependent");
  std::vector<Subspace<F>> steps;
  steps.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<std::size_t> tail;
    for (std::size_t k = i; k < d; ++k) tail.push_back(k);
    steps.emplace_back(vectors.select_rows(tail));
  }
  return Flag<F>(std::move(steps));
}

template <Field F>
Flag<F> standard_flag(const F& field, std::size_t d) {
  return flag_from_basis(Matrix<F>::identity(field, d));
}

template <Field F>
Flag<F> opposite_flag(const F& field, std::size_t d) {
  Matrix<F> m(field, d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1 - i) = field.one();
  return flag_from_basis(m);
}

// Table entry [i][j] = dim(P^i ∩ Q^j), 0 <= i, j <= d.
using DimTable = std::vector<std::vector<std::size_t>>;

namespace detail {

template <Field F>
std::vector<std::vector<Subspace<F>>> intersection_grid(const Flag<F>& p, const Flag<F>& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw dimension_error("flag pair: ambient dimensions differ");
  const std::size_t d = p.ambient_dim();
  std::vector<std::vector<Subspace<F>>> grid(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    grid[i].reserve(d + 1);
    for (std::size_t j = 0; j <= d; ++j) grid[i].push_back(intersect(p[i], q[j]));
  }
  return grid;
}

inline Permutation permutation_from_table(const DimTable& t) {
  const std::size_t d = t.size() - 1;
  std::vector<int> images(d, 0);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= d; ++j) {
      // Number of l == i with sigma(l) == j, by inclusion-exclusion.
      long jump = static_cast<long>(t[i - 1][j - 1]) - static_cast<long>(t[i][j - 1]) -
                  static_cast<long>(t[i - 1][j]) + static_cast<long>(t[i][j]);
      if (jump == 1) {
        if (images[i - 1] != 0) throw std::logic_error("relative_position: inconsistent dimension table");
        images[i - 1] = static_cast<int>(j);
      } else if (jump != 0) {
        throw std::logic_error("relative_position: inconsistent dimension table");
      }
    }
  return Permutation(std::move(images));
}

}  // namespace detail

template <Field F>
DimTable dim_table(const Flag<F>& p, const Flag<F>& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw dimension_error("dim_table: ambient dimensions differ");
  const std::size_t d = p.ambient_dim();
  DimTable t(d + 1, std::vector<std::size_t>(d + 1));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) t[i][j] = intersect(p[i], q[j]).dim();
  return t;
}

template <Field F>
struct RelPosition {
  Permutation sigma;
  // Row i-1 is the basis vector e_i.
  Matrix<F> basis;
};

template <Field F>
RelPosition<F> relative_position(const Flag<F>& p, const Flag<F>& q) {
  const auto grid = detail::intersection_grid(p, q);
  const std::size_t d = p.ambient_dim();
  DimTable table(d + 1, std::vector<std::size_t>(d + 1));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) table[i][j] = grid[i][j].dim();
  Permutation sigma = detail::permutation_from_table(table);

  Matrix<F> basis(p.field(), d, d);
  for (std::size_t i = 1; i <= d; ++i) {
    const std::size_t j = static_cast<std::size_t>(sigma(static_cast<int>(i)));
    const Subspace<F>& top = grid[i - 1][j - 1];
    const Subspace<F> lower = sum(grid[i][j - 1], grid[i - 1][j]);
    // top / lower is one-dimensional; take the first echelon row of top
    // that escapes lower.
    bool found = false;
    for (std::size_t k = 0; k < top.dim() && !found; ++k) {
      auto row = top.basis().row(k);
      if (!lower.contains(row)) {
        for (std::size_t c = 0; c < d; ++c) basis(i - 1, c) = row[c];
        found = true;
      }
    }
    if (!found) throw std::logic_error("relative_position: no witness vector");
  }
  return {std::move(sigma), std::move(basis)};
}

struct FlagPairClass {
  enum class Kind { Identical, Transverse, AlmostTransverse, General };
  Kind kind = Kind::General;
  // For AlmostTransverse: dim(P^t ∩ Q^{d-t}) = 1.
  std::size_t t = 0;
  std::size_t t_prime = 0;

  friend bool operator==(const FlagPairClass&, const FlagPairClass&) = default;
};

inline std::string to_string(FlagPairClass::Kind k) {
  switch (k) {
    case FlagPairClass::Kind::Identical: return "identical";
    case FlagPairClass::Kind::Transverse: return "transverse";
    case FlagPairClass::Kind::AlmostTransverse: return "almost";
    case FlagPairClass::Kind::General: return "general";
  }
  return "general";
}

// The defect index t when exactly one complementary intersection
// P^i ∩ Q^{d-i} (0 < i < d) is a line and all others vanish.
inline std::optional<std::size_t> almost_transverse_defect(const DimTable& t) {
  const std::size_t d = t.size() - 1;
  std::optional<std::size_t> defect;
  for (std::size_t i = 1; i < d; ++i) {
    const std::size_t v = t[i][d - i];
    if (v == 0) continue;
    if (v > 1 || defect) return std::nullopt;
    defect = i;
  }
  return defect;
}

inline FlagPairClass classify(const DimTable& t, const Permutation& sigma) {
  const std::size_t d = t.size() - 1;
  if (sigma.is_identity()) return {FlagPairClass::Kind::Identical, 0, 0};
  bool transverse = true;
  for (std::size_t i = 1; i < d; ++i)
    if (t[i][d - i] != 0) transverse = false;
  if (transverse) return {FlagPairClass::Kind::Transverse, 0, 0};
  if (auto defect = almost_transverse_defect(t)) return {FlagPairClass::Kind::AlmostTransverse, *defect, d - *defect};
  return {FlagPairClass::Kind::General, 0, 0};
}

template <Field F>
FlagPairClass classify(const Flag<F>& p, const Flag<F>& q) {
  const DimTable t = dim_table(p, q);
  return classify(t, detail::permutation_from_table(t));
}

// ---------------------------------------------------------------------------
// Random constructions.

template <Field F, class Rng>
Matrix<F> random_matrix(const F& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.random(rng);
  return m;
}

template <Field F, class Rng>
Matrix<F> random_invertible(const F& field, std::size_t d, Rng& rng) {
  for (;;) {
    Matrix<F> g = random_matrix(field, d, d, rng);
    if (rank(g) == d) return g;
  }
}

template <Field F, class Rng>
Flag<F> random_flag(const F& field, std::size_t d, Rng& rng) {
  return flag_from_basis(random_invertible(field, d, rng));
}

// A flag pair whose relative position is exactly `sigma`: start from the
// coordinate flags realizing sigma, then apply one random change of basis
// to both.
template <Field F, class Rng>
std::pair<Flag<F>, Flag<F>> flag_pair_with_position(const F& field, const Permutation& sigma, Rng& rng) {
  const std::size_t d = sigma.size();
  const Matrix<F> g = random_invertible(field, d, rng);
  const Permutation inv = sigma.inverse();
  std::vector<std::size_t> q_order(d);
  for (std::size_t k = 0; k < d; ++k) q_order[k] = static_cast<std::size_t>(inv(static_cast<int>(k + 1)) - 1);
  return {flag_from_basis(g), flag_from_basis(g.select_rows(q_order))};
}

// Same construction without the change of basis.
template <Field F>
std::pair<Flag<F>, Flag<F>> coordinate_flag_pair(const F& field, const Permutation& sigma) {
  const std::size_t d = sigma.size();
  const Matrix<F> e = Matrix<F>::identity(field, d);
  const Permutation inv = sigma.inverse();
  std::vector<std::size_t> q_order(d);
  for (std::size_t k = 0; k < d; ++k) q_order[k] = static_cast<std::size_t>(inv(static_cast<int>(k + 1)) - 1);
  return {flag_from_basis(e), flag_from_basis(e.select_rows(q_order))};
}

// w0 composed with the adjacent transposition (t t+1): the relative
// position of an almost-transverse pair with defect at t.
inline Permutation almost_transverse_position(std::size_t d, std::size_t t) {
  return compose(Permutation::longest(d), Permutation::adjacent_transposition(d, t));
}

}  // namespace schubert
