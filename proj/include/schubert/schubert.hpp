#pragma once

// Schubert varieties in Gr(r+1, H), their open strata, and Zariski tangent
// spaces of single Schubert varieties and of pairwise intersections.
//
// Two independent routes compute the tangent space of an intersection:
//
//   * tangent_dim_pair_formula: the closed form in terms of the relative
//     position of the induced flags on Lambda,
//         dim T = (rho - 1) + sum_j codim_H(P^{m(j)} + Q^{n(j)} + Lambda);
//   * tangent_dim_oracle: linearizes every defining minor of every rank
//     condition in an affine chart and takes the kernel dimension.
//
// The two never share code beyond the exact linear algebra layer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/flag.hpp"

namespace schubert {

class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Strictly increasing 0 <= a_0 < ... < a_r < d.
class SchubertIndex {
 public:
  SchubertIndex(std::size_t d, std::vector<int> seq) : d_(d), seq_(std::move(seq)) {
    if (seq_.empty()) throw std::invalid_argument("SchubertIndex: empty sequence");
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (seq_[i] < 0 || seq_[i] >= static_cast<int>(d_))
        throw std::invalid_argument("SchubertIndex: entry " + std::to_string(seq_[i]) + " outside [0, " +
                                    std::to_string(d_) + ")");
      if (i > 0 && seq_[i] <= seq_[i - 1]) throw std::invalid_argument("SchubertIndex: sequence not strictly increasing");
    }
  }

  static SchubertIndex minimal(std::size_t d, std::size_t r) {
    std::vector<int> s(r + 1);
    for (std::size_t i = 0; i <= r; ++i) s[i] = static_cast<int>(i);
    return {d, std::move(s)};
  }

  std::size_t d() const { return d_; }
  std::size_t r() const { return seq_.size() - 1; }
  int operator[](std::size_t i) const { return seq_.at(i); }
  const std::vector<int>& seq() const { return seq_; }

  bool is_active(std::size_t i) const {
    if (i == 0) return seq_[0] > 0;
    return seq_[i] > seq_[i - 1] + 1;
  }

  std::vector<std::size_t> active() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seq_.size(); ++i)
      if (is_active(i)) out.push_back(i);
    return out;
  }

  // sum (a_i - i)
  long codim() const {
    long c = 0;
    for (std::size_t i = 0; i < seq_.size(); ++i) c += seq_[i] - static_cast<long>(i);
    return c;
  }

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  std::size_t d_;
  std::vector<int> seq_;
};

inline std::string to_string(const SchubertIndex& a) {
  std::string s;
  for (std::size_t i = 0; i <= a.r(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

// All strictly increasing sequences of length r+1 in [0, d).
inline std::vector<SchubertIndex> all_schubert_indices(std::size_t d, std::size_t r) {
  std::vector<SchubertIndex> out;
  if (r + 1 > d) return out;
  std::vector<int> s(r + 1);
  for (std::size_t i = 0; i <= r; ++i) s[i] = static_cast<int>(i);
  for (;;) {
    out.emplace_back(d, s);
    // Advance to the next combination.
    std::size_t k = r + 1;
    while (k > 0 && s[k - 1] == static_cast<int>(d - (r + 1) + (k - 1))) --k;
    if (k == 0) break;
    ++s[k - 1];
    for (std::size_t m = k; m <= r; ++m) s[m] = s[m - 1] + 1;
  }
  return out;
}

inline long grassmannian_dim(std::size_t d, std::size_t r) {
  return static_cast<long>(r + 1) * (static_cast<long>(d) - static_cast<long>(r) - 1);
}

namespace detail {

template <Field F>
void check_point(const Subspace<F>& lambda, const Flag<F>& p, const SchubertIndex& a) {
  if (lambda.ambient_dim() != p.ambient_dim() || a.d() != p.ambient_dim())
    throw dimension_error("Schubert condition: ambient dimension mismatch");
  if (lambda.dim() != a.r() + 1)
    throw dimension_error("Schubert condition: point has dimension " + std::to_string(lambda.dim()) + ", expected " +
                          std::to_string(a.r() + 1));
}

}  // namespace detail

// a_i = max { c : dim(Lambda ∩ P^c) >= r+1-i }.
template <Field F>
SchubertIndex vanishing_sequence(const Subspace<F>& lambda, const Flag<F>& p) {
  const std::size_t d = p.ambient_dim();
  if (lambda.ambient_dim() != d) throw dimension_error("vanishing_sequence: ambient mismatch");
  if (lambda.dim() == 0) throw dimension_error("vanishing_sequence: zero subspace");
  const std::size_t r = lambda.dim() - 1;
  std::vector<std::size_t> dims(d + 1);
  for (std::size_t c = 0; c <= d; ++c) dims[c] = intersect(lambda, p[c]).dim();
  std::vector<int> seq(r + 1);
  for (std::size_t i = 0; i <= r; ++i) {
    int best = 0;
    for (std::size_t c = 0; c < d; ++c)
      if (dims[c] >= r + 1 - i) best = static_cast<int>(c);
    seq[i] = best;
  }
  return {d, std::move(seq)};
}

template <Field F>
bool in_sigma(const Subspace<F>& lambda, const Flag<F>& p, const SchubertIndex& a) {
  detail::check_point(lambda, p, a);
  for (std::size_t i = 0; i <= a.r(); ++i)
    if (intersect(lambda, p[a[i]]).dim() < a.r() + 1 - i) return false;
  return true;
}

// The same predicate imposed only at active indices.
template <Field F>
bool in_sigma_active_only(const Subspace<F>& lambda, const Flag<F>& p, const SchubertIndex& a) {
  detail::check_point(lambda, p, a);
  for (auto i : a.active())
    if (intersect(lambda, p[a[i]]).dim() < a.r() + 1 - i) return false;
  return true;
}

template <Field F>
bool in_sigma_circ(const Subspace<F>& lambda, const Flag<F>& p, const SchubertIndex& a) {
  if (!in_sigma(lambda, p, a)) throw precondition_error("in_sigma_circ: point is not in the Schubert variety");
  for (auto i : a.active())
    if (intersect(lambda, p[a[i]]).dim() != a.r() + 1 - i) return false;
  return true;
}

// dim { phi : Lambda -> H/Lambda : phi(Lambda ∩ P^{a_i}) ⊆ (P^{a_i} + Lambda)/Lambda, i in S }
// with S the active indices at which the defining inequality is an equality.
template <Field F>
long tangent_dim_single(const Subspace<F>& lambda, const Flag<F>& p, const SchubertIndex& a) {
  if (!in_sigma(lambda, p, a)) throw precondition_error("tangent_dim_single: point is not in the Schubert variety");
  const std::size_t r = a.r(), d = p.ambient_dim();
  std::vector<std::size_t> S;
  for (auto i : a.active())
    if (intersect(lambda, p[a[i]]).dim() == r + 1 - i) S.push_back(i);

  // Lambda ∩ P^{a_i}, i in S, is a strictly decreasing chain. A basis of
  // Lambda adapted to it splits the map space into independent blocks.
  long total = 0;
  std::size_t outside = r + 1;  // basis vectors not yet assigned
  for (std::size_t k = 0; k < S.size(); ++k) {
    const std::size_t i = S[k];
    const std::size_t dim_here = intersect(lambda, p[a[i]]).dim();
    const std::size_t dim_next = k + 1 < S.size() ? intersect(lambda, p[a[S[k + 1]]]).dim() : 0;
    // Vectors before the chain starts map freely.
    if (k == 0) total += static_cast<long>(outside - dim_here) * static_cast<long>(d - r - 1);
    const std::size_t target = sum(p[a[i]], lambda).dim() - (r + 1);
    total += static_cast<long>(dim_here - dim_next) * static_cast<long>(target);
  }
  if (S.empty()) total = static_cast<long>(r + 1) * static_cast<long>(d - r - 1);
  return total;
}

// ---------------------------------------------------------------------------
// Pairs of Schubert conditions.

struct TangentTerm {
  std::size_t j;
  int m;
  int n;
  long codim;
  friend bool operator==(const TangentTerm&, const TangentTerm&) = default;
};

struct JumpWitness {
  std::size_t i;        // active index of a with a_i = t
  std::size_t i_prime;  // active index of b with b_{i'} = t'
  std::size_t t;
  std::size_t t_prime;
  friend bool operator==(const JumpWitness&, const JumpWitness&) = default;
};

struct TangentReport {
  long dim = 0;
  long rho_minus_1 = 0;
  std::vector<TangentTerm> terms;
  Permutation sigma_on_lambda;
  FlagPairClass flag_class;
  bool jump = false;
  std::optional<JumpWitness> jump_witness;
  long bound = 0;
};

// A pair (P, a), (Q, b) with the relative position of the ambient flags
// precomputed, so that many points can be evaluated cheaply.
template <Field F>
class SchubertPair {
 public:
  SchubertPair(Flag<F> p, SchubertIndex a, Flag<F> q, SchubertIndex b)
      : p_(std::move(p)), a_(std::move(a)), q_(std::move(q)), b_(std::move(b)) {
    const std::size_t d = p_.ambient_dim();
    if (q_.ambient_dim() != d || a_.d() != d || b_.d() != d) throw dimension_error("SchubertPair: ambient mismatch");
    if (a_.r() != b_.r()) throw dimension_error("SchubertPair: index lengths differ");
    table_ = dim_table(p_, q_);
    tau_ = detail::permutation_from_table(table_);
    class_ = classify(table_, tau_);
    defect_ = almost_transverse_defect(table_);
  }

  const Flag<F>& p() const { return p_; }
  const Flag<F>& q() const { return q_; }
  const SchubertIndex& a() const { return a_; }
  const SchubertIndex& b() const { return b_; }
  std::size_t d() const { return p_.ambient_dim(); }
  std::size_t r() const { return a_.r(); }
  const DimTable& table() const { return table_; }
  const Permutation& tau() const { return tau_; }
  const FlagPairClass& flag_class() const { return class_; }
  const std::optional<std::size_t>& defect() const { return defect_; }

  // (r+1)(d-r-1) - sum(a_i - i) - sum(b_i - i): expected dimension of the intersection.
  long rho_minus_1() const { return grassmannian_dim(d(), r()) - a_.codim() - b_.codim(); }

  long coxeter_excess() const { return static_cast<long>(inversions(compose(Permutation::longest(d()), tau_))); }

  bool in_both(const Subspace<F>& lambda) const { return in_sigma(lambda, p_, a_) && in_sigma(lambda, q_, b_); }

  bool in_both_circ(const Subspace<F>& lambda) const {
    return in_both(lambda) && in_sigma_circ(lambda, p_, a_) && in_sigma_circ(lambda, q_, b_);
  }

  TangentReport tangent(const Subspace<F>& lambda) const;

  long coxeter_bound(const Subspace<F>& lambda) const {
    if (!in_both_circ(lambda)) throw precondition_error("coxeter_bound: point is not in both open strata");
    return rho_minus_1() + coxeter_excess();
  }

  // Jump conditions: t = a_i and t' = b_{i'} with i, i'
  // active, and P^t ∩ Q^{t'} ⊆ Lambda ⊆ P^t + Q^{t'}.
  std::optional<JumpWitness> jump_witness(const Subspace<F>& lambda) const {
    if (!defect_) return std::nullopt;
    const std::size_t t = *defect_, tp = d() - t;
    std::optional<std::size_t> i, ip;
    for (auto k : a_.active())
      if (a_[k] == static_cast<int>(t)) i = k;
    for (auto k : b_.active())
      if (b_[k] == static_cast<int>(tp)) ip = k;
    if (!i || !ip) return std::nullopt;
    if (!contains(lambda, intersect(p_[t], q_[tp]))) return std::nullopt;
    if (!contains(sum(p_[t], q_[tp]), lambda)) return std::nullopt;
    return JumpWitness{*i, *ip, t, tp};
  }

 private:
  Flag<F> p_;
  SchubertIndex a_;
  Flag<F> q_;
  SchubertIndex b_;
  DimTable table_;
  Permutation tau_;
  FlagPairClass class_;
  std::optional<std::size_t> defect_;
};

namespace detail {

// The complete flag Lambda ∩ P^• as a flag of k^{r+1}, in coordinates of
// Lambda's echelon basis, with repeated steps removed.
template <Field F>
Flag<F> induced_flag(const Subspace<F>& lambda, const Flag<F>& p) {
  const std::size_t d = p.ambient_dim(), n = lambda.dim();
  std::vector<Subspace<F>> steps;
  std::size_t last = n + 1;
  for (std::size_t c = 0; c <= d; ++c) {
    Subspace<F> w = intersect(lambda, p[c]);
    if (w.dim() == last) continue;
    last = w.dim();
    Matrix<F> coords(lambda.field(), w.dim(), n);
    for (std::size_t k = 0; k < w.dim(); ++k) {
      auto v = lambda.coordinates(w.basis().row(k));
      for (std::size_t m = 0; m < n; ++m) coords(k, m) = v[m];
    }
    steps.emplace_back(std::move(coords));
  }
  return Flag<F>(std::move(steps));
}

}  // namespace detail

template <Field F>
TangentReport SchubertPair<F>::tangent(const Subspace<F>& lambda) const {
  if (!in_sigma(lambda, p_, a_) || !in_sigma(lambda, q_, b_))
    throw precondition_error("tangent_dim_pair_formula: point is not in both Schubert varieties");
  if (!in_sigma_circ(lambda, p_, a_) || !in_sigma_circ(lambda, q_, b_))
    throw precondition_error("tangent_dim_pair_formula: point is not in both open strata");

  const std::size_t r = this->r(), d = this->d();
  TangentReport rep;
  rep.rho_minus_1 = rho_minus_1();
  rep.flag_class = class_;
  rep.sigma_on_lambda = relative_position(detail::induced_flag(lambda, p_), detail::induced_flag(lambda, q_)).sigma;

  long total = 0;
  for (std::size_t j = 0; j <= r; ++j) {
    int m = 0, n = 0;
    for (auto i : a_.active())
      if (i <= j) m = std::max(m, a_[i]);
    const std::size_t sj = static_cast<std::size_t>(rep.sigma_on_lambda(static_cast<int>(j + 1)) - 1);
    for (auto i : b_.active())
      if (i <= sj) n = std::max(n, b_[i]);
    const long codim = static_cast<long>(d) - static_cast<long>(sum(p_[m], q_[n], lambda).dim());
    rep.terms.push_back({j, m, n, codim});
    total += codim;
  }
  rep.dim = rep.rho_minus_1 + total;
  rep.jump_witness = jump_witness(lambda);
  rep.jump = rep.jump_witness.has_value();
  rep.bound = rep.rho_minus_1 + coxeter_excess();
  return rep;
}

template <Field F>
TangentReport tangent_dim_pair_formula(const Subspace<F>& lambda, const Flag<F>& p, const SchubertIndex& a,
                                       const Flag<F>& q, const SchubertIndex& b) {
  return SchubertPair<F>(p, a, q, b).tangent(lambda);
}

template <Field F>
long coxeter_bound(const Subspace<F>& lambda, const Flag<F>& p, const SchubertIndex& a, const Flag<F>& q,
                   const SchubertIndex& b) {
  return SchubertPair<F>(p, a, q, b).coxeter_bound(lambda);
}

// ---------------------------------------------------------------------------
// Determinantal oracle.

template <Field F>
struct SchubertCondition {
  Flag<F> flag;
  SchubertIndex index;
};

namespace detail {

// All size-k subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t m = i; m < k; ++m) s[m] = s[m - 1] + 1;
  }
  return out;
}

}  // namespace detail

// Zariski tangent space dimension of the scheme cut out in Gr(r+1, H) by
// all rank conditions rank(Lambda -> H/P^{a_i}) <= i, for every condition and
// every index i. Tangent vectors are written Lambda + eps*M*C with C a
// fixed complement of Lambda; each (i+1)-minor contributes its linear part
// in M.
template <Field F>
long tangent_dim_oracle(const Subspace<F>& lambda, const std::vector<SchubertCondition<F>>& conditions) {
  const F& field = lambda.field();
  const std::size_t d = lambda.ambient_dim(), n = lambda.dim();
  if (n == 0) throw dimension_error("tangent_dim_oracle: zero subspace");
  const std::size_t codim = d - n;
  const std::size_t vars = n * codim;

  // Complement: coordinate vectors at the non-pivot columns of Lambda.
  Matrix<F> complement(field, codim, d);
  {
    std::vector<bool> pivot(d, false);
    for (auto c : lambda.pivots()) pivot[c] = true;
    std::size_t k = 0;
    for (std::size_t c = 0; c < d; ++c)
      if (!pivot[c]) complement(k++, c) = field.one();
  }

  std::vector<Vector<F>> equations;
  for (const auto& cond : conditions) {
    detail::check_point(lambda, cond.flag, cond.index);
    for (std::size_t i = 0; i <= cond.index.r(); ++i) {
      const Subspace<F>& target = cond.flag[cond.index[i]];
      // Functionals vanishing on P^{a_i}: coordinates on H / P^{a_i}.
      const Matrix<F> functionals = kernel_basis(target.basis());
      const std::size_t qdim = functionals.rows();
      const std::size_t s = i + 1;
      if (s > n || s > qdim) continue;
      const Matrix<F> ft = functionals.transpose();
      const Matrix<F> n0 = lambda.basis() * ft;  // n x qdim
      const Matrix<F> cq = complement * ft;      // codim x qdim
      if (rank(n0) > i) throw precondition_error("tangent_dim_oracle: point violates a rank condition");

      const auto row_sets = detail::subsets(n, s);
      const auto col_sets = detail::subsets(qdim, s);
      for (const auto& rows : row_sets)
        for (const auto& cols : col_sets) {
          Vector<F> eq(vars, field.zero());
          bool nonzero = false;
          Matrix<F> block = n0.select_rows(rows).select_columns(cols);
          for (std::size_t ri = 0; ri < s; ++ri) {
            const std::size_t k = rows[ri];
            for (std::size_t l = 0; l < codim; ++l) {
              Matrix<F> replaced = block;
              for (std::size_t ci = 0; ci < s; ++ci) replaced(ri, ci) = cq(l, cols[ci]);
              auto coeff = determinant(std::move(replaced));
              if (!F::is_zero(coeff)) {
                eq[k * codim + l] = coeff;
                nonzero = true;
              }
            }
          }
          if (nonzero) equations.push_back(std::move(eq));
        }
    }
  }
  if (equations.empty() || vars == 0) return static_cast<long>(vars);
  return static_cast<long>(vars - rank(Matrix<F>::from_rows(field, vars, equations)));
}

template <Field F>
long tangent_dim_oracle(const Subspace<F>& lambda, const SchubertPair<F>& pair) {
  return tangent_dim_oracle(lambda, std::vector<SchubertCondition<F>>{{pair.p(), pair.a()}, {pair.q(), pair.b()}});
}

// ---------------------------------------------------------------------------
// Sampling.

namespace detail {

template <Field F, class Rng>
Vector<F> random_vector_in(const Subspace<F>& s, Rng& rng) {
  Vector<F> v(s.ambient_dim(), s.field().zero());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    auto c = s.field().random(rng);
    if (F::is_zero(c)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * s.basis()(k, j);
  }
  return v;
}

}  // namespace detail

// A random point of the Schubert variety: v_i random in P^{a_i}.
template <Field F, class Rng>
std::optional<Subspace<F>> sample_schubert_point(const Flag<F>& p, const SchubertIndex& a, Rng& rng,
                                                 int attempts = 64) {
  for (int t = 0; t < attempts; ++t) {
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i <= a.r(); ++i) vs.push_back(detail::random_vector_in(p[a[i]], rng));
    Subspace<F> lambda = Subspace<F>::span(p.field(), p.ambient_dim(), vs);
    if (lambda.dim() == a.r() + 1) return lambda;
  }
  return std::nullopt;
}

// A random point of Sigma_{P,a} that often lies off the open stratum: an
// index c >= a, then v_i drawn from P^{c_i}. Half of the time c is taken
// among those with c_{i-1} >= a_i at some active i > 0, whose generic points
// have excess vanishing.
template <Field F, class Rng>
std::optional<Subspace<F>> sample_schubert_point_any_stratum(const Flag<F>& p, const SchubertIndex& a, Rng& rng) {
  std::vector<SchubertIndex> above, excess;
  for (auto& c : all_schubert_indices(a.d(), a.r())) {
    bool dominates = true, off = false;
    for (std::size_t i = 0; i <= a.r(); ++i) dominates = dominates && c[i] >= a[i];
    if (!dominates) continue;
    for (auto i : a.active())
      if (i > 0 && c[i - 1] >= a[i]) off = true;
    if (off) excess.push_back(c);
    above.push_back(std::move(c));
  }
  const auto& pool = (!excess.empty() && rng() % 2) ? excess : above;
  return sample_schubert_point(p, pool[rng() % pool.size()], rng);
}

inline constexpr int kSampleAttempts = 64;

// Attempts to build Lambda in both open strata from vectors
// v_j ∈ P^{a_j} ∩ Q^{b_{pi(j)}} (∩ within), for the reversal pi first and
// random pi afterwards. When `through` (a line) is given, one v_j whose
// room contains it is replaced by its generator. Membership is verified
// after the fact.
template <Field F>
std::optional<Subspace<F>> sample_sigma_circ_point(const SchubertPair<F>& pair, std::uint64_t seed,
                                                   const std::optional<Subspace<F>>& within = std::nullopt,
                                                   int attempts = kSampleAttempts,
                                                   const std::optional<Subspace<F>>& through = std::nullopt) {
  if (through && through->dim() != 1) throw dimension_error("sample_sigma_circ_point: 'through' must be a line");
  std::mt19937_64 rng(seed);
  const std::size_t r = pair.r(), d = pair.d();
  std::vector<std::size_t> pi(r + 1);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    for (std::size_t j = 0; j <= r; ++j) pi[j] = r - j;
    if (attempt > 0)
      for (std::size_t j = r; j > 0; --j) std::swap(pi[j], pi[rng() % (j + 1)]);
    std::vector<Subspace<F>> rooms;
    std::vector<std::size_t> hosts;
    for (std::size_t j = 0; j <= r; ++j) {
      rooms.push_back(intersect(pair.p()[pair.a()[j]], pair.q()[pair.b()[pi[j]]]));
      if (through && contains(rooms.back(), *through)) hosts.push_back(j);
      if (within) rooms.back() = intersect(rooms.back(), *within);
    }
    if (through && hosts.empty()) continue;
    const std::size_t host = through ? hosts[rng() % hosts.size()] : r + 1;
    std::vector<Vector<F>> vs;
    bool ok = true;
    for (std::size_t j = 0; j <= r && ok; ++j) {
      if (j == host) vs.push_back(through->basis().row_vector(0));
      else if (rooms[j].is_zero()) ok = false;
      else vs.push_back(detail::random_vector_in(rooms[j], rng));
    }
    if (!ok) continue;
    Subspace<F> lambda = Subspace<F>::span(pair.p().field(), d, vs);
    if (lambda.dim() != r + 1) continue;
    if (pair.in_both_circ(lambda)) return lambda;
  }
  return std::nullopt;
}

template <Field F>
std::optional<Subspace<F>> sample_sigma_circ_point(const Flag<F>& p, const SchubertIndex& a, const Flag<F>& q,
                                                   const SchubertIndex& b, std::uint64_t seed) {
  return sample_sigma_circ_point(SchubertPair<F>(p, a, q, b), seed);
}

}  // namespace schubert
