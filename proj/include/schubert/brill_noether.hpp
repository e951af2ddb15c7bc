#pragma once

// Brill-Noether numerology with two marked points, fiberwise models of
// linear series on a twice-marked genus-1 curve, and refined limit linear
// series on chains of genus-0 and genus-1 curves.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/schubert.hpp"

namespace schubert {

class unsupported_genus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// g, r, d with vanishing sequences 0 <= a_0 < ... < a_r <= d (and b).
// Unlike SchubertIndex, the top entry may equal d.
struct BNData {
  int g = 0;
  int r = 0;
  int d = 0;
  std::vector<int> a;
  std::vector<int> b;

  BNData() = default;
  BNData(int g_, int r_, int d_, std::vector<int> a_, std::vector<int> b_)
      : g(g_), r(r_), d(d_), a(std::move(a_)), b(std::move(b_)) {
    validate();
  }

  // Minimal sequences (0, 1, ..., r) at both points.
  static BNData unramified(int g, int r, int d) {
    std::vector<int> s(static_cast<std::size_t>(r + 1));
    for (int j = 0; j <= r; ++j) s[static_cast<std::size_t>(j)] = j;
    return {g, r, d, s, s};
  }

  void validate() const {
    if (g < 0 || r < 0 || d < 0) throw std::invalid_argument("BNData: g, r, d must be nonnegative");
    auto check = [this](const std::vector<int>& s, const char* name) {
      if (s.size() != static_cast<std::size_t>(r + 1))
        throw std::invalid_argument(std::string("BNData: sequence ") + name + " must have r+1 entries");
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 0 || s[j] > d) throw std::invalid_argument(std::string("BNData: entry of ") + name + " outside [0, d]");
        if (j > 0 && s[j] <= s[j - 1]) throw std::invalid_argument(std::string("BNData: ") + name + " not strictly increasing");
      }
    };
    check(a, "a");
    check(b, "b");
  }

  friend bool operator==(const BNData&, const BNData&) = default;
};

inline long ramification_weight(const std::vector<int>& s) {
  long w = 0;
  for (std::size_t j = 0; j < s.size(); ++j) w += s[j] - static_cast<long>(j);
  return w;
}

// g - (r+1)(r+g-d) - sum(a_j - j) - sum(b_j - j)
inline long rho(int g, int r, int d, const std::vector<int>& a, const std::vector<int>& b) {
  return g - static_cast<long>(r + 1) * (r + g - d) - ramification_weight(a) - ramification_weight(b);
}

inline long rho(const BNData& x) { return rho(x.g, x.r, x.d, x.a, x.b); }

// g - sum over j with a_j + b_{r-j} > d - g of (a_j + b_{r-j} - (d - g))
inline long rho_hat(int g, int r, int d, const std::vector<int>& a, const std::vector<int>& b) {
  long excess = 0;
  for (int j = 0; j <= r; ++j) {
    const long s = a[static_cast<std::size_t>(j)] + b[static_cast<std::size_t>(r - j)];
    if (s > d - g) excess += s - (d - g);
  }
  return g - excess;
}

inline long rho_hat(const BNData& x) { return rho_hat(x.g, x.r, x.d, x.a, x.b); }

// For every j > 0 active in `required`: #{j' : attained_j' >= required_j} == r+1-j.
inline bool gcirc_membership(const std::vector<int>& attained, const std::vector<int>& required) {
  if (attained.size() != required.size()) throw precondition_error("gcirc_membership: length mismatch");
  for (std::size_t j = 0; j < required.size(); ++j)
    if (attained[j] < required[j]) throw precondition_error("gcirc_membership: attained sequence below required");
  const std::size_t n = required.size();
  for (std::size_t j = 1; j < n; ++j) {
    if (required[j] <= required[j - 1] + 1) continue;
    const auto count = static_cast<std::size_t>(
        std::count_if(attained.begin(), attained.end(), [&](int x) { return x >= required[j]; }));
    if (count != n - j) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Genus-1 fibers over Pic^d.

struct FiberKind {
  enum class Kind { Generic, AllP, AllQ, Mixed };
  Kind kind = Kind::Generic;
  int a = 0;  // Mixed only: L = O(aP + (d-a)Q)

  static FiberKind generic() { return {Kind::Generic, 0}; }
  static FiberKind all_p() { return {Kind::AllP, 0}; }
  static FiberKind all_q() { return {Kind::AllQ, 0}; }
  static FiberKind mixed(int a) { return {Kind::Mixed, a}; }

  friend bool operator==(const FiberKind&, const FiberKind&) = default;
};

inline std::string to_string(const FiberKind& k) {
  switch (k.kind) {
    case FiberKind::Kind::Generic: return "generic";
    case FiberKind::Kind::AllP: return "allp";
    case FiberKind::Kind::AllQ: return "allq";
    case FiberKind::Kind::Mixed: return "mixed:" + std::to_string(k.a);
  }
  return "generic";
}

inline FiberKind parse_fiber_kind(const std::string& s) {
  if (s == "generic") return FiberKind::generic();
  if (s == "allp") return FiberKind::all_p();
  if (s == "allq") return FiberKind::all_q();
  if (s.rfind("mixed:", 0) == 0) {
    const std::string num = s.substr(6);
    if (!detail::is_integer_text(num)) throw std::invalid_argument("bad fiber kind '" + s + "'");
    return FiberKind::mixed(std::stoi(num));
  }
  throw std::invalid_argument("unknown fiber kind '" + s + "' (expected generic|allp|allq|mixed:<a>)");
}

// Flags of Gamma(X, L) ≅ k^d by vanishing order at P and at Q, with the
// Schubert indices describing the fiber.
template <Field F>
struct FiberModel {
  FiberKind kind;
  SchubertPair<F> pair;
  // Set when the top P (or Q) condition was relabeled from d to d-1.
  bool top_reindexed = false;
  // Set in the Mixed case a_j + b_{r-j} = d, where a_j was replaced by a-1
  // and the codimension-a step of the P flag was moved off the defect line.
  std::optional<std::size_t> richardson_index;

  // Expected dimension of the fiber: (r+1)(d-r-1) - codim(a') - codim(b').
  long expected_dim() const { return pair.rho_minus_1(); }
  // The fiber may jump by one exactly in the almost-transverse case.
  bool may_jump() const { return pair.flag_class().kind == FlagPairClass::Kind::AlmostTransverse; }
};

namespace detail {

template <Field F>
Flag<F> flag_from_order(const F& field, const std::vector<std::size_t>& order) {
  const std::size_t d = order.size();
  const Matrix<F> e = Matrix<F>::identity(field, d);
  return flag_from_basis(e.select_rows(order));
}

}  // namespace detail

// Returns nullopt when the fiber is empty.
template <Field F>
std::optional<FiberModel<F>> genus1_fiber_model(const F& field, const BNData& data, const FiberKind& kind) {
  data.validate();
  if (data.g != 1) throw unsupported_genus("genus1_fiber_model: genus must be 1, got " + std::to_string(data.g));
  if (data.d <= 0) throw precondition_error("genus1_fiber_model: degree must be positive");
  const int r = data.r, d = data.d;
  const auto ud = static_cast<std::size_t>(d);
  if (kind.kind == FiberKind::Kind::Mixed && (kind.a <= 0 || kind.a >= d))
    throw std::invalid_argument("genus1_fiber_model: mixed:<a> needs 0 < a < d");

  // Pairs forcing a section with divisor a_j P + b_{r-j} Q.
  std::vector<int> tight;
  for (int j = 0; j <= r; ++j) {
    const int s = data.a[static_cast<std::size_t>(j)] + data.b[static_cast<std::size_t>(r - j)];
    if (s > d) return std::nullopt;
    if (s == d) tight.push_back(j);
  }

  std::vector<int> a = data.a, b = data.b;
  bool reindexed = false;
  std::optional<std::size_t> richardson;
  std::vector<std::size_t> p_order(ud), q_order(ud);
  for (std::size_t k = 0; k < ud; ++k) p_order[k] = k;

  switch (kind.kind) {
    case FiberKind::Kind::Generic:
      if (!tight.empty()) return std::nullopt;
      for (std::size_t k = 0; k < ud; ++k) q_order[k] = ud - 1 - k;
      break;
    case FiberKind::Kind::AllP:
      // L = O(dP): order d-1 at P is never attained exactly, so vanishing to
      // order d is a codimension d-1 condition.
      for (int j : tight)
        if (j != r || a[static_cast<std::size_t>(r)] != d) return std::nullopt;
      if (a[static_cast<std::size_t>(r)] == d) {
        a[static_cast<std::size_t>(r)] = d - 1;
        reindexed = true;
      }
      for (std::size_t k = 0; k < ud; ++k) q_order[k] = ud - 1 - k;
      break;
    case FiberKind::Kind::AllQ:
      for (int j : tight)
        if (j != 0 || b[static_cast<std::size_t>(r)] != d) return std::nullopt;
      if (b[static_cast<std::size_t>(r)] == d) {
        b[static_cast<std::size_t>(r)] = d - 1;
        reindexed = true;
      }
      for (std::size_t k = 0; k < ud; ++k) q_order[k] = ud - 1 - k;
      break;
    case FiberKind::Kind::Mixed: {
      for (int j : tight)
        if (a[static_cast<std::size_t>(j)] != kind.a) return std::nullopt;
      const auto sigma = almost_transverse_position(ud, static_cast<std::size_t>(kind.a));
      const auto inv = sigma.inverse();
      for (std::size_t k = 0; k < ud; ++k) q_order[k] = static_cast<std::size_t>(inv(static_cast<int>(k + 1)) - 1);
      if (!tight.empty()) {
        const auto j = static_cast<std::size_t>(tight.front());
        // The defect line is e_{a+1}; exchanging e_a and e_{a+1} in the P basis
        // replaces P^a by a step avoiding it and leaves every other step alone.
        std::swap(p_order[static_cast<std::size_t>(kind.a) - 1], p_order[static_cast<std::size_t>(kind.a)]);
        a[j] = kind.a - 1;
        if (j > 0 && a[j - 1] >= a[j]) return std::nullopt;
        richardson = j;
      }
      break;
    }
  }

  Flag<F> p = detail::flag_from_order(field, p_order);
  Flag<F> q = detail::flag_from_order(field, q_order);
  return FiberModel<F>{kind, SchubertPair<F>(std::move(p), SchubertIndex(ud, a), std::move(q), SchubertIndex(ud, b)),
                       reindexed, richardson};
}

struct FiberSample {
  std::uint64_t seed = 0;
  bool restricted = false;  // aimed at the jump locus
  TangentReport report;
  long oracle_dim = 0;
};

struct FiberReport {
  BNData data;
  FiberKind kind;
  bool empty = false;
  long rho = 0;
  long expected_dim = 0;
  std::string flag_class;
  bool top_reindexed = false;
  std::optional<std::size_t> richardson_index;
  std::vector<FiberSample> samples;
  std::size_t failed_samples = 0;
  std::set<long> observed_dims;
  std::size_t jump_count = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <Field F>
FiberReport analyze_genus1_fiber(const F& field, const BNData& data, const FiberKind& kind, std::size_t samples,
                                 std::uint64_t seed) {
  FiberReport rep;
  rep.data = data;
  rep.kind = kind;
  rep.rho = rho(data);
  auto model = genus1_fiber_model(field, data, kind);
  if (!model) {
    rep.empty = true;
    return rep;
  }
  const auto& pair = model->pair;
  rep.expected_dim = model->expected_dim();
  rep.flag_class = to_string(pair.flag_class().kind);
  rep.top_reindexed = model->top_reindexed;
  rep.richardson_index = model->richardson_index;

  // Odd samples aim at the jump locus of an almost-transverse pair: through
  // the defect line and inside the hyperplane P^t + Q^{t'}.
  std::optional<Subspace<F>> hyperplane, defect_line;
  if (pair.defect()) {
    const std::size_t t = *pair.defect();
    hyperplane = sum(pair.p()[t], pair.q()[pair.d() - t]);
    defect_line = intersect(pair.p()[t], pair.q()[pair.d() - t]);
  }

  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint64_t sub = mix_seed(seed, s);
    const bool restricted = hyperplane && (s % 2 == 1);
    std::optional<Subspace<F>> lambda;
    if (restricted) lambda = sample_sigma_circ_point(pair, sub, hyperplane, kSampleAttempts, defect_line);
    if (!lambda) lambda = sample_sigma_circ_point(pair, sub);
    if (!lambda) {
      ++rep.failed_samples;
      continue;
    }
    FiberSample fs{sub, restricted, pair.tangent(*lambda), tangent_dim_oracle(*lambda, pair)};
    const long dim = fs.report.dim;
    rep.observed_dims.insert(dim);
    if (fs.report.jump) ++rep.jump_count;

    const std::string where = "sample " + std::to_string(s) + ": ";
    if (dim != fs.oracle_dim)
      rep.violations.push_back(where + "formula " + std::to_string(dim) + " != oracle " + std::to_string(fs.oracle_dim));
    if (model->may_jump() && !model->richardson_index) {
      if (dim != rep.expected_dim && dim != rep.expected_dim + 1)
        rep.violations.push_back(where + "dimension outside {expected, expected+1}");
      if ((dim == rep.expected_dim + 1) != fs.report.jump)
        rep.violations.push_back(where + "jump witness disagrees with dimension");
    } else if (dim != rep.expected_dim) {
      rep.violations.push_back(where + "dimension " + std::to_string(dim) + " != expected " +
                               std::to_string(rep.expected_dim));
    }
    if (dim > fs.report.bound) rep.violations.push_back(where + "Coxeter bound exceeded");
    rep.samples.push_back(std::move(fs));
  }
  if (rep.samples.empty() && samples > 0) rep.violations.push_back("no point of the open stratum could be sampled");
  return rep;
}

// ---------------------------------------------------------------------------
// Refined limit linear series on a chain Z_1, ..., Z_n (Q_i glued to P_{i+1}).

struct ChainComponent {
  int genus = 0;
  std::vector<int> a;  // vanishing at P_i
  std::vector<int> b;  // vanishing at Q_i
  long rho = 0;
  friend bool operator==(const ChainComponent&, const ChainComponent&) = default;
};

struct ChainAssignment {
  std::vector<ChainComponent> components;
  long total_rho = 0;
  friend bool operator==(const ChainAssignment&, const ChainAssignment&) = default;
};

class genus_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Strictly increasing sequences of length r+1 in [0, d], lexicographic.
inline std::vector<std::vector<int>> increasing_sequences(int r, int d) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > d) return out;
  std::vector<int> s(static_cast<std::size_t>(r + 1));
  for (int j = 0; j <= r; ++j) s[static_cast<std::size_t>(j)] = j;
  for (;;) {
    out.push_back(s);
    int k = r + 1;
    while (k > 0 && s[static_cast<std::size_t>(k - 1)] == d - (r + 1) + k) --k;
    if (k == 0) break;
    ++s[static_cast<std::size_t>(k - 1)];
    for (int m = k; m <= r; ++m) s[static_cast<std::size_t>(m)] = s[static_cast<std::size_t>(m - 1)] + 1;
  }
  return out;
}

inline bool dominates(const std::vector<int>& x, const std::vector<int>& y) {
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] < y[j]) return false;
  return true;
}

namespace detail {

// Incoming sequence a^{i+1} forced by equality at the node.
inline std::vector<int> across_node(const std::vector<int>& b, int d) {
  const std::size_t n = b.size();
  std::vector<int> a(n);
  for (std::size_t j = 0; j < n; ++j) a[n - 1 - j] = d - b[j];
  return a;
}

// Nonemptiness of a component: rho_hat >= 0 (for genus 0 this says
// a_j + b_{r-j} <= d for all j).
inline bool component_nonempty(int genus, int r, int d, const std::vector<int>& a, const std::vector<int>& b) {
  return rho_hat(genus, r, d, a, b) >= 0;
}

class ChainSearch {
 public:
  ChainSearch(const BNData& data, std::vector<int> genera)
      : data_(data), genera_(std::move(genera)), seqs_(increasing_sequences(data.r, data.d)) {}

  // Best total over completions starting at component i with incoming a, or
  // nullopt if none exists. Also counts completions.
  struct Best {
    std::optional<long> max_total;
    std::uint64_t count = 0;
  };

  Best best(std::size_t i, const std::vector<int>& a) {
    auto key = std::make_pair(i, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Best out;
    const int g = genera_[i];
    for (const auto& b : seqs_) {
      if (i + 1 == genera_.size() && !dominates(b, data_.b)) continue;
      if (!component_nonempty(g, data_.r, data_.d, a, b)) continue;
      const long here = rho(g, data_.r, data_.d, a, b);
      if (i + 1 == genera_.size()) {
        out.count += 1;
        if (!out.max_total || here > *out.max_total) out.max_total = here;
      } else {
        Best rest = best(i + 1, across_node(b, data_.d));
        if (!rest.max_total) continue;
        out.count += rest.count;
        if (!out.max_total || here + *rest.max_total > *out.max_total) out.max_total = here + *rest.max_total;
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  void collect(std::size_t i, const std::vector<int>& a, std::vector<ChainComponent>& prefix,
               std::vector<ChainAssignment>& out) {
    const int g = genera_[i];
    for (const auto& b : seqs_) {
      if (i + 1 == genera_.size() && !dominates(b, data_.b)) continue;
      if (!component_nonempty(g, data_.r, data_.d, a, b)) continue;
      if (i + 1 < genera_.size() && !best(i + 1, across_node(b, data_.d)).max_total) continue;
      prefix.push_back({g, a, b, rho(g, data_.r, data_.d, a, b)});
      if (i + 1 == genera_.size()) {
        ChainAssignment asg{prefix, 0};
        for (const auto& c : prefix) asg.total_rho += c.rho;
        out.push_back(std::move(asg));
      } else {
        collect(i + 1, across_node(b, data_.d), prefix, out);
      }
      prefix.pop_back();
    }
  }

  const std::vector<std::vector<int>>& sequences() const { return seqs_; }

 private:
  BNData data_;
  std::vector<int> genera_;
  std::vector<std::vector<int>> seqs_;
  std::map<std::pair<std::size_t, std::vector<int>>, Best> memo_;
};

inline void check_genera(const BNData& data, const std::vector<int>& genera) {
  if (genera.empty()) throw genus_mismatch("chain: at least one component is required");
  int total = 0;
  for (int g : genera) {
    if (g != 0 && g != 1) throw genus_mismatch("chain: component genera must be 0 or 1");
    total += g;
  }
  if (total != data.g)
    throw genus_mismatch("chain: component genera sum to " + std::to_string(total) + ", expected g = " +
                         std::to_string(data.g));
}

}  // namespace detail

// All refined assignments of vanishing sequences with a^1 >= a, b^n >= b,
// and b^i_j + a^{i+1}_{r-j} = d at every node, in which every component is
// nonempty. Lexicographic in (a^1, b^1, ..., b^n).
inline std::vector<ChainAssignment> enumerate_refined_chains(const BNData& data, const std::vector<int>& genera) {
  data.validate();
  detail::check_genera(data, genera);
  detail::ChainSearch search(data, genera);
  std::vector<ChainAssignment> out;
  std::vector<ChainComponent> prefix;
  for (const auto& a1 : search.sequences()) {
    if (!dominates(a1, data.a)) continue;
    search.collect(0, a1, prefix, out);
  }
  return out;
}

struct ChainVerdict {
  BNData data;
  std::vector<int> genera;
  long rho = 0;
  long rho_hat = 0;
  bool nonempty = false;
  std::uint64_t assignment_count = 0;
  std::optional<long> max_total;
  bool nonempty_matches = false;  // nonempty <=> rho_hat >= 0
  bool max_matches = false;       // max total == rho (vacuous when empty)

  bool ok() const { return nonempty_matches && max_matches; }
};

// Chain of g elliptic components (a single rational component when g = 0).
inline std::vector<int> default_genera(int g) { return g == 0 ? std::vector<int>{0} : std::vector<int>(static_cast<std::size_t>(g), 1); }

inline ChainVerdict chain_dimension_check(const BNData& data, std::vector<int> genera = {}) {
  data.validate();
  if (genera.empty()) genera = default_genera(data.g);
  detail::check_genera(data, genera);
  detail::ChainSearch search(data, genera);
  ChainVerdict v;
  v.data = data;
  v.genera = genera;
  v.rho = rho(data);
  v.rho_hat = rho_hat(data);
  for (const auto& a1 : search.sequences()) {
    if (!dominates(a1, data.a)) continue;
    auto best = search.best(0, a1);
    if (!best.max_total) continue;
    v.assignment_count += best.count;
    if (!v.max_total || *best.max_total > *v.max_total) v.max_total = best.max_total;
  }
  v.nonempty = v.max_total.has_value();
  v.nonempty_matches = v.nonempty == (v.rho_hat >= 0);
  v.max_matches = !v.nonempty || *v.max_total == v.rho;
  return v;
}

}  // namespace schubert
