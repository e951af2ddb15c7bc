#pragma once

// Verification sweeps: every closed-form tangent dimension is compared with
// the determinantal oracle on generated instances, alongside the chain and
// genus-1 fiber checks and the worked d = 4 example. Instances carry their
// own seeds, run in parallel, and are reported in generation order, so a
// report depends only on the configuration.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "schubert/report.hpp"

namespace schubert {

class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "q" or "fp:<p>".
inline AnyField parse_field_option(const std::string& s) {
  if (s == "q" || s == "Q") return RationalField{};
  if (s.rfind("fp:", 0) == 0) {
    const std::string num = s.substr(3);
    if (!detail::is_integer_text(num) || num.front() == '-') throw config_error("bad prime in --field '" + s + "'");
    const unsigned long long p = std::stoull(num);
    if (p > 0x7fffffffULL || !is_prime(p)) throw config_error("--field: " + num + " is not a prime below 2^31");
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw config_error("--field must be 'q' or 'fp:<p>', got '" + s + "'");
}

// Runs fn(i) for i in [0, n) on `jobs` threads. Results are written by index,
// so the outcome does not depend on scheduling.
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      while (!failed) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Pair instances: formula vs oracle, the two corollaries, and the bound.

enum class PairClass { Identical, Transverse, Almost, General };

inline std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::Identical: return "identical";
    case PairClass::Transverse: return "transverse";
    case PairClass::Almost: return "almost";
    case PairClass::General: return "general";
  }
  return "general";
}

struct PairInstance {
  std::size_t id = 0;
  PairClass cls = PairClass::General;
  Permutation sigma;
  SchubertIndex a{1, {0}};
  SchubertIndex b{1, {0}};
  std::uint64_t seed = 0;
  bool aim_at_jump = false;  // sample through the defect line inside P^t + Q^{t'}
};

struct PairOutcome {
  bool sampled = false;
  Json point;
  TangentReport report;
  long oracle_dim = 0;
  bool formula_eq_oracle = true;
  std::optional<bool> transverse_ok;  // set for transverse instances
  std::optional<bool> almost_ok;      // set for almost-transverse instances
  bool bound_ok = true;
  bool bound_attained = false;
  std::vector<std::string> violations;
};

template <Field F>
PairOutcome evaluate_pair_instance(const F& field, const PairInstance& inst) {
  PairOutcome out;
  std::mt19937_64 rng(inst.seed);
  auto [p, q] = flag_pair_with_position(field, inst.sigma, rng);
  SchubertPair<F> pair(std::move(p), inst.a, std::move(q), inst.b);
  std::optional<Subspace<F>> lambda;
  if (inst.aim_at_jump && pair.defect()) {
    const std::size_t t = *pair.defect(), tp = pair.d() - t;
    lambda = sample_sigma_circ_point(pair, rng(), std::optional<Subspace<F>>(sum(pair.p()[t], pair.q()[tp])),
                                     kSampleAttempts, std::optional<Subspace<F>>(intersect(pair.p()[t], pair.q()[tp])));
  }
  if (!lambda) lambda = sample_sigma_circ_point(pair, rng());
  if (!lambda) return out;

  out.sampled = true;
  out.point = subspace_json(*lambda);
  out.report = pair.tangent(*lambda);
  out.oracle_dim = tangent_dim_oracle(*lambda, pair);
  const long dim = out.report.dim, rho_m1 = out.report.rho_minus_1;

  out.formula_eq_oracle = dim == out.oracle_dim;
  if (!out.formula_eq_oracle)
    out.violations.push_back("formula " + std::to_string(dim) + " != oracle " + std::to_string(out.oracle_dim));
  if (out.report.flag_class.kind == FlagPairClass::Kind::Transverse) {
    out.transverse_ok = dim == rho_m1;
    if (!*out.transverse_ok) out.violations.push_back("transverse pair with dim != rho-1");
  }
  if (out.report.flag_class.kind == FlagPairClass::Kind::AlmostTransverse) {
    const bool in_range = dim == rho_m1 || dim == rho_m1 + 1;
    const bool agrees = (dim == rho_m1 + 1) == out.report.jump;
    out.almost_ok = in_range && agrees;
    if (!in_range) out.violations.push_back("almost-transverse pair with dim outside {rho-1, rho}");
    if (!agrees) out.violations.push_back("jump classifier disagrees with dimension");
  }
  out.bound_ok = dim <= out.report.bound;
  out.bound_attained = dim == out.report.bound;
  if (!out.bound_ok) out.violations.push_back("Coxeter bound exceeded");
  return out;
}

inline Json pair_outcome_json(const PairInstance& inst, const PairOutcome& out) {
  Json j = {{"id", inst.id},
            {"class", to_string(inst.cls)},
            {"sigma", permutation_json(inst.sigma)},
            {"d", inst.sigma.size()},
            {"r", inst.a.r()},
            {"a", inst.a.seq()},
            {"b", inst.b.seq()},
            {"seed", inst.seed},
            {"aim_at_jump", inst.aim_at_jump},
            {"sampled", out.sampled}};
  if (!out.sampled) return j;
  j["point"] = out.point;
  j["tangent"] = tangent_report_json(out.report);
  j["oracle_dim"] = out.oracle_dim;
  j["bound_attained"] = out.bound_attained;
  j["violations"] = out.violations;
  return j;
}

// A fixed permutation in neither of the special classes (inv(w0 sigma) >= 2,
// sigma != id); needs d >= 3.
inline Permutation general_position(std::size_t d) {
  if (d < 3) throw std::invalid_argument("general_position: needs d >= 3");
  // w0 composed with s_1 s_2: two inversions away from transverse.
  return compose(Permutation::longest(d),
                 compose(Permutation::adjacent_transposition(d, 1), Permutation::adjacent_transposition(d, 2)));
}

inline bool is_general(const Permutation& sigma) {
  return !sigma.is_identity() && inversions(compose(Permutation::longest(sigma.size()), sigma)) >= 2;
}

// Every (a, b) for d <= d_max, r <= r_max in each class: identical,
// transverse, almost-transverse for every defect t, and one general
// position. `points` seeds per (class, a, b); for almost-transverse pairs
// half of them aim at the jump locus.
inline std::vector<PairInstance> exhaustive_pair_instances(std::size_t d_max, std::size_t r_max, std::size_t points,
                                                           std::uint64_t seed) {
  std::vector<PairInstance> out;
  auto push = [&](PairClass cls, const Permutation& sigma, const SchubertIndex& a, const SchubertIndex& b,
                  bool aim) {
    PairInstance inst;
    inst.id = out.size();
    inst.cls = cls;
    inst.sigma = sigma;
    inst.a = a;
    inst.b = b;
    inst.seed = mix_seed(seed, inst.id);
    inst.aim_at_jump = aim;
    out.push_back(std::move(inst));
  };
  for (std::size_t d = 2; d <= d_max; ++d)
    for (std::size_t r = 0; r <= r_max && r + 2 <= d; ++r) {
      std::vector<std::pair<PairClass, Permutation>> positions{{PairClass::Identical, Permutation::identity(d)},
                                                               {PairClass::Transverse, Permutation::longest(d)}};
      // For d = 2 the almost-transverse position is the identity.
      if (d >= 3)
        for (std::size_t t = 1; t < d; ++t) positions.emplace_back(PairClass::Almost, almost_transverse_position(d, t));
      if (d >= 3) positions.emplace_back(PairClass::General, general_position(d));
      for (const auto& [cls, sigma] : positions)
        for (const auto& a : all_schubert_indices(d, r))
          for (const auto& b : all_schubert_indices(d, r))
            for (std::size_t k = 0; k < points; ++k) push(cls, sigma, a, b, cls == PairClass::Almost && k % 2 == 1);
    }
  return out;
}

// `count` instances per class with d in [3, d_max], r <= min(r_max, d-2).
// Indices are drawn at random; draws whose intersection turns out empty are
// kept and reported as unsampled.
inline std::vector<PairInstance> random_pair_instances(std::size_t d_max, std::size_t r_max, std::size_t count,
                                                       std::uint64_t seed) {
  std::vector<PairInstance> out;
  const PairClass classes[] = {PairClass::Identical, PairClass::Transverse, PairClass::Almost, PairClass::General};
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t k = 0; k < count; ++k) {
      PairInstance inst;
      inst.id = out.size();
      inst.cls = classes[c];
      std::mt19937_64 rng(mix_seed(seed, 0x1000000ULL + inst.id));
      const std::size_t d = 3 + rng() % (d_max - 2);
      const std::size_t r = rng() % (std::min(r_max, d - 2) + 1);
      const auto indices = all_schubert_indices(d, r);
      // Bias toward small codimension so that most draws are nonempty.
      auto pick = [&] {
        const std::size_t n = indices.size();
        const std::size_t x = rng() % n, y = rng() % n;
        return indices[std::min(x, y)];
      };
      inst.a = pick();
      inst.b = pick();
      switch (inst.cls) {
        case PairClass::Identical: inst.sigma = Permutation::identity(d); break;
        case PairClass::Transverse: inst.sigma = Permutation::longest(d); break;
        case PairClass::Almost: inst.sigma = almost_transverse_position(d, 1 + rng() % (d - 1)); break;
        case PairClass::General: {
          std::vector<int> v(d);
          for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<int>(i + 1);
          do std::shuffle(v.begin(), v.end(), rng);
          while (!is_general(Permutation(v)));
          inst.sigma = Permutation(v);
          break;
        }
      }
      inst.aim_at_jump = inst.cls == PairClass::Almost && rng() % 2 == 1;
      inst.seed = rng();
      out.push_back(std::move(inst));
    }
  return out;
}

struct PairSweepSummary {
  std::size_t instances = 0, sampled = 0;
  std::size_t oracle_pass = 0, oracle_fail = 0;
  std::size_t transverse_pass = 0, transverse_fail = 0;
  std::size_t almost_pass = 0, almost_fail = 0, almost_jumps = 0;
  std::size_t bound_pass = 0, bound_fail = 0;
  std::size_t identical_bound_attained = 0;
  std::vector<std::size_t> failing_ids;

  Json json() const {
    return {{"instances", instances},         {"sampled", sampled},
            {"formula_eq_oracle_pass", oracle_pass}, {"formula_eq_oracle_fail", oracle_fail},
            {"transverse_pass", transverse_pass},    {"transverse_fail", transverse_fail},
            {"almost_pass", almost_pass},            {"almost_fail", almost_fail},
            {"almost_jumps", almost_jumps},          {"bound_pass", bound_pass},
            {"bound_fail", bound_fail},              {"identical_bound_attained", identical_bound_attained},
            {"failing_ids", failing_ids}};
  }
  std::size_t violations() const { return oracle_fail + transverse_fail + almost_fail + bound_fail; }
};

struct PairSweep {
  std::vector<PairInstance> instances;
  std::vector<PairOutcome> outcomes;
  PairSweepSummary summary;
};

template <Field F>
PairSweep run_pair_sweep(const F& field, std::vector<PairInstance> instances, unsigned jobs) {
  PairSweep sweep;
  sweep.outcomes.resize(instances.size());
  parallel_for(instances.size(), jobs,
               [&](std::size_t i) { sweep.outcomes[i] = evaluate_pair_instance(field, instances[i]); });
  auto& s = sweep.summary;
  s.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& o = sweep.outcomes[i];
    if (!o.sampled) continue;
    ++s.sampled;
    ++(o.formula_eq_oracle ? s.oracle_pass : s.oracle_fail);
    if (o.transverse_ok) ++(*o.transverse_ok ? s.transverse_pass : s.transverse_fail);
    if (o.almost_ok) ++(*o.almost_ok ? s.almost_pass : s.almost_fail);
    if (o.almost_ok && o.report.jump) ++s.almost_jumps;
    ++(o.bound_ok ? s.bound_pass : s.bound_fail);
    if (instances[i].cls == PairClass::Identical && o.bound_attained) ++s.identical_bound_attained;
    if (!o.violations.empty()) s.failing_ids.push_back(instances[i].id);
  }
  sweep.instances = std::move(instances);
  return sweep;
}

// ---------------------------------------------------------------------------
// Single Schubert varieties: smooth exactly on the open stratum.

struct SingleInstance {
  std::size_t id = 0;
  SchubertIndex a{1, {0}};
  std::uint64_t seed = 0;
};

struct SingleOutcome {
  bool sampled = false;
  bool in_circ = false;
  long formula = 0;
  long oracle = 0;
  long smooth_dim = 0;
  std::vector<std::string> violations;
};

template <Field F>
SingleOutcome evaluate_single_instance(const F& field, const SingleInstance& inst) {
  SingleOutcome out;
  std::mt19937_64 rng(inst.seed);
  const std::size_t d = inst.a.d();
  auto p = random_flag(field, d, rng);
  auto lambda = sample_schubert_point_any_stratum(p, inst.a, rng);
  if (!lambda) return out;
  out.sampled = true;
  out.in_circ = in_sigma_circ(*lambda, p, inst.a);
  out.formula = tangent_dim_single(*lambda, p, inst.a);
  out.oracle = tangent_dim_oracle<F>(*lambda, {{p, inst.a}});
  out.smooth_dim = grassmannian_dim(d, inst.a.r()) - inst.a.codim();
  if (out.formula != out.oracle)
    out.violations.push_back("single formula " + std::to_string(out.formula) + " != oracle " + std::to_string(out.oracle));
  if (out.in_circ && out.oracle != out.smooth_dim) out.violations.push_back("open-stratum point is not smooth");
  if (!out.in_circ && out.oracle <= out.smooth_dim) out.violations.push_back("point off the open stratum is smooth");
  return out;
}

// All indices for 2 <= d <= d_max, r <= d-2, `points` seeds each.
inline std::vector<SingleInstance> single_instances(std::size_t d_max, std::size_t points, std::uint64_t seed) {
  std::vector<SingleInstance> out;
  for (std::size_t d = 2; d <= d_max; ++d)
    for (std::size_t r = 0; r + 2 <= d; ++r)
      for (const auto& a : all_schubert_indices(d, r))
        for (std::size_t k = 0; k < points; ++k) {
          SingleInstance inst{out.size(), a, 0};
          inst.seed = mix_seed(seed, 0x2000000ULL + inst.id);
          out.push_back(std::move(inst));
        }
  return out;
}

struct SingleSweepSummary {
  std::size_t instances = 0, sampled = 0, on_open_stratum = 0, off_open_stratum = 0;
  std::size_t pass = 0, fail = 0;
  std::vector<std::size_t> failing_ids;
  Json json() const {
    return {{"instances", instances}, {"sampled", sampled},        {"on_open_stratum", on_open_stratum},
            {"off_open_stratum", off_open_stratum}, {"pass", pass}, {"fail", fail},
            {"failing_ids", failing_ids}};
  }
};

template <Field F>
SingleSweepSummary run_single_sweep(const F& field, const std::vector<SingleInstance>& instances, unsigned jobs) {
  std::vector<SingleOutcome> outcomes(instances.size());
  parallel_for(instances.size(), jobs,
               [&](std::size_t i) { outcomes[i] = evaluate_single_instance(field, instances[i]); });
  SingleSweepSummary s;
  s.instances = instances.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.sampled) continue;
    ++s.sampled;
    ++(o.in_circ ? s.on_open_stratum : s.off_open_stratum);
    if (o.violations.empty()) {
      ++s.pass;
    } else {
      ++s.fail;
      s.failing_ids.push_back(instances[i].id);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Chains and genus-1 fibers.

struct ChainSweepSummary {
  std::size_t cases = 0, nonempty = 0, pass = 0, fail = 0;
  std::vector<Json> failures;
  Json json() const {
    return {{"cases", cases}, {"nonempty", nonempty}, {"pass", pass}, {"fail", fail}, {"failures", failures}};
  }
};

// Every (g, r, d, a, b) with g <= g_max, r <= r_max, r <= d <= d_max.
inline ChainSweepSummary run_chain_sweep(int g_max, int r_max, int d_max, unsigned jobs) {
  std::vector<BNData> cases;
  for (int g = 0; g <= g_max; ++g)
    for (int r = 0; r <= r_max; ++r)
      for (int d = r; d <= d_max; ++d)
        for (const auto& a : increasing_sequences(r, d))
          for (const auto& b : increasing_sequences(r, d)) cases.emplace_back(g, r, d, a, b);
  std::vector<ChainVerdict> verdicts(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) { verdicts[i] = chain_dimension_check(cases[i]); });
  ChainSweepSummary s;
  s.cases = cases.size();
  for (const auto& v : verdicts) {
    if (v.nonempty) ++s.nonempty;
    if (v.ok()) {
      ++s.pass;
    } else {
      ++s.fail;
      s.failures.push_back(chain_verdict_json(v));
    }
  }
  return s;
}

struct FiberSweepSummary {
  std::size_t models = 0, empty = 0, pass = 0, fail = 0, samples = 0, jumps = 0;
  std::vector<Json> failures;
  Json json() const {
    return {{"models", models}, {"empty", empty},     {"pass", pass},        {"fail", fail},
            {"samples", samples}, {"jump_samples", jumps}, {"failures", failures}};
  }
};

// Every genus-1 model with r <= r_max, r+1 <= d <= d_max and every fiber kind.
template <Field F>
FiberSweepSummary run_fiber_sweep(const F& field, int r_max, int d_max, std::size_t samples, std::uint64_t seed,
                                  unsigned jobs) {
  std::vector<std::pair<BNData, FiberKind>> cases;
  for (int r = 0; r <= r_max; ++r)
    for (int d = r + 1; d <= d_max; ++d)
      for (const auto& a : increasing_sequences(r, d))
        for (const auto& b : increasing_sequences(r, d)) {
          BNData data(1, r, d, a, b);
          cases.emplace_back(data, FiberKind::generic());
          cases.emplace_back(data, FiberKind::all_p());
          cases.emplace_back(data, FiberKind::all_q());
          for (int t = 1; t < d; ++t) cases.emplace_back(data, FiberKind::mixed(t));
        }
  std::vector<FiberReport> reports(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) {
    reports[i] = analyze_genus1_fiber(field, cases[i].first, cases[i].second, samples, mix_seed(seed, 0x3000000ULL + i));
  });
  FiberSweepSummary s;
  s.models = cases.size();
  for (const auto& rep : reports) {
    if (rep.empty) ++s.empty;
    s.samples += rep.samples.size();
    s.jumps += rep.jump_count;
    if (rep.ok()) {
      ++s.pass;
    } else {
      ++s.fail;
      s.failures.push_back(fiber_report_json(rep));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// The d = 4 worked example: lines in P^3 meeting two lines that meet.

struct Example0202 {
  Json report;
  bool ok = true;
};

template <Field F>
Example0202 run_example_0202(const F& field, std::uint64_t seed = 0) {
  Example0202 ex;
  std::vector<std::string> failures;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
    return cond;
  };
  const BNData data(1, 1, 4, {0, 2}, {0, 2});
  auto model = genus1_fiber_model(field, data, FiberKind::mixed(2));
  if (!model) throw std::logic_error("example 0202: fiber model unexpectedly empty");
  const auto& pair = model->pair;
  const long rho_value = rho(data);

  auto vec = [&](std::initializer_list<long> xs) {
    Vector<F> v;
    for (long x : xs) v.push_back(field.from_int(x));
    return v;
  };
  auto span = [&](std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector<F>> vs;
    for (const auto& r : rows) vs.push_back(vec(r));
    return Subspace<F>::span(field, 4, vs);
  };

  Json setup;
  const auto cls = pair.flag_class();
  const auto defect = intersect(pair.p()[2], pair.q()[2]);
  const auto hyperplane = sum(pair.p()[2], pair.q()[2]);
  setup["data"] = bn_data_json(data);
  setup["rho"] = rho_value;
  setup["rho_hat"] = rho_hat(data);
  setup["class"] = to_string(cls.kind);
  setup["t"] = cls.t;
  setup["t_prime"] = cls.t_prime;
  setup["P2"] = subspace_json(pair.p()[2]);
  setup["Q2"] = subspace_json(pair.q()[2]);
  setup["defect_line"] = subspace_json(defect);
  setup["hyperplane"] = subspace_json(hyperplane);
  check(cls.kind == FlagPairClass::Kind::AlmostTransverse && cls.t == 2 && cls.t_prime == 2,
        "flags are not almost-transverse with t = t' = 2");
  check(defect == span({{0, 0, 1, 0}}), "defect line is not <e3>");
  ex.report["setup"] = setup;

  // Z1: lines through the common point; Z2: lines in the common plane.
  auto evaluate = [&](const std::string& label, const Subspace<F>& lam, long expected, bool expect_jump) {
    Json j = {{"label", label}, {"point", subspace_json(lam)}};
    if (!check(pair.in_both_circ(lam), label + ": not in both open strata")) return j;
    const auto rep = pair.tangent(lam);
    const long oracle = tangent_dim_oracle(lam, pair);
    j["tangent"] = tangent_report_json(rep);
    j["oracle_dim"] = oracle;
    j["contains_defect_line"] = contains(lam, defect);
    j["inside_hyperplane"] = contains(hyperplane, lam);
    check(rep.dim == oracle, label + ": formula disagrees with oracle");
    check(rep.dim == expected, label + ": tangent dim " + std::to_string(rep.dim) + ", expected " +
                                   std::to_string(expected));
    check(rep.jump == expect_jump, label + ": jump classifier mismatch");
    return j;
  };

  Json points = Json::array();
  points.push_back(evaluate("Z1", span({{0, 0, 1, 0}, {1, 1, 0, 1}}), rho_value - 1, false));
  points.push_back(evaluate("Z2", span({{1, 0, 1, 0}, {0, 0, 0, 1}}), rho_value - 1, false));
  points.push_back(evaluate("Z1 ∩ Z2", span({{0, 0, 1, 0}, {1, 0, 0, 1}}), rho_value, true));
  std::mt19937_64 rng(seed);
  // Random points strictly on one component (off the other).
  for (int k = 0; k < 3; ++k) {
    for (;;) {
      auto lam = Subspace<F>::span(field, 4, {vec({0, 0, 1, 0}), detail::random_vector_in(Subspace<F>::full(field, 4), rng)});
      if (lam.dim() != 2 || contains(hyperplane, lam)) continue;
      points.push_back(evaluate("random Z1", lam, rho_value - 1, false));
      break;
    }
    for (;;) {
      auto lam = Subspace<F>::span(field, 4, {detail::random_vector_in(hyperplane, rng), detail::random_vector_in(hyperplane, rng)});
      if (lam.dim() != 2 || contains(lam, defect)) continue;
      points.push_back(evaluate("random Z2", lam, rho_value - 1, false));
      break;
    }
  }
  ex.report["points"] = points;

  // The line Z1 ∩ Z2 = { <e3, x e1 + y e4> }: which of its points lie in G°?
  // Over F_p every point is visited; over Q a sample including both ends.
  std::vector<std::pair<long, long>> params{{1, 0}, {0, 1}};
  std::size_t scanned_total = 0;
  std::optional<std::uint32_t> prime;
  if constexpr (std::is_same_v<F, PrimeField>) prime = field.p;
  if (prime) {
    for (std::uint32_t y = 1; y < *prime; ++y) params.emplace_back(1, static_cast<long>(y));
  } else {
    for (long y = -10; y <= 10; ++y)
      if (y != 0) params.emplace_back(1, y);
  }
  std::vector<Json> excluded;
  std::size_t jump_points = 0;
  for (const auto& [x, y] : params) {
    ++scanned_total;
    const auto lam = span({{0, 0, 1, 0}, {x, 0, 0, y}});
    const auto at_p = vanishing_sequence(lam, pair.p()), at_q = vanishing_sequence(lam, pair.q());
    const bool in_g = gcirc_membership(at_p.seq(), data.a) && gcirc_membership(at_q.seq(), data.b);
    if (in_g) {
      const auto rep = pair.tangent(lam);
      if (rep.dim == rho_value && rep.jump) ++jump_points;
      else check(false, "point of Z1 ∩ Z2 in the open locus without a jump");
      continue;
    }
    Json j = {{"point", subspace_json(lam)}, {"vanishing_at_P", at_p.seq()}, {"vanishing_at_Q", at_q.seq()}};
    j["fiber_oracle_dim"] = tangent_dim_oracle(lam, pair);
    // The Schubert cycle whose open-stratum equality fails.
    const bool fails_p = !gcirc_membership(at_p.seq(), data.a);
    const auto& flag = fails_p ? pair.p() : pair.q();
    const auto& index = fails_p ? pair.a() : pair.b();
    const long cycle_dim = tangent_dim_oracle<F>(lam, {{flag, index}});
    j["violated_cycle"] = fails_p ? "P" : "Q";
    j["violated_cycle_oracle_dim"] = cycle_dim;
    check(cycle_dim > rho_value, "excess point with violated-cycle tangent dim <= rho");
    excluded.push_back(std::move(j));
  }
  check(excluded.size() == 2, "expected exactly two excluded points, found " + std::to_string(excluded.size()));
  const bool p2_excluded = std::any_of(excluded.begin(), excluded.end(), [&](const Json& j) {
    return j["point"] == subspace_json(pair.p()[2]);
  });
  const bool q2_excluded = std::any_of(excluded.begin(), excluded.end(), [&](const Json& j) {
    return j["point"] == subspace_json(pair.q()[2]);
  });
  check(p2_excluded && q2_excluded, "excluded points are not P^2 and Q^2");
  ex.report["intersection_line"] = {{"scanned", scanned_total},
                                    {"exhaustive", prime.has_value()},
                                    {"jump_points", jump_points},
                                    {"excluded", excluded}};
  ex.report["failures"] = failures;
  ex.ok = failures.empty();
  ex.report["ok"] = ex.ok;
  return ex;
}

// ---------------------------------------------------------------------------
// The full sweep behind `verify`.

struct SweepConfig {
  std::size_t d_max = 5;
  std::size_t r_max = 2;
  std::string field = "fp:1009";
  std::size_t per_class = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 0;  // 0: one per hardware thread
  int chain_g_max = 3;
  int chain_d_max = 6;
  std::size_t fiber_samples = 2;

  void validate() const {
    if (d_max < r_max + 2) throw config_error("verify: need d_max >= r_max + 2");
    if (d_max < 3) throw config_error("verify: need d_max >= 3");
    if (d_max > 9) throw config_error("verify: d_max above 9 is not supported");
    if (per_class < 1) throw config_error("verify: per-class instance count must be at least 1");
    if (chain_g_max < 0 || chain_d_max < 0) throw config_error("verify: chain ranges must be nonnegative");
    parse_field_option(field);
  }
};

struct VerifyResult {
  Json report;
  std::size_t violations = 0;
};

// Removes timing so that two reports can be compared.
inline Json strip_timing(Json report) {
  report.erase("wall_time_s");
  return report;
}

inline VerifyResult run_verify(const SweepConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  VerifyResult out;
  Json& rep = out.report;
  rep["tool"] = "verify";
  rep["config"] = {{"d_max", config.d_max},
                   {"r_max", config.r_max},
                   {"field", config.field},
                   {"per_class", config.per_class},
                   {"seed", config.seed},
                   {"chain_g_max", config.chain_g_max},
                   {"chain_d_max", config.chain_d_max},
                   {"fiber_samples", config.fiber_samples}};
  std::visit(
      [&](const auto& field) {
        auto pairs = run_pair_sweep(field, random_pair_instances(config.d_max, config.r_max, config.per_class, config.seed),
                                    config.jobs);
        Json instances = Json::array();
        for (std::size_t i = 0; i < pairs.instances.size(); ++i)
          instances.push_back(pair_outcome_json(pairs.instances[i], pairs.outcomes[i]));
        rep["pairs"] = {{"summary", pairs.summary.json()}, {"instances", instances}};
        out.violations += pairs.summary.violations();

        std::vector<SingleInstance> singles;
        {
          std::mt19937_64 rng(mix_seed(config.seed, 0x4000000ULL));
          for (std::size_t k = 0; k < config.per_class; ++k) {
            // r >= 1 where possible: for r = 0 every Schubert variety is smooth.
            const std::size_t d = 3 + rng() % (config.d_max - 2);
            const std::size_t r_hi = std::min(config.r_max, d - 2);
            const std::size_t r = r_hi == 0 ? 0 : 1 + rng() % r_hi;
            const auto indices = all_schubert_indices(d, r);
            singles.push_back({k, indices[rng() % indices.size()], rng()});
          }
        }
        const auto single = run_single_sweep(field, singles, config.jobs);
        rep["single"] = single.json();
        out.violations += single.fail;

        const auto chains = run_chain_sweep(config.chain_g_max, static_cast<int>(config.r_max), config.chain_d_max,
                                            config.jobs);
        rep["chains"] = chains.json();
        out.violations += chains.fail;

        const auto fibers = run_fiber_sweep(field, std::min<int>(1, static_cast<int>(config.r_max)),
                                            static_cast<int>(config.d_max), config.fiber_samples,
                                            mix_seed(config.seed, 0x5000000ULL), config.jobs);
        rep["fibers"] = fibers.json();
        out.violations += fibers.fail;

        const auto ex = run_example_0202(field, config.seed);
        rep["example_0202"] = ex.report;
        if (!ex.ok) ++out.violations;
      },
      parse_field_option(config.field));
  rep["violations"] = out.violations;
  rep["ok"] = out.violations == 0;
  rep["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace schubert
