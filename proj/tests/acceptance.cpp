// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "schubert/verify.hpp"

namespace {

using namespace schubert;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, const std::string& title, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << n << " " << (pass ? "PASS" : "FAIL") << "  " << title << ": " << detail << std::endl;
}

std::string seq_text(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

}  // namespace

int main() {
  const PrimeField field(1009);
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  // 1-4 share one pair sweep: exhaustive over d <= 4, r <= 2 with ten
  // points each, then a random sweep over d <= 7, r <= 3.
  auto t0 = Clock::now();
  const auto exhaustive = run_pair_sweep(field, exhaustive_pair_instances(4, 2, 10, 0), jobs);
  const double t_exhaustive = seconds_since(t0);
  t0 = Clock::now();
  const auto random = run_pair_sweep(field, random_pair_instances(7, 3, 150, 0), jobs);
  const double t_random = seconds_since(t0);
  const auto& ex = exhaustive.summary;
  const auto& rn = random.summary;

  // The same instances over Q.
  t0 = Clock::now();
  const RationalField q;
  const auto ex_q = run_pair_sweep(q, exhaustive_pair_instances(4, 2, 10, 0), jobs).summary;
  const auto rn_q = run_pair_sweep(q, random_pair_instances(7, 3, 150, 0), jobs).summary;
  const double t_q = seconds_since(t0);

  {
    std::ostringstream d;
    d << "exhaustive " << ex.oracle_pass << "/" << ex.sampled << " sampled points agree (" << ex.instances
      << " instances, " << t_exhaustive << " s); random " << rn.oracle_pass << "/" << rn.sampled << " agree ("
      << rn.instances << " instances, " << t_random << " s) over F_1009; over Q "
      << ex_q.oracle_pass + rn_q.oracle_pass << "/" << ex_q.sampled + rn_q.sampled << " agree (" << t_q << " s)";
    report(1, "formula equals oracle",
           ex.oracle_fail == 0 && rn.oracle_fail == 0 && ex.sampled > 0 && rn.instances >= 500 &&
               rn.sampled >= 500 && ex_q.oracle_fail == 0 && rn_q.oracle_fail == 0 && t_exhaustive + t_random < 60 &&
               t_q < 600,
           d.str());
  }
  {
    const std::size_t pass = ex.transverse_pass + rn.transverse_pass, fail = ex.transverse_fail + rn.transverse_fail;
    report(2, "transverse pairs give rho-1", fail == 0 && pass > 0,
           std::to_string(pass) + " pass, " + std::to_string(fail) + " fail");
  }
  {
    const std::size_t pass = ex.almost_pass + rn.almost_pass, fail = ex.almost_fail + rn.almost_fail;
    const std::size_t jumps = ex.almost_jumps + rn.almost_jumps;
    report(3, "almost-transverse dichotomy", fail == 0 && pass > 0 && jumps > 0 && jumps < pass,
           std::to_string(pass) + " pass (" + std::to_string(jumps) + " at dim rho, the rest at rho-1), " +
               std::to_string(fail) + " fail");
  }
  {
    const std::size_t pass = ex.bound_pass + rn.bound_pass, fail = ex.bound_fail + rn.bound_fail;
    std::string witnesses;
    std::size_t shown = 0;
    for (std::size_t i = 0; i < exhaustive.instances.size(); ++i) {
      const auto& inst = exhaustive.instances[i];
      if (inst.cls != PairClass::Identical || !exhaustive.outcomes[i].bound_attained) continue;
      const std::string w = "d=" + std::to_string(inst.sigma.size()) + " a=" + seq_text(inst.a.seq()) +
                            " b=" + seq_text(inst.b.seq());
      if (witnesses.find(w) != std::string::npos) continue;
      if (shown++ < 3) witnesses += (witnesses.empty() ? "" : "; ") + w;
    }
    // With minimal indices the identical-flag variety is the whole
    // Grassmannian; the bound then exceeds it by d(d-1)/2.
    bool minimal_gap_ok = true;
    for (std::size_t d = 2; d <= 4; ++d) {
      SchubertPair<PrimeField> pair(standard_flag(field, d), SchubertIndex::minimal(d, 0), standard_flag(field, d),
                                    SchubertIndex::minimal(d, 0));
      auto lambda = sample_sigma_circ_point(pair, d);
      minimal_gap_ok = minimal_gap_ok && lambda &&
                       pair.tangent(*lambda).bound - pair.tangent(*lambda).dim == static_cast<long>(d * (d - 1) / 2);
    }
    report(4, "Coxeter bound", fail == 0 && pass > 0 && ex.identical_bound_attained > 0 && minimal_gap_ok,
           std::to_string(pass) + " within bound, " + std::to_string(fail) + " above; identical-flag equality at " +
               std::to_string(ex.identical_bound_attained) + " points, e.g. " + witnesses +
               "; minimal indices leave a gap of d(d-1)/2");
  }

  {
    t0 = Clock::now();
    const auto e = run_example_0202(field, 0);
    const double t = seconds_since(t0);
    const Json& rep = e.report;
    bool comps = true, meet = false;
    for (const auto& p : rep["points"]) {
      const long dim = p["tangent"]["dim"];
      if (p["label"] == "Z1 ∩ Z2") meet = dim == 3 && p["oracle_dim"] == 3;
      else comps = comps && dim == 2 && p["oracle_dim"] == 2;
    }
    const auto& line = rep["intersection_line"];
    const bool excluded = line["excluded"].size() == 2;
    std::ostringstream d;
    d << "components dim 2, intersection dim 3, " << line["excluded"].size() << " excluded points of "
      << line["scanned"].get<std::size_t>() << " on the intersection line, " << t << " s";
    report(5, "example 0202", e.ok && comps && meet && excluded && t < 1.0, d.str());
  }

  {
    t0 = Clock::now();
    const auto chains = run_chain_sweep(3, 2, 6, jobs);
    const double t = seconds_since(t0);
    std::ostringstream d;
    d << chains.pass << "/" << chains.cases << " cases agree (" << chains.nonempty << " nonempty), " << t << " s";
    report(6, "chain enumeration", chains.fail == 0 && chains.cases > 0 && t < 300, d.str());
  }

  {
    t0 = Clock::now();
    const auto single = run_single_sweep(field, single_instances(5, 6, 0), jobs);
    const double t = seconds_since(t0);
    std::ostringstream d;
    d << single.on_open_stratum << " points on the open stratum, " << single.off_open_stratum << " off it, "
      << single.fail << " fail, " << t << " s";
    report(7, "smooth locus", single.fail == 0 && single.on_open_stratum > 0 && single.off_open_stratum > 0, d.str());
  }

  {
    SweepConfig c;
    c.seed = 0;
    c.jobs = jobs;
    const auto a = run_verify(c);
    c.jobs = 1;
    const auto b = run_verify(c);
    const bool same = strip_timing(a.report) == strip_timing(b.report);
    report(8, "deterministic verify", same && a.violations == 0,
           std::string(same ? "identical" : "different") + " reports modulo timing, " +
               std::to_string(a.violations) + " violations");
  }

  return failures == 0 ? 0 : 1;
}
