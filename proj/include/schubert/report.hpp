#pragma once

// JSON views of the library's result types, and the plain-text rendering
// derived from them. Keys keep insertion order so reports diff cleanly.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "schubert/brill_noether.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

inline Json permutation_json(const Permutation& p) { return p.images(); }

template <Field F>
Json vector_json(const F& field, std::span<const typename F::value_type> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(field.to_string(x));
  return out;
}

template <Field F>
Json matrix_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.field(), m.row(i)));
  return rows;
}

template <Field F>
Json subspace_json(const Subspace<F>& s) {
  return matrix_json(s.basis());
}

inline Json tangent_report_json(const TangentReport& rep) {
  Json terms = Json::array();
  for (const auto& t : rep.terms) terms.push_back({{"j", t.j}, {"m", t.m}, {"n", t.n}, {"codim", t.codim}});
  Json out = {{"dim", rep.dim},
              {"rho_minus_1", rep.rho_minus_1},
              {"terms", terms},
              {"sigma_on_lambda", permutation_json(rep.sigma_on_lambda)},
              {"class", to_string(rep.flag_class.kind)},
              {"jump", rep.jump},
              {"bound", rep.bound}};
  if (rep.jump_witness) {
    const auto& w = *rep.jump_witness;
    out["jump_witness"] = {{"i", w.i}, {"i_prime", w.i_prime}, {"t", w.t}, {"t_prime", w.t_prime}};
  } else {
    out["jump_witness"] = nullptr;
  }
  return out;
}

inline Json bn_data_json(const BNData& x) {
  return {{"g", x.g}, {"r", x.r}, {"d", x.d}, {"a", x.a}, {"b", x.b}};
}

inline Json fiber_report_json(const FiberReport& rep) {
  Json out = {{"data", bn_data_json(rep.data)}, {"kind", to_string(rep.kind)}, {"rho", rep.rho}, {"empty", rep.empty}};
  if (rep.empty) {
    out["ok"] = rep.ok();
    return out;
  }
  out["expected_dim"] = rep.expected_dim;
  out["class"] = rep.flag_class;
  out["top_reindexed"] = rep.top_reindexed;
  out["richardson_index"] = rep.richardson_index ? Json(*rep.richardson_index) : Json(nullptr);
  Json samples = Json::array();
  for (const auto& s : rep.samples) {
    Json js = tangent_report_json(s.report);
    js["seed"] = s.seed;
    js["aimed_at_jump_locus"] = s.restricted;
    js["oracle_dim"] = s.oracle_dim;
    samples.push_back(std::move(js));
  }
  out["samples"] = std::move(samples);
  out["failed_samples"] = rep.failed_samples;
  out["observed_dims"] = rep.observed_dims;
  out["jump_count"] = rep.jump_count;
  out["violations"] = rep.violations;
  out["ok"] = rep.ok();
  return out;
}

inline Json chain_assignment_json(const ChainAssignment& c) {
  Json comps = Json::array();
  for (const auto& k : c.components) comps.push_back({{"genus", k.genus}, {"a", k.a}, {"b", k.b}, {"rho", k.rho}});
  return {{"components", comps}, {"total_rho", c.total_rho}};
}

inline Json chain_verdict_json(const ChainVerdict& v) {
  return {{"data", bn_data_json(v.data)},
          {"genera", v.genera},
          {"rho", v.rho},
          {"rho_hat", v.rho_hat},
          {"nonempty", v.nonempty},
          {"assignment_count", v.assignment_count},
          {"max_total_rho", v.max_total ? Json(*v.max_total) : Json(nullptr)},
          {"nonempty_iff_rho_hat_nonnegative", v.nonempty_matches},
          {"max_total_equals_rho", v.max_matches},
          {"ok", v.ok()}};
}

namespace detail {

inline void render_text(std::ostringstream& out, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const Json& v = it.value();
    const bool scalar_array =
        v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    if (v.is_primitive() || scalar_array || v.empty()) {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else {
      out << indent << key << ":\n";
      render_text(out, v, indent + "  ");
    }
  }
}

}  // namespace detail

// Indented "key: value" lines. Scalar arrays stay on one line.
inline std::string json_to_text(const Json& j) {
  std::ostringstream out;
  if (j.is_primitive()) return j.dump() + "\n";
  detail::render_text(out, j, "");
  return out.str();
}

}  // namespace schubert
