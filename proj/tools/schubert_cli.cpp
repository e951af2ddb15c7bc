// schubert-cli: command-line front end for the schubert library.
//
// Exit codes: 0 ok, 1 usage or input error, 2 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schubert/verify.hpp"

namespace {

using namespace schubert;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string field = "fp:1009";
  bool field_given = false;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::string out;
  std::string format = "json";
};

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!detail::is_integer_text(item)) throw usage_error("not an integer list: '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw usage_error("empty integer list");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The file's own field unless --field was given explicitly, in which case
// the entries are read over that field.
AnyMatrix load_matrix(const std::string& path, const Globals& g) {
  const std::string text = read_file(path);
  if (!g.field_given) return parse_matrix(text);
  std::istringstream in(text);
  std::string header;
  while (std::getline(in, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  parse_field_spec(header);  // still validated
  return std::visit([&](const auto& f) -> AnyMatrix { return read_matrix_body(in, f); }, parse_field_option(g.field));
}

int emit(const Json& j, const Globals& g) {
  const std::string text = g.format == "text" ? json_to_text(j) : j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot write '" + g.out + "'");
    f << text;
    if (!f) throw std::runtime_error("write to '" + g.out + "' failed");
  }
  return kExitOk;
}

template <Field F>
Flag<F> flag_of(const AnyMatrix& m, const std::string& what) {
  const auto* mat = std::get_if<Matrix<F>>(&m);
  if (!mat) throw usage_error(what + ": flag files must use the same field");
  return flag_from_basis(*mat);
}

Json flagpos_json(const AnyMatrix& pm, const AnyMatrix& qm) {
  return std::visit(
      [&](const auto& p_mat) -> Json {
        using F = std::decay_t<decltype(p_mat.field())>;
        const Flag<F> p = flag_from_basis(p_mat), q = flag_of<F>(qm, "flagpos");
        const auto rel = relative_position(p, q);
        const auto cls = classify(p, q);
        Json j = {{"field", p.field().name()},
                  {"d", p.ambient_dim()},
                  {"sigma", permutation_json(rel.sigma)},
                  {"class", to_string(cls.kind)}};
        if (cls.kind == FlagPairClass::Kind::AlmostTransverse) {
          j["t"] = cls.t;
          j["t_prime"] = cls.t_prime;
        }
        j["coxeter_length"] = inversions(compose(Permutation::longest(p.ambient_dim()), rel.sigma));
        j["dim_table"] = dim_table(p, q);
        j["basis"] = matrix_json(rel.basis);
        return j;
      },
      pm);
}

struct TangentArgs {
  std::string p_file, q_file, a_csv, b_csv, point_file;
};

// Returns the report and whether formula and oracle agree.
std::pair<Json, bool> tangent_json(const TangentArgs& args, const Globals& g) {
  const AnyMatrix pm = load_matrix(args.p_file, g), qm = load_matrix(args.q_file, g);
  return std::visit(
      [&](const auto& p_mat) -> std::pair<Json, bool> {
        using F = std::decay_t<decltype(p_mat.field())>;
        const Flag<F> p = flag_from_basis(p_mat), q = flag_of<F>(qm, "tangent");
        const std::size_t d = p.ambient_dim();
        SchubertPair<F> pair(p, SchubertIndex(d, parse_csv(args.a_csv)), q, SchubertIndex(d, parse_csv(args.b_csv)));
        std::optional<Subspace<F>> lambda;
        if (!args.point_file.empty()) {
          const AnyMatrix lm = load_matrix(args.point_file, g);
          const auto* l = std::get_if<Matrix<F>>(&lm);
          if (!l) throw usage_error("tangent: point file must use the same field as the flags");
          lambda = Subspace<F>(*l);
          if (lambda->dim() != l->rows()) throw usage_error("tangent: point rows are linearly dependent");
        } else {
          lambda = sample_sigma_circ_point(pair, g.seed);
          if (!lambda) {
            Json j = {{"sampled", false}, {"seed", g.seed}, {"rho_minus_1", pair.rho_minus_1()}};
            return {j, true};
          }
        }
        const auto rep = pair.tangent(*lambda);
        const long oracle = tangent_dim_oracle(*lambda, pair);
        Json j = tangent_report_json(rep);
        j["oracle_dim"] = oracle;
        j["formula_matches_oracle"] = rep.dim == oracle;
        j["point"] = subspace_json(*lambda);
        j["field"] = p.field().name();
        return {j, rep.dim == oracle};
      },
      pm);
}

BNData bn_from(int g, int r, int d, const std::string& a, const std::string& b) {
  return BNData(g, r, d, parse_csv(a), parse_csv(b));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent spaces of Schubert intersections and Brill-Noether numerology, in exact arithmetic."};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "Ground field: q or fp:<p>")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->envname("SCHUBERT_SEED")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (0: one per core)")->capture_default_str();
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a matrix file")->fallthrough();
  std::string matrix_file;
  rank_cmd->add_option("matrix", matrix_file, "Matrix file")->required();

  auto* flagpos_cmd = app.add_subcommand("flagpos", "Relative position of two flags")->fallthrough();
  std::string p_file, q_file;
  flagpos_cmd->add_option("P", p_file, "First flag (basis file)")->required();
  flagpos_cmd->add_option("Q", q_file, "Second flag (basis file)")->required();

  auto* tangent_cmd = app.add_subcommand("tangent", "Tangent space of a Schubert intersection at a point")->fallthrough();
  TangentArgs targs;
  tangent_cmd->add_option("P", targs.p_file, "First flag (basis file)")->required();
  tangent_cmd->add_option("Q", targs.q_file, "Second flag (basis file)")->required();
  tangent_cmd->add_option("a", targs.a_csv, "Schubert index for P, comma separated")->required();
  tangent_cmd->add_option("b", targs.b_csv, "Schubert index for Q, comma separated")->required();
  tangent_cmd->add_option("--point", targs.point_file, "Point file (rows span Lambda); sampled from --seed if absent");

  int bg = 0, br = 0, bd = 0;
  std::string ba, bb;
  auto add_bn = [&](CLI::App* cmd) {
    cmd->add_option("g", bg, "Genus")->required();
    cmd->add_option("r", br, "Rank")->required();
    cmd->add_option("d", bd, "Degree")->required();
    cmd->add_option("a", ba, "Vanishing sequence at P, comma separated")->required();
    cmd->add_option("b", bb, "Vanishing sequence at Q, comma separated")->required();
  };
  auto* rho_cmd = app.add_subcommand("rho", "Brill-Noether number rho")->fallthrough();
  add_bn(rho_cmd);
  auto* rhohat_cmd = app.add_subcommand("rhohat", "Nonemptiness invariant rho-hat")->fallthrough();
  add_bn(rhohat_cmd);

  auto* fiber_cmd = app.add_subcommand("fiber", "Genus-1 fiber model over a point of Pic^d")->fallthrough();
  add_bn(fiber_cmd);
  std::string kind = "generic";
  std::size_t samples = 8;
  fiber_cmd->add_option("--kind", kind, "generic | allp | allq | mixed:<a>")->capture_default_str();
  fiber_cmd->add_option("--samples", samples, "Points to sample")->capture_default_str();

  auto* chains_cmd = app.add_subcommand("chains", "Refined limit linear series on a chain")->fallthrough();
  add_bn(chains_cmd);
  std::string genera_csv;
  bool list = false;
  chains_cmd->add_option("--genera", genera_csv, "Component genera (0 or 1), comma separated");
  chains_cmd->add_flag("--list", list, "Include every admissible assignment");

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification sweep")->fallthrough();
  SweepConfig cfg;
  verify_cmd->add_option("--d-max", cfg.d_max, "Largest ambient dimension")->capture_default_str();
  verify_cmd->add_option("--r-max", cfg.r_max, "Largest projective dimension r")->capture_default_str();
  verify_cmd->add_option("--per-class", cfg.per_class, "Instances per flag-pair class")->capture_default_str();
  verify_cmd->add_option("--chain-g-max", cfg.chain_g_max, "Largest genus in the chain sweep")->capture_default_str();
  verify_cmd->add_option("--chain-d-max", cfg.chain_d_max, "Largest degree in the chain sweep")->capture_default_str();
  verify_cmd->add_option("--fiber-samples", cfg.fiber_samples, "Points per genus-1 fiber model")->capture_default_str();

  auto* example_cmd = app.add_subcommand("example-0202", "Lines in P^3 meeting two intersecting lines")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  g.field_given = app.count("--field") > 0;

  try {
    if (*rank_cmd) {
      const AnyMatrix m = load_matrix(matrix_file, g);
      return std::visit(
          [&](const auto& mat) {
            return emit({{"field", mat.field().name()}, {"rows", mat.rows()}, {"cols", mat.cols()}, {"rank", rank(mat)}},
                        g);
          },
          m);
    }
    if (*flagpos_cmd) return emit(flagpos_json(load_matrix(p_file, g), load_matrix(q_file, g)), g);
    if (*tangent_cmd) {
      auto [j, ok] = tangent_json(targs, g);
      emit(j, g);
      return ok ? kExitOk : kExitVerification;
    }
    if (*rho_cmd || *rhohat_cmd) {
      const BNData data = bn_from(bg, br, bd, ba, bb);
      Json j = bn_data_json(data);
      if (*rho_cmd) j["rho"] = rho(data);
      else j["rho_hat"] = rho_hat(data);
      return emit(j, g);
    }
    if (*fiber_cmd) {
      const BNData data = bn_from(bg, br, bd, ba, bb);
      const FiberKind k = parse_fiber_kind(kind);
      const FiberReport rep = std::visit(
          [&](const auto& f) { return analyze_genus1_fiber(f, data, k, samples, g.seed); }, parse_field_option(g.field));
      Json j = fiber_report_json(rep);
      j["seed"] = g.seed;
      emit(j, g);
      return rep.ok() ? kExitOk : kExitVerification;
    }
    if (*chains_cmd) {
      const BNData data = bn_from(bg, br, bd, ba, bb);
      const std::vector<int> genera = genera_csv.empty() ? default_genera(data.g) : parse_csv(genera_csv);
      const ChainVerdict v = chain_dimension_check(data, genera);
      Json j = chain_verdict_json(v);
      if (list) {
        Json all = Json::array();
        for (const auto& c : enumerate_refined_chains(data, genera)) all.push_back(chain_assignment_json(c));
        j["assignments"] = std::move(all);
      }
      emit(j, g);
      return v.ok() ? kExitOk : kExitVerification;
    }
    if (*verify_cmd) {
      cfg.field = g.field;
      cfg.seed = g.seed;
      cfg.jobs = g.jobs;
      const auto result = run_verify(cfg);
      emit(result.report, g);
      return result.violations == 0 ? kExitOk : kExitVerification;
    }
    if (*example_cmd) {
      const auto ex = std::visit([&](const auto& f) { return run_example_0202(f, g.seed); }, parse_field_option(g.field));
      emit(ex.report, g);
      return ex.ok ? kExitOk : kExitVerification;
    }
  } catch (const std::exception& e) {
    // Malformed input, failed preconditions, bad configurations, I/O.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
