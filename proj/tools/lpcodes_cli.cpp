// lpcodes: construct and analyze lifted-product and related CSS codes.
//
// Exit codes: 0 success, 1 certificate counterexample, 2 precondition or
// budget refusal, 3 parse error, 4 invariant violation.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_io.hpp"
#include "lpc/bounds.hpp"
#include "lpc/chains.hpp"
#include "lpc/errors.hpp"
#include "lpc/products.hpp"

namespace fs = std::filesystem;
using namespace lpc;
using namespace lpc::cli;

namespace {

void emit(const ordered_json& j) { std::cout << j.dump(2) << std::endl; }

struct CommonOpts {
  unsigned jobs = 0;
};

// --- construct -------------------------------------------------------------

CssCode build_from_descriptor(const ordered_json& d, const fs::path& base) {
  if (!d.contains("type")) throw DomainError("descriptor has no \"type\"");
  const std::string type = d.at("type").get<std::string>();
  auto operand = [&](const char* key) {
    if (!d.contains(key)) throw DomainError("descriptor of type " + type + " needs \"" + key + "\"");
    return resolve_operand(d.at(key).get<std::string>(), base);
  };
  auto alg = [&](const char* key) {
    try {
      return parse_alg_matrix(operand(key));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      const auto p = msg.find(": ");  // drop the "line L, column C" prefix
      if (p != std::string::npos) msg = msg.substr(p + 2);
      throw ParseError(std::string("operand ") + key + ": " + msg, e.line(), e.column());
    }
  };
  if (type == "hp") return hp(parse_binary_matrix(operand("a")), parse_binary_matrix(operand("b")));
  if (type == "lp") return lp(alg("a"), alg("b"));
  if (type == "lp_square") return lp_square(alg("a"));
  if (type == "lp_ab") {
    const AlgMatrix a = alg("a");
    return lp_ab(a, AlgElem::from_poly(a.group(), Poly2::parse(d.at("b").get<std::string>())));
  }
  if (type == "gb") {
    if (!d.contains("l")) throw DomainError("descriptor of type gb needs \"l\"");
    const GroupSpec g = GroupSpec::cyclic(d.at("l").get<std::size_t>());
    return gb(AlgElem::from_poly(g, Poly2::parse(d.at("a").get<std::string>())),
              AlgElem::from_poly(g, Poly2::parse(d.at("b").get<std::string>())));
  }
  if (type == "lp_from_field")
    return lp_from_field(parse_field_matrix(operand("a")), parse_field_matrix(operand("b")));
  throw DomainError("unknown construction type '" + type + "'");
}

int cmd_construct(const std::string& config, std::string out) {
  const std::string text = read_text(config);
  ordered_json d;
  try {
    d = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(std::string("invalid JSON descriptor: ") + e.what(), line, col);
  }
  const CssCode q = build_from_descriptor(d, fs::path(config).parent_path());
  if (out.empty()) out = d.value("output", fs::path(config).replace_extension().string());
  save_code(out, q);
  ordered_json j = report_header("construct", 0);
  j["type"] = d.at("type");
  j["code"] = code_json(q);
  j["files"] = {out + ".hx.alist", out + ".hz.alist"};
  write_text(out + ".report.json", j.dump(2) + "\n");
  emit(j);
  return 0;
}

// --- analyze / distance -----------------------------------------------------

DistanceResult side_distance(const CssCode& q, Side s, const std::string& method, std::size_t budget,
                             std::uint64_t seed, std::size_t trials, std::size_t max_weight, unsigned jobs) {
  if (method == "exact") return exact_distance(q, s, budget, jobs);
  if (method == "search") return min_weight_search(q, s, max_weight, jobs);
  if (method == "estimate") return distance_upper(q, s, seed, trials, jobs);
  throw DomainError("unknown method '" + method + "' (exact, search, estimate)");
}

int cmd_analyze(const std::string& prefix, std::size_t budget, std::uint64_t seed, std::size_t trials,
                unsigned jobs) {
  const CssCode q = load_code(prefix);
  ordered_json j = report_header("analyze", seed);
  j["code"] = code_json(q);
  for (Side s : {Side::Z, Side::X}) {
    const KernelSplit ks = split_kernel(q, s);
    const std::size_t kernel = ks.logicals.size() + ks.stabilizers.size();
    // exact when the kernel fits the budget, otherwise a seeded estimate
    const DistanceResult d =
        kernel <= budget ? exact_distance(q, s, budget, jobs) : distance_upper(q, s, seed, trials, jobs);
    j[s == Side::Z ? "dz" : "dx"] = distance_json(d);
  }
  emit(j);
  return 0;
}

int cmd_distance(const std::string& prefix, const std::string& side, const std::string& method,
                 std::size_t budget, std::uint64_t seed, std::size_t trials, std::size_t max_weight, unsigned jobs) {
  const CssCode q = load_code(prefix);
  std::vector<Side> sides;
  if (side == "z" || side == "both") sides.push_back(Side::Z);
  if (side == "x" || side == "both") sides.push_back(Side::X);
  if (sides.empty()) throw DomainError("side must be z, x or both");
  ordered_json j = report_header("distance", seed);
  j["method"] = method;
  j["n"] = q.n();
  j["k"] = css_dimension(q);
  for (Side s : sides)
    j[s == Side::Z ? "dz" : "dx"] = distance_json(side_distance(q, s, method, budget, seed, trials, max_weight, jobs));
  emit(j);
  return 0;
}

// --- expander ---------------------------------------------------------------

int cmd_gen(std::size_t n, std::size_t w, std::uint64_t seed, const std::string& out) {
  const Graph g = random_regular(n, w, seed);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    write_edge_list(f, g);
  }
  ordered_json j = report_header("expander gen", seed);
  j["n"] = n;
  j["w"] = w;
  j["edges"] = g.edge_count();
  if (!out.empty()) j["file"] = out;
  j["spectrum"] = spectral_json(spectrum_lambda(g));
  emit(j);
  return 0;
}

std::pair<Graph, std::vector<std::size_t>> load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

int cmd_lift(const std::string& graph, std::size_t l, std::uint64_t seed, const std::string& out) {
  const auto [base, unused] = load_graph(graph);
  const auto [lifted, lift] = shift_lift(base, l, seed);
  if (!out.empty()) {
    // the base graph annotated with shifts; the lift is recomputed from it
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    write_edge_list(f, base, &lift.shifts);
  }
  ordered_json j = report_header("expander lift", seed);
  j["l"] = l;
  j["base_lambda"] = spectrum_lambda(base).lambda;
  j["lifted_vertices"] = lifted.vertex_count();
  j["lifted_spectrum"] = spectral_json(spectrum_lambda(lifted));
  j["shifts"] = lift.shifts;
  if (!out.empty()) j["file"] = out;
  emit(j);
  return 0;
}

int cmd_tanner(const std::string& graph, const std::string& h0_path, std::size_t l, const std::string& out) {
  const auto [base, shifts] = load_graph(graph);
  const BinMatrix h0 = load_binary_matrix(h0_path);
  const TannerSpec spec = canonical_tanner(base, h0);
  ordered_json j = report_header("expander tanner", 0);
  if (l > 1) {
    if (shifts.empty()) throw DomainError("--l needs an edge list with shifts (see 'expander lift')");
    const auto [lifted, lift] = shift_lift(base, l, shifts);
    const AlgMatrix a = qc_tanner_parity(spec, lift);
    const BinMatrix h = tanner_parity(lifted_tanner(spec, lift, lifted));
    if (!(block_lift(a) == h)) throw InvariantViolation("QC Tanner matrix disagrees with the lifted graph");
    write_text(out + ".qc", format_alg_matrix(a));
    write_alist_file(out + ".alist", h);
    j["l"] = l;
    j["files"] = {out + ".qc", out + ".alist"};
    j["rows"] = h.rows();
    j["cols"] = h.cols();
  } else {
    const BinMatrix h = tanner_parity(spec);
    write_alist_file(out + ".alist", h);
    j["files"] = {out + ".alist"};
    j["rows"] = h.rows();
    j["cols"] = h.cols();
  }
  emit(j);
  return 0;
}

int cmd_certify(const std::string& matrix, double alpha, double beta, double budget) {
  const ExpansionCert c = certify_expanding(load_binary_matrix(matrix), alpha, beta, budget);
  ordered_json j = report_header("expander certify", 0);
  j["certificate"] = cert_json(c);
  emit(j);
  return c.holds() ? 0 : 1;
}

int cmd_pipeline(std::size_t l, std::size_t n, std::size_t w, std::size_t r, double delta, std::uint64_t seed,
                 unsigned jobs, double budget, const std::string& out) {
  const PipelineReport rep = lp_tanner_pipeline(l, n, w, r, delta, seed, jobs, budget);
  ordered_json j = report_header("expander pipeline", seed);
  j["report"] = pipeline_json(rep);
  if (!out.empty()) {
    write_text(out + ".qc", format_alg_matrix(rep.a));
    save_code(out, lp_ab(rep.a, AlgElem::one(rep.a.group()) + AlgElem::monomial(rep.a.group(), 1)));
    j["files"] = {out + ".qc", out + ".hx.alist", out + ".hz.alist"};
  }
  emit(j);
  return 0;
}

// --- bound / factor / balance ---------------------------------------------

int cmd_bound(const std::string& path, bool qc) {
  const WeightMatrix w = qc ? weight_matrix(parse_alg_matrix(read_text(path))) : parse_weight_matrix(read_text(path));
  const auto b = qc_distance_bound(w);
  ordered_json j = report_header("bound", 0);
  j["rows"] = w.rows;
  j["cols"] = w.cols;
  j["bound"] = b ? ordered_json(*b) : ordered_json("infinity");
  emit(j);
  return 0;
}

int cmd_factor(std::size_t l) {
  const PolyFactorization f = factor_cyclic(l);
  ordered_json j = report_header("factor", 0);
  j["l"] = l;
  ordered_json factors = ordered_json::array();
  for (const Poly2& p : f.factors) factors.push_back({{"poly", p.to_string()}, {"degree", p.degree()}});
  j["factors"] = factors;
  j["degrees"] = f.degrees();
  emit(j);
  return 0;
}

int cmd_balance(const std::string& code, const std::string& classical, std::size_t grade, const std::string& out,
                const std::vector<double>& params) {
  ordered_json j = report_header("balance", 0);
  if (!params.empty()) {
    if (params.size() != 7) throw DomainError("--params takes N,K,dZ,dX,n,k,d");
    const BalanceParams p = balance_params(params[0], params[1], params[2], params[3], params[4], params[5], params[6]);
    j["one_step"] = {{"n_max", p.n1_max}, {"k", p.k1}, {"dz_min", p.dz1_min}, {"dx_min", p.dx1_min}};
    j["two_steps"] = {{"n_max", p.n2_max}, {"k", p.k2}, {"dz_min", p.dz2_min}, {"dx_min", p.dx2_min}};
  }
  if (!code.empty()) {
    if (classical.empty()) throw DomainError("--code needs --classical");
    const CssCode b = balance_construct(load_code(code), load_binary_matrix(classical), grade);
    j["grade"] = grade;
    j["code"] = code_json(b);
    if (!out.empty()) {
      save_code(out, b);
      j["files"] = {out + ".hx.alist", out + ".hz.alist"};
    }
  }
  if (params.empty() && code.empty()) throw DomainError("balance needs --params or --code");
  emit(j);
  return 0;
}

int report_error(const std::string& kind, const std::string& msg, int code, std::optional<double> required = {}) {
  ordered_json j{{"schema", 1}, {"error", kind}, {"message", msg}};
  if (required) j["required_budget"] = *required;
  std::cerr << j.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpcodes: lifted-product and related quantum LDPC codes"};
  app.set_version_flag("--version", std::string(LPCODES_VERSION));
  app.require_subcommand(1);
  std::function<int()> run;

  unsigned jobs = 0;
  std::uint64_t seed = 1;

  auto* construct = app.add_subcommand("construct", "build a code from a JSON descriptor");
  std::string config, out;
  construct->add_option("config", config, "descriptor file")->required()->check(CLI::ExistingFile);
  construct->add_option("--out", out, "output prefix (default: descriptor \"output\" or config stem)");
  construct->callback([&] { run = [&] { return cmd_construct(config, out); }; });

  std::string prefix;
  std::size_t budget = 26, trials = 100000, max_weight = 16;
  auto* analyze = app.add_subcommand("analyze", "parameters and distances of a code");
  analyze->add_option("code", prefix, "prefix of <prefix>.hx.alist / <prefix>.hz.alist")->required();
  analyze->add_option("--budget", budget, "largest kernel dimension enumerated exactly")->capture_default_str();
  analyze->add_option("--seed", seed)->capture_default_str();
  analyze->add_option("--trials", trials, "estimator trials beyond the budget")->capture_default_str();
  analyze->add_option("--jobs", jobs, "worker threads (0 = all)");
  analyze->callback([&] { run = [&] { return cmd_analyze(prefix, budget, seed, trials, jobs); }; });

  std::string side = "both", method = "exact";
  auto* distance = app.add_subcommand("distance", "distance of one or both sides");
  distance->add_option("code", prefix, "code prefix")->required();
  distance->add_option("--side", side)->check(CLI::IsMember({"z", "x", "both"}))->capture_default_str();
  distance->add_option("--method", method)->check(CLI::IsMember({"exact", "search", "estimate"}))->capture_default_str();
  distance->add_option("--budget", budget, "kernel budget for exact")->capture_default_str();
  distance->add_option("--max-weight", max_weight, "weight limit for search")->capture_default_str();
  distance->add_option("--seed", seed)->capture_default_str();
  distance->add_option("--trials", trials)->capture_default_str();
  distance->add_option("--jobs", jobs);
  distance->callback(
      [&] { run = [&] { return cmd_distance(prefix, side, method, budget, seed, trials, max_weight, jobs); }; });

  auto* expander = app.add_subcommand("expander", "expander graphs, Tanner codes and the LP(A, 1+x) pipeline");
  expander->require_subcommand(1);
  std::size_t n = 0, w = 0, l = 1, r = 1;
  double delta = 0.5, alpha = 0, beta = 0, cert_budget = 5e7;
  std::string graph, h0, matrix;

  auto* gen = expander->add_subcommand("gen", "random w-regular graph");
  gen->add_option("--n", n)->required();
  gen->add_option("--w", w)->required();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--out", out, "edge-list file");
  gen->callback([&] { run = [&] { return cmd_gen(n, w, seed, out); }; });

  auto* lift_cmd = expander->add_subcommand("lift", "random shift lift");
  lift_cmd->add_option("--graph", graph)->required()->check(CLI::ExistingFile);
  lift_cmd->add_option("--l", l)->required();
  lift_cmd->add_option("--seed", seed)->capture_default_str();
  lift_cmd->add_option("--out", out, "base edge list annotated with shifts");
  lift_cmd->callback([&] { run = [&] { return cmd_lift(graph, l, seed, out); }; });

  auto* tanner = expander->add_subcommand("tanner", "Tanner parity-check matrix (QC when --l > 1)");
  tanner->add_option("--graph", graph)->required()->check(CLI::ExistingFile);
  tanner->add_option("--h0", h0, "local parity-check matrix")->required()->check(CLI::ExistingFile);
  tanner->add_option("--l", l, "lift size; needs shifts in the edge list")->capture_default_str();
  tanner->add_option("--out", out)->required();
  tanner->callback([&] { run = [&] { return cmd_tanner(graph, h0, l, out); }; });

  auto* certify = expander->add_subcommand("certify", "exhaustive (alpha, beta) expansion certificate");
  certify->add_option("--matrix", matrix)->required()->check(CLI::ExistingFile);
  certify->add_option("--alpha", alpha)->required();
  certify->add_option("--beta", beta)->required();
  certify->add_option("--budget", cert_budget)->capture_default_str();
  certify->callback([&] { run = [&] { return cmd_certify(matrix, alpha, beta, cert_budget); }; });

  auto* pipeline = expander->add_subcommand("pipeline", "graph -> lift -> QC Tanner A -> LP(A, 1+x)");
  pipeline->add_option("--l", l)->required();
  pipeline->add_option("--n", n)->required();
  pipeline->add_option("--w", w)->required();
  pipeline->add_option("--r", r)->capture_default_str();
  pipeline->add_option("--delta", delta)->capture_default_str();
  pipeline->add_option("--seed", seed)->capture_default_str();
  pipeline->add_option("--jobs", jobs);
  pipeline->add_option("--cert-budget", cert_budget)->capture_default_str();
  pipeline->add_option("--out", out, "prefix for the QC matrix and code files");
  pipeline->callback(
      [&] { run = [&] { return cmd_pipeline(l, n, w, r, delta, seed, jobs, cert_budget, out); }; });

  std::string path;
  bool qc = false;
  auto* bound = app.add_subcommand("bound", "permanent upper bound on the distance of a QC code");
  bound->add_option("matrix", path, "weight matrix (or polynomial matrix with --qc)")->required()->check(CLI::ExistingFile);
  bound->add_flag("--qc", qc, "read a polynomial matrix and use its weight matrix");
  bound->callback([&] { run = [&] { return cmd_bound(path, qc); }; });

  auto* factor = app.add_subcommand("factor", "irreducible factors of x^l - 1");
  factor->add_option("--l", l)->required();
  factor->callback([&] { run = [&] { return cmd_factor(l); }; });

  std::string classical;
  std::size_t grade = 1;
  std::vector<double> params;
  auto* balance = app.add_subcommand("balance", "distance balancing with a classical code");
  balance->add_option("--code", prefix, "quantum code prefix");
  balance->add_option("--classical", classical, "classical parity-check matrix");
  balance->add_option("--grade", grade, "grade of the product complex to read the code from")->capture_default_str();
  balance->add_option("--out", out, "output prefix");
  balance->add_option("--params", params, "N,K,dZ,dX,n,k,d for the parameter bounds")->delimiter(',');
  balance->callback([&] { run = [&] { return cmd_balance(prefix, classical, grade, out, params); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run();
  } catch (const ParseError& e) {
    return report_error("parse", e.what(), 3);
  } catch (const nlohmann::json::exception& e) {
    return report_error("parse", e.what(), 3);
  } catch (const InvariantViolation& e) {
    return report_error("invariant", e.what(), 4);
  } catch (const BudgetExceeded& e) {
    return report_error("budget", e.what(), 2, e.required());
  } catch (const std::exception& e) {
    return report_error("precondition", e.what(), 2);
  }
}
