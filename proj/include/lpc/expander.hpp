#pragma once

// Regular graphs, spectra, shift lifts, Tanner codes and their quasi-cyclic
// lifts, (alpha, beta)-expansion certificates, and the desk-scale pipeline
// LP(A, 1+x) with A a lifted Tanner code.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpc/bitmatrix.hpp"
#include "lpc/css.hpp"
#include "lpc/groupring.hpp"

namespace lpc {

class Graph {
 public:
  Graph() = default;
  /// Loops are rejected; multi-edges are allowed and clear simple().
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool simple() const noexcept { return simple_; }
  std::vector<std::size_t> degrees() const;
  /// The common degree, if every vertex has the same one.
  std::optional<std::size_t> regular_degree() const;
  /// Incident edge indices of v in ascending order.
  std::vector<std::size_t> incident(std::size_t v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  bool simple_ = true;
};

/// Uniform-ish simple w-regular graph on n vertices: random pairing of the
/// n w half-edges, restarting (up to 1000 times) when the greedy pairing gets
/// stuck. Edges are returned sorted by (min endpoint, max endpoint).
Graph random_regular(std::size_t n, std::size_t w, std::uint64_t seed);

struct SpectralReport {
  std::vector<double> eigenvalues;  // descending
  double lambda = 0;                // max(|lambda_2|, |lambda_n|)
  double tolerance = 1e-9;
};
SpectralReport spectrum_lambda(const Graph& g);

struct MixingResult {
  bool holds = false;
  std::size_t inner_edges = 0;
  double bound = 0;
  double slack = 0;
};
/// |E(S)| <= (alpha + lambda / w) w |S| / 2 with alpha = |S| / n unless given.
MixingResult mixing_check(const Graph& g, const std::vector<std::size_t>& s, double lambda,
                          std::optional<double> alpha = std::nullopt);

/// Each edge (u, v) is oriented u -> v; replica (e, i) joins (u, i) to
/// (v, i + s(e) mod l). Lifted vertex (v, i) is numbered v l + i and lifted
/// edge (e, i) is numbered e l + i.
struct ShiftLift {
  Graph base;
  std::size_t l = 1;
  std::vector<std::size_t> shifts;
};
std::pair<Graph, ShiftLift> shift_lift(const Graph& g, std::size_t l, std::uint64_t seed);
std::pair<Graph, ShiftLift> shift_lift(const Graph& g, std::size_t l, std::vector<std::size_t> shifts);

struct TannerSpec {
  Graph graph;
  BinMatrix h0;  // r x w, full row rank
  std::vector<std::size_t> edge_column;
  /// ports[v][p] = edge attached to port p of v (column p of h0).
  std::vector<std::vector<std::size_t>> ports;
  /// row_of[v][j] = parity-check row carrying row j of h0 at v.
  std::vector<std::vector<std::size_t>> row_of;
};
/// Edge e -> column e, ports by ascending edge index, rows v r + j.
TannerSpec canonical_tanner(const Graph& g, const BinMatrix& h0);
/// The indexing induced on the lifted graph by a base spec: column (e, i) ->
/// edge_column[e] l + i, ports copied from the base, rows (row_of[v][j]) l + i.
TannerSpec lifted_tanner(const TannerSpec& base, const ShiftLift& lift, const Graph& lifted);
BinMatrix tanner_parity(const TannerSpec& spec);
/// Rows of the tail vertex get h(e), rows of the head vertex get x^s(e) h'(e).
AlgMatrix qc_tanner_parity(const TannerSpec& base, const ShiftLift& lift);

struct ExpansionCert {
  double alpha = 0;
  double beta = 0;
  std::size_t verified_up_to = 0;
  std::uint64_t checked = 0;
  /// min |Hx| / |x| over the checked range (infinity when nothing checked).
  double min_ratio = 0;
  std::optional<BitVec> counterexample;

  bool holds() const noexcept { return !counterexample.has_value(); }
};
/// Exhaustive over 1 <= |x| <= floor(alpha cols). Throws BudgetExceeded
/// when sum_k C(cols, k) > budget.
ExpansionCert certify_expanding(const BinMatrix& h, double alpha, double beta, double budget = 5e7);

/// Exact (d(C0), d(C0^perp)) of the code with parity-check h0; w <= 24.
std::pair<std::size_t, std::size_t> code_distances(const BinMatrix& h0);

struct LocalCode {
  BinMatrix h0;
  std::size_t d = 0;
  std::size_t d_dual = 0;
};
/// Random r x w full-rank matrices until d and d_perp are both >= delta w.
/// Throws BudgetExceeded (reporting the best delta reached) after attempts.
LocalCode local_code_search(std::size_t w, std::size_t r, double delta, std::uint64_t seed,
                            std::size_t attempts = 20000);

/// min(min(alpha/2, alpha beta/4), alpha/(4w) min(beta, 1)).
double product_expansion_gamma(double alpha, double beta, std::size_t w);

/// Expansion parameters of a Tanner code whose graph has spectral parameter
/// lambda and whose local codes have both distances >= delta w.
struct TannerExpansion {
  bool premises = false;  // lambda < delta w
  double alpha_sup = 0;   // (delta/w)(1 - lambda/(delta w))
};
TannerExpansion tanner_expansion(double delta, std::size_t w, double lambda);
double tanner_expansion_beta(double alpha, double delta, std::size_t w, double lambda);

struct PipelineReport {
  std::size_t l = 0, n = 0, w = 0, r = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  LocalCode local;
  Graph base;
  ShiftLift lift;
  AlgMatrix a;
  std::size_t code_n = 0;
  std::size_t k_rank = 0;
  std::size_t k_formula = 0;  // dim C(A(1)) + dim C(A^T(1))
  std::size_t limitedness = 0;
  double lambda_base = 0;
  double lambda_lift = 0;
  bool expansion_premises = false;
  double alpha = 0, beta = 0;
  std::optional<ExpansionCert> cert_a, cert_at;
  std::string cert_note;
  double gamma = 0;
  double gamma_l = 0;
  /// X-codeword [1_l e_i, 0] of weight l with e_i outside im A(1)^T.
  std::optional<BitVec> dx_witness;
  std::size_t dx_witness_index = 0;
  DistanceResult dz, dx;
};
/// 2n-vertex w-regular base graph -> local code -> shift l-lift -> QC Tanner
/// matrix A -> LP(A, 1+x), with the measurements listed in PipelineReport.
PipelineReport lp_tanner_pipeline(std::size_t l, std::size_t n, std::size_t w, std::size_t r, double delta,
                                 std::uint64_t seed, unsigned jobs = 0, double cert_budget = 5e7);

/// Edge-list text: header "n <count> w <degree>", then "u v" or "u v s".
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::size_t>* shifts = nullptr);
/// Returns the graph and the shift column when every line has one.
std::pair<Graph, std::vector<std::size_t>> read_edge_list(std::istream& in);

}  // namespace lpc
