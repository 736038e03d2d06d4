#include "lpc/expander.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "lpc/errors.hpp"
#include "lpc/products.hpp"
#include "lpc/rng.hpp"

namespace lpc {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), edges_(std::move(edges)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) throw DimensionError("edge endpoint out of range");
    if (u == v) throw DomainError("loops are not allowed (vertex " + std::to_string(u) + ")");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) simple_ = false;
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::optional<std::size_t> Graph::regular_degree() const {
  const auto d = degrees();
  if (d.empty()) return 0;
  if (std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d[0]; })) return d[0];
  return std::nullopt;
}

std::vector<std::size_t> Graph::incident(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].first == v || edges_[e].second == v) out.push_back(e);
  return out;
}

Graph random_regular(std::size_t n, std::size_t w, std::uint64_t seed) {
  if ((n * w) % 2 != 0) throw DomainError("random_regular: n w must be even");
  if (n <= w) throw DomainError("random_regular: need n > w");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::size_t> points;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < w; ++i) points.push_back(v);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    bool stuck = false;
    while (!points.empty()) {
      const std::size_t i = rng.below(points.size());
      const std::size_t u = points[i];
      std::swap(points[i], points.back());
      points.pop_back();
      std::vector<std::size_t> ok;
      for (std::size_t j = 0; j < points.size(); ++j) {
        const std::size_t v = points[j];
        if (v != u && !edges.count({std::min(u, v), std::max(u, v)})) ok.push_back(j);
      }
      if (ok.empty()) {
        stuck = true;
        break;
      }
      const std::size_t j = ok[rng.below(ok.size())];
      const std::size_t v = points[j];
      std::swap(points[j], points.back());
      points.pop_back();
      edges.insert({std::min(u, v), std::max(u, v)});
    }
    if (!stuck) return Graph(n, {edges.begin(), edges.end()});
  }
  throw BudgetExceeded("random_regular: pairing failed 1000 times", 1000);
}

SpectralReport spectrum_lambda(const Graph& g) {
  const std::size_t n = g.vertex_count();
  SpectralReport rep;
  if (n == 0) return rep;
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& [u, v] : g.edges()) {
    adj(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) += 1;
    adj(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) += 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adj, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InvariantViolation("eigensolver did not converge");
  const auto& ev = es.eigenvalues();  // ascending
  for (Eigen::Index i = ev.size(); i-- > 0;) rep.eigenvalues.push_back(ev(i));
  if (n >= 2) rep.lambda = std::max(std::abs(rep.eigenvalues[1]), std::abs(rep.eigenvalues.back()));
  return rep;
}

MixingResult mixing_check(const Graph& g, const std::vector<std::size_t>& s, double lambda,
                          std::optional<double> alpha) {
  const auto w = g.regular_degree();
  if (!w) throw DomainError("mixing_check needs a regular graph");
  std::vector<char> in(g.vertex_count(), 0);
  for (std::size_t v : s) {
    if (v >= g.vertex_count()) throw DimensionError("vertex out of range");
    in[v] = 1;
  }
  const std::size_t size = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
  const double a = alpha ? *alpha : static_cast<double>(size) / static_cast<double>(g.vertex_count());
  if (static_cast<double>(size) > a * static_cast<double>(g.vertex_count()) + 1e-9)
    throw DomainError("mixing_check: |S| exceeds alpha n");
  MixingResult r;
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) ++r.inner_edges;
  const double wd = static_cast<double>(*w);
  r.bound = 0.5 * (a + (wd > 0 ? lambda / wd : 0)) * wd * static_cast<double>(size);
  r.slack = r.bound - static_cast<double>(r.inner_edges);
  r.holds = r.slack >= -1e-9;
  return r;
}

std::pair<Graph, ShiftLift> shift_lift(const Graph& g, std::size_t l, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> shifts(g.edge_count());
  for (auto& s : shifts) s = rng.below(l);
  return shift_lift(g, l, std::move(shifts));
}

std::pair<Graph, ShiftLift> shift_lift(const Graph& g, std::size_t l, std::vector<std::size_t> shifts) {
  if (l < 1) throw DomainError("shift_lift: l must be at least 1");
  if (shifts.size() != g.edge_count()) throw DimensionError("shift_lift: one shift per edge is required");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (shifts[e] >= l) throw DomainError("shift_lift: shift out of range");
    const auto [u, v] = g.edges()[e];
    for (std::size_t i = 0; i < l; ++i) edges.push_back({u * l + i, v * l + (i + shifts[e]) % l});
  }
  ShiftLift lift{g, l, std::move(shifts)};
  return {Graph(g.vertex_count() * l, std::move(edges)), std::move(lift)};
}

TannerSpec canonical_tanner(const Graph& g, const BinMatrix& h0) {
  const auto w = g.regular_degree();
  if (!w || *w != h0.cols())
    throw DimensionError("canonical_tanner: graph must be regular of degree cols(H0) = " + std::to_string(h0.cols()));
  if (f2_rank(h0) != h0.rows()) throw DomainError("canonical_tanner: H0 must have full row rank");
  TannerSpec spec{g, h0, {}, {}, {}};
  spec.edge_column.resize(g.edge_count());
  std::iota(spec.edge_column.begin(), spec.edge_column.end(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    spec.ports.push_back(g.incident(v));
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < h0.rows(); ++j) rows.push_back(v * h0.rows() + j);
    spec.row_of.push_back(std::move(rows));
  }
  return spec;
}

TannerSpec lifted_tanner(const TannerSpec& base, const ShiftLift& lift, const Graph& lifted) {
  const std::size_t l = lift.l;
  TannerSpec spec{lifted, base.h0, {}, {}, {}};
  spec.edge_column.resize(lifted.edge_count());
  for (std::size_t e = 0; e < base.graph.edge_count(); ++e)
    for (std::size_t i = 0; i < l; ++i) spec.edge_column[e * l + i] = base.edge_column[e] * l + i;
  spec.ports.resize(lifted.vertex_count());
  spec.row_of.resize(lifted.vertex_count());
  for (std::size_t v = 0; v < base.graph.vertex_count(); ++v)
    for (std::size_t i = 0; i < l; ++i) {
      auto& ports = spec.ports[v * l + i];
      for (std::size_t e : base.ports[v]) {
        const auto [tail, head] = base.graph.edges()[e];
        // Replica (e, t) meets (v, i): t = i at the tail, t = i - s at the head.
        const std::size_t t = v == tail ? i : (i + l - lift.shifts[e] % l) % l;
        (void)head;
        ports.push_back(e * l + t);
      }
      for (std::size_t row : base.row_of[v]) spec.row_of[v * l + i].push_back(row * l + i);
    }
  return spec;
}

BinMatrix tanner_parity(const TannerSpec& spec) {
  std::size_t rows = 0;
  for (const auto& r : spec.row_of)
    for (std::size_t x : r) rows = std::max(rows, x + 1);
  BinMatrix h(rows, spec.graph.edge_count());
  for (std::size_t v = 0; v < spec.ports.size(); ++v) {
    if (spec.ports[v].size() != spec.h0.cols())
      throw DimensionError("tanner_parity: vertex " + std::to_string(v) + " does not have w ports");
    for (std::size_t p = 0; p < spec.ports[v].size(); ++p)
      for (std::size_t j = 0; j < spec.h0.rows(); ++j)
        if (spec.h0.get(j, p)) h.set(spec.row_of[v][j], spec.edge_column[spec.ports[v][p]]);
  }
  return h;
}

AlgMatrix qc_tanner_parity(const TannerSpec& base, const ShiftLift& lift) {
  const GroupSpec g = GroupSpec::cyclic(lift.l);
  std::size_t rows = 0;
  for (const auto& r : base.row_of)
    for (std::size_t x : r) rows = std::max(rows, x + 1);
  AlgMatrix a(g, rows, base.graph.edge_count());
  for (std::size_t v = 0; v < base.ports.size(); ++v)
    for (std::size_t p = 0; p < base.ports[v].size(); ++p) {
      const std::size_t e = base.ports[v][p];
      const bool head = base.graph.edges()[e].second == v;
      const AlgElem coeff = AlgElem::monomial(g, head ? lift.shifts[e] % lift.l : 0);
      for (std::size_t j = 0; j < base.h0.rows(); ++j)
        if (base.h0.get(j, p)) a.at(base.row_of[v][j], base.edge_column[e]) += coeff;
    }
  return a;
}

ExpansionCert certify_expanding(const BinMatrix& h, double alpha, double beta, double budget) {
  const std::size_t n = h.cols();
  ExpansionCert cert;
  cert.alpha = alpha;
  cert.beta = beta;
  cert.min_ratio = std::numeric_limits<double>::infinity();
  const auto kmax = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n) + 1e-12));
  double required = 0, binom = 1;
  for (std::size_t k = 1; k <= std::min(kmax, n); ++k) {
    binom = binom * static_cast<double>(n - k + 1) / static_cast<double>(k);
    required += binom;
  }
  if (required > budget)
    throw BudgetExceeded("certify_expanding: " + std::to_string(static_cast<long double>(required)) +
                             " vectors to check exceed the budget",
                         required);
  std::vector<BitVec> cols(n);
  for (std::size_t c = 0; c < n; ++c) cols[c] = h.column(c);
  for (std::size_t k = 1; k <= std::min(kmax, n); ++k) {
    std::vector<std::size_t> idx(k);
    std::vector<BitVec> syn(k + 1, BitVec(h.rows()));
    // Depth-first over increasing index tuples.
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
      if (depth == k) {
        ++cert.checked;
        const double out = static_cast<double>(syn[k].weight());
        cert.min_ratio = std::min(cert.min_ratio, out / static_cast<double>(k));
        if (out + 1e-12 < beta * static_cast<double>(k)) {
          BitVec x(n);
          for (std::size_t c : idx) x.set(c);
          cert.counterexample = std::move(x);
          return false;
        }
        return true;
      }
      for (std::size_t c = start; c + (k - depth) <= n; ++c) {
        idx[depth] = c;
        syn[depth + 1] = syn[depth] ^ cols[c];
        if (!self(self, depth + 1, c + 1)) return false;
      }
      return true;
    };
    if (!rec(rec, 0, 0)) {
      cert.verified_up_to = k - 1;
      return cert;
    }
    cert.verified_up_to = k;
  }
  return cert;
}

namespace {

std::size_t min_nonzero_weight_of_span(const std::vector<BitVec>& basis) {
  const std::size_t k = basis.size();
  if (k == 0) return std::numeric_limits<std::size_t>::max();
  if (k > 24) throw BudgetExceeded("span enumeration too large", static_cast<double>(k));
  BitVec cur(basis[0].size());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t i = 1; i < (1ULL << k); ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, cur.weight());
  }
  return best;
}

}  // namespace

std::pair<std::size_t, std::size_t> code_distances(const BinMatrix& h0) {
  if (h0.cols() > 24) throw BudgetExceeded("code_distances: w > 24", static_cast<double>(h0.cols()));
  const BinMatrix ker = f2_kernel_basis(h0);
  std::vector<BitVec> kb, rb;
  for (std::size_t i = 0; i < ker.rows(); ++i) kb.push_back(ker.row(i));
  RowEchelon re(h0);
  rb = re.basis();
  return {min_nonzero_weight_of_span(kb), min_nonzero_weight_of_span(rb)};
}

LocalCode local_code_search(std::size_t w, std::size_t r, double delta, std::uint64_t seed, std::size_t attempts) {
  if (r >= w) throw DomainError("local_code_search: need r < w");
  if (w > 24) throw DomainError("local_code_search: w must be at most 24");
  const auto target = static_cast<std::size_t>(std::ceil(delta * static_cast<double>(w) - 1e-9));
  Rng rng(seed);
  double best_delta = -1;
  for (std::size_t a = 0; a < attempts; ++a) {
    BinMatrix h(r, w);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < w; ++j) h.set(i, j, rng.coin());
    if (f2_rank(h) != r) continue;
    const auto [d, dd] = code_distances(h);
    const std::size_t worst = std::min(d, dd);
    best_delta = std::max(best_delta, static_cast<double>(worst) / static_cast<double>(w));
    if (d >= target && dd >= target) return {h, d, dd};
  }
  throw BudgetExceeded("local_code_search: no [" + std::to_string(w) + ", " + std::to_string(w - r) +
                           "] code with both distances >= " + std::to_string(target) + " found; best delta " +
                           std::to_string(best_delta),
                       best_delta);
}

double product_expansion_gamma(double alpha, double beta, std::size_t w) {
  if (!(alpha > 0 && beta > 0) || w < 1) throw DomainError("product_expansion_gamma: need alpha, beta > 0 and w >= 1");
  const double g1 = std::min(alpha / 2, alpha * beta / 4);
  const double g2 = alpha / (4.0 * static_cast<double>(w)) * std::min(beta, 1.0);
  return std::min(g1, g2);
}

TannerExpansion tanner_expansion(double delta, std::size_t w, double lambda) {
  const double dw = delta * static_cast<double>(w);
  TannerExpansion p;
  p.premises = lambda < dw;
  p.alpha_sup = delta / static_cast<double>(w) * (1 - lambda / dw);
  return p;
}

double tanner_expansion_beta(double alpha, double delta, std::size_t w, double lambda) {
  const double wd = static_cast<double>(w);
  return (delta - alpha * wd - lambda / wd) / (delta * wd);
}

PipelineReport lp_tanner_pipeline(std::size_t l, std::size_t n, std::size_t w, std::size_t r, double delta,
                                 std::uint64_t seed, unsigned jobs, double cert_budget) {
  PipelineReport rep;
  rep.l = l;
  rep.n = n;
  rep.w = w;
  rep.r = r;
  rep.delta = delta;
  rep.seed = seed;
  rep.local = local_code_search(w, r, delta, seed);
  rep.base = random_regular(2 * n, w, seed);
  auto [lifted, lift] = shift_lift(rep.base, l, splitmix64(seed));
  rep.lift = lift;
  const TannerSpec spec = canonical_tanner(rep.base, rep.local.h0);
  rep.a = qc_tanner_parity(spec, lift);
  const GroupSpec g = GroupSpec::cyclic(l);
  const AlgElem one_plus_x = AlgElem::one(g) + AlgElem::monomial(g, 1 % l);
  const CssCode q = lp_ab(rep.a, one_plus_x);
  rep.code_n = q.n();
  rep.k_rank = css_dimension(q);
  rep.k_formula = lp_ab_dim(rep.a, Poly2::parse("1+x"));
  rep.limitedness = limitedness(q);
  rep.lambda_base = spectrum_lambda(rep.base).lambda;
  rep.lambda_lift = spectrum_lambda(lifted).lambda;

  const TannerExpansion tex = tanner_expansion(delta, w, rep.lambda_lift);
  rep.expansion_premises = tex.premises;
  if (tex.premises) {
    rep.alpha = 0.999 * tex.alpha_sup;
    rep.beta = tanner_expansion_beta(rep.alpha, delta, w, rep.lambda_lift);
    const BinMatrix ba = block_lift(rep.a);
    try {
      rep.cert_a = certify_expanding(ba, rep.alpha, rep.beta, cert_budget);
      rep.cert_at = certify_expanding(ba.transpose(), rep.alpha, rep.beta, cert_budget);
      if (rep.cert_a->verified_up_to == 0 || rep.cert_at->verified_up_to == 0)
        rep.cert_note = "certificate is vacuous: floor(alpha * columns) = 0";
    } catch (const BudgetExceeded& e) {
      rep.cert_note = e.what();
    }
    if (rep.beta > 0 && rep.alpha > 0) {
      rep.gamma = product_expansion_gamma(rep.alpha, rep.beta, w);
      rep.gamma_l = rep.gamma * static_cast<double>(l);
    }
  } else {
    rep.cert_note = "lambda of the lift is not below delta w; expansion premises do not hold";
  }

  // [1_l e_i, 0] lies in ker HZ; it is non-degenerate iff e_i is outside im A(1)^T.
  const std::size_t m = rep.a.rows(), cols = rep.a.cols();
  BinMatrix base(m, cols);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j) base.set(i, j, rep.a.at(i, j).weight() & 1u);
  const RowEchelon img(base);  // row space of A(1) = im A(1)^T
  for (std::size_t i = 0; i < cols; ++i) {
    if (img.contains(BitVec::unit(cols, i))) continue;
    BitVec c(q.n());
    for (std::size_t t = 0; t < l; ++t) c.set(i * l + t);
    if (!(q.hz() * c).is_zero()) throw InvariantViolation("pipeline: [1_l e_i, 0] is not an X-codeword");
    if (f2_in_row_space(q.hx(), c)) throw InvariantViolation("pipeline: [1_l e_i, 0] is degenerate");
    rep.dx_witness = std::move(c);
    rep.dx_witness_index = i;
    break;
  }
  rep.dz = min_weight_search(q, Side::Z, l, jobs);
  rep.dx = min_weight_search(q, Side::X, l, jobs);
  return rep;
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::size_t>* shifts) {
  const auto w = g.regular_degree();
  out << "n " << g.vertex_count() << " w " << (w ? *w : 0) << "\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out << g.edges()[e].first << " " << g.edges()[e].second;
    if (shifts) out << " " << shifts->at(e);
    out << "\n";
  }
}

std::pair<Graph, std::vector<std::size_t>> read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0, w = 0;
  bool header = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> shifts;
  bool all_shifts = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto num = [&](const std::string& t) {
      std::size_t used = 0;
      std::size_t v = 0;
      try {
        v = std::stoul(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || t.empty() || t[0] == '-')
        throw ParseError("expected a non-negative integer, got '" + t + "'", lineno, line.find(t) + 1);
      return v;
    };
    if (!header) {
      if (tok.size() != 4 || tok[0] != "n" || tok[2] != "w")
        throw ParseError("expected header 'n <count> w <degree>'", lineno, 1);
      n = num(tok[1]);
      w = num(tok[3]);
      header = true;
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) throw ParseError("expected 'u v' or 'u v s'", lineno, 1);
    const std::size_t u = num(tok[0]), v = num(tok[1]);
    if (u >= n || v >= n) throw ParseError("vertex index out of range", lineno, 1);
    edges.push_back({u, v});
    if (tok.size() == 3)
      shifts.push_back(num(tok[2]));
    else
      all_shifts = false;
  }
  if (!header) throw ParseError("missing header", lineno + 1, 1);
  Graph g(n, std::move(edges));
  const auto deg = g.regular_degree();
  if (w != 0 && (!deg || *deg != w)) throw ParseError("graph is not " + std::to_string(w) + "-regular", 1, 1);
  if (!all_shifts) shifts.clear();
  return {std::move(g), std::move(shifts)};
}

}  // namespace lpc
