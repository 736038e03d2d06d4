#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "doctest.h"
#include "lpc/errors.hpp"
#include "lpc/expander.hpp"
#include "lpc/products.hpp"
#include "support/oracles.hpp"

using namespace lpc;

TEST_CASE("random_regular") {
  const Graph k4 = random_regular(4, 3, 5);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.simple());
  std::set<std::pair<std::size_t, std::size_t>> e(k4.edges().begin(), k4.edges().end());
  CHECK(e.size() == 6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_regular(30, 5 + (seed % 2), seed);
    CHECK(g.simple());
    CHECK(g.regular_degree() == std::optional<std::size_t>(5 + (seed % 2)));
  }
  CHECK(random_regular(20, 3, 9).edges() == random_regular(20, 3, 9).edges());
  CHECK_THROWS_AS(random_regular(5, 3, 1), DomainError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
}

TEST_CASE("spectra of K4 and cycles") {
  const SpectralReport k4 = spectrum_lambda(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  REQUIRE(k4.eigenvalues.size() == 4);
  CHECK(std::abs(k4.eigenvalues[0] - 3) < 1e-9);
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(k4.eigenvalues[i] + 1) < 1e-9);
  CHECK(std::abs(k4.lambda - 1) < 1e-9);
  for (std::size_t n : {5u, 6u, 9u}) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    const SpectralReport r = spectrum_lambda(Graph(n, edges));
    std::vector<double> want;
    for (std::size_t k = 0; k < n; ++k) want.push_back(2 * std::cos(2 * std::numbers::pi * static_cast<double>(k) / n));
    std::sort(want.rbegin(), want.rend());
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(r.eigenvalues[k] - want[k]) < 1e-9);
    CHECK(std::abs(r.lambda - std::max(std::abs(want[1]), std::abs(want[n - 1]))) < 1e-9);
  }
}

TEST_CASE("expander mixing examples") {
  const Graph g = random_regular(40, 4, 3);
  const double lambda = spectrum_lambda(g).lambda;
  const MixingResult one = mixing_check(g, {7}, lambda);
  CHECK(one.inner_edges == 0);
  CHECK(one.holds);
  std::vector<std::size_t> all(40);
  for (std::size_t i = 0; i < 40; ++i) all[i] = i;
  const MixingResult full = mixing_check(g, all, lambda, 1.0);
  CHECK(full.inner_edges == 80);
  CHECK(full.holds);
}

TEST_CASE("shift lifts") {
  const Graph base(2, {{0, 1}});
  const auto [same, l1] = shift_lift(base, 1, 3);
  CHECK(same.edges() == base.edges());
  const auto [lifted, lift] = shift_lift(base, 3, std::vector<std::size_t>{1});
  std::set<std::pair<std::size_t, std::size_t>> got;
  for (auto [u, v] : lifted.edges()) got.insert({std::min(u, v), std::max(u, v)});
  // (u, i) = i, (v, i) = 3 + i; edge (u_i, v_{i+1})
  CHECK(got == std::set<std::pair<std::size_t, std::size_t>>{{0, 4}, {1, 5}, {2, 3}});
  CHECK_THROWS_AS(shift_lift(base, 3, std::vector<std::size_t>{3}), DomainError);
  const Graph g = random_regular(20, 4, 8);
  const auto [big, lf] = shift_lift(g, 16, 4);
  CHECK(big.regular_degree() == std::optional<std::size_t>(4));
  MESSAGE("lambda(G) = " << spectrum_lambda(g).lambda << ", lambda(lift) = " << spectrum_lambda(big).lambda);
}

TEST_CASE("tanner parity examples") {
  const Graph g = random_regular(8, 3, 2);
  const TannerSpec spec = canonical_tanner(g, BinMatrix::from_rows({"111"}));
  const BinMatrix h = tanner_parity(spec);
  CHECK(h.rows() == 8);
  CHECK(h.cols() == 12);
  for (std::size_t v = 0; v < 8; ++v) {
    BitVec want(12);
    for (std::size_t e : g.incident(v)) want.set(e);
    CHECK(h.row(v) == want);
  }
  const BinMatrix h0 = BinMatrix::from_rows({"110", "011"});
  const BinMatrix h2 = tanner_parity(canonical_tanner(g, h0));
  const auto cw = h0.col_weights();
  const std::size_t h0_max = *std::max_element(cw.begin(), cw.end());
  for (std::size_t w : h2.col_weights()) CHECK(w <= 2 * h0_max);
  CHECK_THROWS_AS(canonical_tanner(g, BinMatrix::from_rows({"11", "11"})), DimensionError);
  CHECK_THROWS_AS(canonical_tanner(g, BinMatrix::from_rows({"110", "110"})), DomainError);
}

TEST_CASE("qc tanner parity") {
  const Graph g = random_regular(12, 3, 4);
  const BinMatrix h0 = BinMatrix::from_rows({"110", "011"});
  const TannerSpec spec = canonical_tanner(g, h0);
  const auto [same, l1] = shift_lift(g, 1, 9);
  const AlgMatrix a1 = qc_tanner_parity(spec, l1);
  CHECK(block_lift(a1) == tanner_parity(spec));

  // single edge with shift s: head rows carry x^s h'(e)
  const Graph edge(2, {{0, 1}});
  const TannerSpec es = canonical_tanner(edge, BinMatrix::from_rows({"1"}));
  const auto [le, lift] = shift_lift(edge, 5, std::vector<std::size_t>{2});
  const AlgMatrix qa = qc_tanner_parity(es, lift);
  CHECK(qa.at(0, 0) == AlgElem::one(qa.group()));
  CHECK(qa.at(1, 0) == AlgElem::monomial(qa.group(), 2));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph base = random_regular(12, 3, seed);
    const TannerSpec s = canonical_tanner(base, h0);
    const auto [lifted, lf] = shift_lift(base, 5, seed + 100);
    CHECK(block_lift(qc_tanner_parity(s, lf)) == tanner_parity(lifted_tanner(s, lf, lifted)));
  }
}

TEST_CASE("expansion certificates") {
  const ExpansionCert id = certify_expanding(BinMatrix::identity(8), 1.0, 1.0);
  CHECK(id.holds());
  CHECK(id.verified_up_to == 8);
  const ExpansionCert zero = certify_expanding(BinMatrix(4, 6), 0.5, 0.1);
  REQUIRE_FALSE(zero.holds());
  CHECK(zero.counterexample->weight() == 1);
  CHECK_THROWS_AS(certify_expanding(BinMatrix(4, 60), 0.5, 0.1, 1e6), BudgetExceeded);
}

TEST_CASE("certificate for a Tanner matrix on K7") {
  // K7: 6-regular with lambda = 1 < delta w = 2.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < 7; ++u)
    for (std::size_t v = u + 1; v < 7; ++v) edges.emplace_back(u, v);
  const Graph k7(7, edges);
  const double lambda = spectrum_lambda(k7).lambda;
  CHECK(std::abs(lambda - 1) < 1e-9);
  const LocalCode lc = local_code_search(6, 2, 1.0 / 3, 1);
  CHECK(lc.d >= 2);
  CHECK(lc.d_dual >= 2);
  const TannerExpansion te = tanner_expansion(1.0 / 3, 6, lambda);
  CHECK(te.premises);
  const double alpha = 0.999 * te.alpha_sup;
  const double beta = tanner_expansion_beta(alpha, 1.0 / 3, 6, lambda);
  const ExpansionCert c = certify_expanding(tanner_parity(canonical_tanner(k7, lc.h0)), alpha, beta);
  CHECK(c.holds());
}

TEST_CASE("local codes") {
  CHECK(code_distances(BinMatrix::from_rows({"1111"})) == std::pair<std::size_t, std::size_t>{2, 4});
  const BinMatrix hamming = BinMatrix::from_rows({"1010101", "0110011", "0001111"});
  CHECK(code_distances(hamming) == std::pair<std::size_t, std::size_t>{3, 4});
  const LocalCode lc = local_code_search(4, 1, 0.5, 3);
  CHECK(lc.d >= 2);
  CHECK(lc.d_dual >= 2);
  CHECK_THROWS_AS(local_code_search(4, 4, 0.5, 1), DomainError);
  try {
    local_code_search(4, 1, 1.0, 1, 200);
    FAIL("no throw");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == doctest::Approx(0.5));
  }
}

TEST_CASE("gamma and expansion parameters") {
  CHECK(product_expansion_gamma(0.1, 1, 2) == doctest::Approx(0.0125));
  double prev = 1;
  for (std::size_t w = 1; w < 20; ++w) {
    const double g = product_expansion_gamma(0.2, 0.7, w);
    CHECK(g <= prev);
    prev = g;
  }
  CHECK_THROWS_AS(product_expansion_gamma(0, 1, 2), DomainError);
  const TannerExpansion te = tanner_expansion(0.5, 6, 4);
  CHECK_FALSE(te.premises);
}

TEST_CASE("edge list round trip") {
  const Graph g = random_regular(10, 3, 1);
  std::vector<std::size_t> shifts(g.edge_count());
  for (std::size_t i = 0; i < shifts.size(); ++i) shifts[i] = i % 4;
  std::stringstream ss;
  write_edge_list(ss, g, &shifts);
  const auto [back, s] = read_edge_list(ss);
  CHECK(back.edges() == g.edges());
  CHECK(s == shifts);
  std::stringstream bad("n 3 w 2\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
}

TEST_CASE("tiny pipeline") {
  const PipelineReport r = lp_tanner_pipeline(5, 6, 3, 1, 0.5, 1, 1);
  CHECK(r.code_n == 5 * (18 + 12));
  CHECK(r.k_rank == r.k_formula);
  REQUIRE(r.dx_witness.has_value());
  CHECK(r.dx_witness->weight() == 5);
  CHECK(r.dx.weight.has_value());
  CHECK(*r.dx.weight <= 5);
  CHECK(*r.dx.weight >= 1);
}
