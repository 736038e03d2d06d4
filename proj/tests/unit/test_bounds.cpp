#include "doctest.h"
#include "lpc/bounds.hpp"
#include "lpc/css.hpp"
#include "lpc/errors.hpp"
#include "support/oracles.hpp"

using namespace lpc;

namespace {

// Permanent by summing over all permutations.
std::int64_t perm_brute(const WeightMatrix& w) {
  std::vector<std::size_t> p(w.rows);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  std::int64_t total = 0;
  do {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < p.size(); ++i) prod *= w.at(i, p[i]);
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("permanent examples") {
  CHECK(permanent(WeightMatrix::from_rows({{1, 1}, {1, 1}})) == 2);
  CHECK(permanent(WeightMatrix::from_rows({{1, 2}, {3, 4}})) == 10);
  for (std::size_t n = 1; n <= 6; ++n) {
    WeightMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
    CHECK(permanent(id) == 1);
    CHECK(perm_upper_trivial(id) == 1);
  }
  CHECK(perm_upper_trivial(WeightMatrix::from_rows({{1, 1}, {1, 1}})) == 4);
  CHECK_THROWS_AS(permanent(WeightMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(permanent(WeightMatrix(21, 21)), BudgetExceeded);
}

TEST_CASE("Ryser matches the permutation sum and the trivial bound") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(4 + (t % 4 == 0 ? 3 : 0));
    WeightMatrix w(n, n);
    for (auto& v : w.data) v = static_cast<std::int64_t>(rng.below(4));
    const auto p = permanent(w);
    CHECK(p == perm_brute(w));
    CHECK(p <= perm_upper_trivial(w));
  }
}

TEST_CASE("qc_distance_bound examples") {
  CHECK(*qc_distance_bound(WeightMatrix::from_rows({{2, 2}})) == 4);
  CHECK_FALSE(qc_distance_bound(WeightMatrix(1, 3)).has_value());
  CHECK_THROWS_AS(qc_distance_bound(WeightMatrix(2, 2)), DomainError);
  CHECK_THROWS_AS(qc_distance_bound(WeightMatrix(2, 30)), BudgetExceeded);
}

TEST_CASE("qc_distance_bound is sound on small QC codes") {
  Rng rng(62);
  for (int t = 0; t < 25; ++t) {
    const std::size_t l = 2 + rng.below(5);
    const std::size_t n = 2 + rng.below(3), m = 1 + rng.below(n - 1);
    const GroupSpec g = GroupSpec::cyclic(l);
    AlgMatrix a(g, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t e = 0; e < l; ++e)
          if (rng.uniform() < 0.3) a.at(i, j).set(e);
    const auto bound = qc_distance_bound(weight_matrix(a));
    const BinMatrix h = block_lift(a);
    const auto d = oracle::brute_distance(h, BinMatrix(0, h.cols()));
    if (bound && d) CHECK(*bound >= static_cast<std::int64_t>(*d));
    const auto w = static_cast<std::int64_t>(w_limit(a));
    if (bound && w >= 2) {
      std::int64_t cap = static_cast<std::int64_t>(m + 1);
      for (std::size_t i = 0; i < m; ++i) cap *= w;
      CHECK(*bound <= cap);
    }
  }
}

TEST_CASE("autocorrelation witness examples") {
  for (std::size_t l = 2; l <= 9; ++l) {
    const GroupSpec g = GroupSpec::cyclic(l);
    const std::vector<AlgElem> a{AlgElem::one(g)};
    CHECK(autocorr_witness(a) == 1);
  }
  const GroupSpec g4 = GroupSpec::cyclic(4);
  const std::vector<AlgElem> a{AlgElem::from_poly(g4, Poly2::parse("1+x"))};
  const std::size_t t = autocorr_witness(a);
  CHECK((alg_mul(AlgElem::one(g4) + AlgElem::monomial(g4, t), a[0])).weight() >= 2);
  CHECK_THROWS_AS(autocorr_witness({AlgElem::zero(g4)}), DomainError);
  CHECK_THROWS_AS(autocorr_witness({AlgElem::from_poly(g4, Poly2::parse("1+x+x^2"))}), DomainError);
}

TEST_CASE("autocorrelation sum equals 2|a|(l - |a|) blockwise") {
  Rng rng(63);
  for (int t = 0; t < 200; ++t) {
    const std::size_t l = 2 + rng.below(63);
    const GroupSpec g = GroupSpec::cyclic(l);
    std::vector<AlgElem> a(1 + rng.below(4), AlgElem::zero(g));
    std::size_t expected = 0, total = 0;
    for (auto& e : a) {
      const std::size_t target = rng.below(l / 2 + 1);
      while (e.weight() < target) e.set(rng.below(l));
      expected += 2 * e.weight() * (l - e.weight());
      total += e.weight();
    }
    if (total == 0) continue;
    CHECK(autocorr_sum(a) == expected);
    CHECK(autocorr_sum(a) >= total * l);
  }
}
