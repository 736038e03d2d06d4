#include "doctest.h"
#include "lpc/errors.hpp"
#include "lpc/products.hpp"
#include "support/oracles.hpp"

using namespace lpc;

namespace {

AlgMatrix random_alg(Rng& rng, const GroupSpec& g, std::size_t r, std::size_t c, double density = 0.3) {
  AlgMatrix m(g, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t e = 0; e < g.order(); ++e)
        if (rng.uniform() < density) m.at(i, j).set(e);
  return m;
}

AlgElem poly(const GroupSpec& g, const char* text) { return AlgElem::from_poly(g, Poly2::parse(text)); }

AlgMatrix one_by_one(const AlgElem& a) {
  AlgMatrix m(a.group(), 1, 1);
  m.set(0, 0, a);
  return m;
}

// Dimension straight from ranks of the binary checks, computed by the oracle.
std::size_t rank_dimension(const CssCode& q) { return q.n() - oracle::rank(q.hx()) - oracle::rank(q.hz()); }

const char* kTanner =
    "group: C31\n"
    "x, x^2, x^4, x^8, x^16\n"
    "x^5, x^10, x^20, x^9, x^18\n"
    "x^25, x^19, x^7, x^14, x^28\n";

}  // namespace

TEST_CASE("hp examples") {
  const BinMatrix c = BinMatrix::from_rows({"110", "011", "101"});
  const CssCode t = hp(c, c);
  CHECK(t.n() == 18);
  CHECK(css_dimension(t) == 2);
  const CssCode one = hp(BinMatrix::identity(1), BinMatrix::identity(1));
  CHECK(one.n() == 2);
  CHECK(css_dimension(one) == 0);
}

TEST_CASE("hp_params examples") {
  CHECK(hp_params(3, 3, 1, 3, 3, 1).n == 18);
  CHECK(hp_params(3, 3, 1, 3, 3, 1).k == 2);
  CHECK(hp_params(2, 1, 1, 2, 1, 1).n == 4);
  CHECK(hp_params(2, 1, 1, 2, 1, 1).k == 0);
}

TEST_CASE("hp dimension formula agrees with ranks") {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const BinMatrix a = oracle::random_matrix(rng, 1 + rng.below(5), 1 + rng.below(6), 0.4);
    const BinMatrix b = oracle::random_matrix(rng, 1 + rng.below(5), 1 + rng.below(6), 0.4);
    const CssCode q = hp(a, b);
    const auto ka = static_cast<std::int64_t>(a.cols() - oracle::rank(a));
    const auto kb = static_cast<std::int64_t>(b.cols() - oracle::rank(b));
    const HpParams p = hp_params(static_cast<std::int64_t>(a.cols()), static_cast<std::int64_t>(a.rows()), ka,
                                 static_cast<std::int64_t>(b.cols()), static_cast<std::int64_t>(b.rows()), kb);
    CHECK(p.n == static_cast<std::int64_t>(q.n()));
    CHECK(p.k == static_cast<std::int64_t>(rank_dimension(q)));
    CHECK(css_dimension(q) == rank_dimension(q));
  }
}

TEST_CASE("lp over the trivial group is hp") {
  Rng rng(42);
  const GroupSpec g = GroupSpec::cyclic(1);
  for (int t = 0; t < 10; ++t) {
    const BinMatrix a = oracle::random_matrix(rng, 1 + rng.below(4), 1 + rng.below(5));
    const BinMatrix b = oracle::random_matrix(rng, 1 + rng.below(4), 1 + rng.below(5));
    CHECK(lp(AlgMatrix::from_binary(g, a), AlgMatrix::from_binary(g, b)) == hp(a, b));
  }
}

TEST_CASE("lp of 1x1 matrices is the gb code") {
  Rng rng(43);
  const GroupSpec g = GroupSpec::cyclic(9);
  for (int t = 0; t < 10; ++t) {
    const AlgMatrix a = random_alg(rng, g, 1, 1, 0.4), b = random_alg(rng, g, 1, 1, 0.4);
    const CssCode l = lp(a, b);
    const CssCode q = gb(a.at(0, 0), b.at(0, 0));
    // lp puts [B(a), B(b)] / [B(b)^T, B(a)^T] in the same order
    CHECK(l == q);
  }
}

TEST_CASE("lp dimension lower bound for tall/wide factors") {
  Rng rng(44);
  for (int t = 0; t < 10; ++t) {
    const GroupSpec g = GroupSpec::cyclic(3 + rng.below(6));
    const std::size_t ma = 1 + rng.below(2), na = ma + 1 + rng.below(2);
    const std::size_t nb = 1 + rng.below(2), mb = nb + 1 + rng.below(2);
    const AlgMatrix a = random_alg(rng, g, ma, na), b = random_alg(rng, g, mb, nb);
    const CssCode q = lp(a, b);
    CHECK(css_dimension(q) >= g.order() * (na - ma) * (mb - nb));
  }
}

TEST_CASE("gb examples") {
  const GroupSpec g3 = GroupSpec::cyclic(3);
  const CssCode q = gb(poly(g3, "1+x"), poly(g3, "1+x"));
  CHECK(q.n() == 6);
  CHECK(css_dimension(q) == 2);
  Rng rng(45);
  const GroupSpec g7 = GroupSpec::cyclic(7);
  for (int t = 0; t < 5; ++t) {
    AlgElem b(g7);
    for (std::size_t i = 0; i < 7; ++i) b.set(i, rng.coin());
    CHECK(css_dimension(gb(AlgElem::one(g7), b)) == 0);
    const AlgElem a = random_alg(rng, g7, 1, 1, 0.4).at(0, 0);
    const CssCode bicycle = gb(a, antipode(a));
    CHECK(bicycle.hx() == BinMatrix::hstack(block_lift(a), block_lift(a).transpose()));
  }
}

TEST_CASE("lp_ab examples") {
  const GroupSpec g3 = GroupSpec::cyclic(3);
  const CssCode q1 = lp_ab(one_by_one(AlgElem::monomial(g3, 1)), poly(g3, "1+x"));
  CHECK(q1.n() == 6);
  CHECK(css_dimension(q1) == 0);
  CHECK(lp_ab_dim(one_by_one(AlgElem::monomial(g3, 1)), Poly2::parse("1+x")) == 0);
  const AlgElem e = poly(g3, "1+x+x^2");
  const CssCode q2 = lp_ab(one_by_one(e), e);
  CHECK(css_dimension(q2) == 4);
  CHECK(lp_ab_dim(one_by_one(e), Poly2::parse("1+x+x^2")) == 4);
  CHECK_THROWS_AS(lp_ab_dim(one_by_one(e), Poly2::parse("1+x^2")), DomainError);
  CHECK_THROWS_AS(lp_ab_dim(one_by_one(e), Poly2::parse("1+x+x^3")), DomainError);
}

TEST_CASE("lp_ab of the Tanner matrix with b = 1+x") {
  const AlgMatrix a = parse_alg_matrix(kTanner);
  const GroupSpec& g = a.group();
  const CssCode q = lp_ab(a, poly(g, "1+x"));
  CHECK(q.n() == 248);
  // A(1) is the all-ones 3x5 matrix: kernel 4, transpose kernel 2.
  CHECK(css_dimension(q) == 6);
  CHECK(rank_dimension(q) == 6);
  CHECK(lp_ab_dim(a, Poly2::parse("1+x")) == 6);
}

TEST_CASE("lp_ab_dim agrees with ranks on random instances") {
  Rng rng(46);
  for (int t = 0; t < 30; ++t) {
    const std::size_t l = 1 + 2 * rng.below(7);
    const GroupSpec g = GroupSpec::cyclic(l);
    const AlgMatrix a = random_alg(rng, g, 1 + rng.below(3), 1 + rng.below(3));
    for (const Poly2& b : factor_cyclic(l).factors) {
      const CssCode q = lp_ab(a, AlgElem::from_poly(g, b));
      CHECK(lp_ab_dim(a, b) == rank_dimension(q));
    }
  }
}

TEST_CASE("lp_dim_crt agrees with ranks") {
  Rng rng(47);
  const GroupSpec g1 = GroupSpec::cyclic(1);
  const BinMatrix a = oracle::random_matrix(rng, 2, 4), b = oracle::random_matrix(rng, 3, 2);
  CHECK(lp_dim_crt(AlgMatrix::from_binary(g1, a), AlgMatrix::from_binary(g1, b)) == css_dimension(hp(a, b)));
  const GroupSpec g3 = GroupSpec::cyclic(3);
  for (int t = 0; t < 20; ++t) {
    const AlgMatrix x = random_alg(rng, g3, 1, 2, 0.4), y = random_alg(rng, g3, 2, 1, 0.4);
    CHECK(lp_dim_crt(x, y) == rank_dimension(lp(x, y)));
  }
  // B = [b] for irreducible b reproduces lp_ab_dim
  const GroupSpec g7 = GroupSpec::cyclic(7);
  for (const Poly2& f : factor_cyclic(7).factors) {
    const AlgMatrix x = random_alg(rng, g7, 2, 3, 0.3);
    CHECK(lp_dim_crt(x, one_by_one(AlgElem::from_poly(g7, f))) == lp_ab_dim(x, f));
  }
  CHECK_THROWS_AS(lp_dim_crt(AlgMatrix::identity(GroupSpec::cyclic(4), 1), AlgMatrix::identity(GroupSpec::cyclic(4), 1)),
                  Unsupported);
}

TEST_CASE("lp_square of the Tanner matrix") {
  const AlgMatrix a = parse_alg_matrix(kTanner);
  const LpSquareReport r = lp_square_report(a);
  CHECK(r.n == 1054);
  CHECK(r.k == 140);
  CHECK(r.bound == 124);
  CHECK(r.k >= r.bound);
  const CssCode q = lp_square(a);
  CHECK(limitedness(q) == 8);
  const GroupSpec g = GroupSpec::cyclic(6);
  const CssCode unit = lp_square(AlgMatrix::identity(g, 1));
  CHECK(unit.n() == 12);
  CHECK(css_dimension(unit) == 0);
}

TEST_CASE("lp_from_field") {
  Rng rng(48);
  const BinMatrix a = oracle::random_matrix(rng, 2, 4), b = oracle::random_matrix(rng, 2, 3);
  CHECK(lp_from_field(GfMatrix::from_binary(a), GfMatrix::from_binary(b)) == hp(a, b));
  const FieldSpec f4 = FieldSpec::from_modulus(Poly2::parse("1+x+x^2"));
  GfMatrix m(1, 1, f4);
  m.set(0, 0, f4.beta());
  const CssCode q = lp_from_field(m, m);
  CHECK(css_dimension(q) == 2 * hp_dimension_gf(m, m));
  CHECK(hp_dimension_gf(m, m) == 0);
  for (int t = 0; t < 20; ++t) {
    GfMatrix x(1 + rng.below(3), 1 + rng.below(3), f4), y(1 + rng.below(3), 1 + rng.below(3), f4);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) x.set(i, j, static_cast<GfElem>(rng.below(4)));
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) y.set(i, j, static_cast<GfElem>(rng.below(4)));
    CHECK(rank_dimension(lp_from_field(x, y)) == 2 * hp_dimension_gf(x, y));
  }
}
