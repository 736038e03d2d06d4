#include "doctest.h"
#include "lpc/errors.hpp"
#include "lpc/groupring.hpp"
#include "support/oracles.hpp"

using namespace lpc;

namespace {

AlgElem random_elem(Rng& rng, const GroupSpec& g, double density = 0.4) {
  AlgElem a(g);
  for (std::size_t i = 0; i < g.order(); ++i)
    if (rng.uniform() < density) a.set(i);
  return a;
}

AlgMatrix random_alg(Rng& rng, const GroupSpec& g, std::size_t r, std::size_t c, double density = 0.3) {
  AlgMatrix m(g, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, random_elem(rng, g, density));
  return m;
}

AlgElem poly(const GroupSpec& g, const char* text) { return AlgElem::from_poly(g, Poly2::parse(text)); }

const char* kTanner =
    "group: C31\n"
    "x, x^2, x^4, x^8, x^16\n"
    "x^5, x^10, x^20, x^9, x^18\n"
    "x^25, x^19, x^7, x^14, x^28\n";

}  // namespace

TEST_CASE("ring arithmetic examples") {
  for (std::size_t l : {2u, 3u, 5u, 31u}) {
    const GroupSpec g = GroupSpec::cyclic(l);
    CHECK(AlgElem::monomial(g, 1) * AlgElem::monomial(g, l - 1) == AlgElem::one(g));
    if (l >= 3) CHECK(poly(g, "1+x") * poly(g, "1+x") == poly(g, "1+x^2"));
  }
  const GroupSpec g3 = GroupSpec::cyclic(3);
  CHECK((poly(g3, "1+x") * poly(g3, "1+x+x^2")).is_zero());
  CHECK_THROWS_AS(alg_mul(AlgElem::one(g3), AlgElem::one(GroupSpec::cyclic(5))), DimensionError);
}

TEST_CASE("antipode examples") {
  const GroupSpec g5 = GroupSpec::cyclic(5), g7 = GroupSpec::cyclic(7);
  CHECK(antipode(AlgElem::one(g5)) == AlgElem::one(g5));
  CHECK(antipode(AlgElem::monomial(g5, 1)) == AlgElem::monomial(g5, 4));
  const AlgElem a = antipode(poly(g7, "1+x"));
  CHECK(a == poly(g7, "1+x^6"));
  CHECK(a.weight() == 2);
}

TEST_CASE("block_lift examples") {
  const GroupSpec g3 = GroupSpec::cyclic(3);
  CHECK(block_lift(AlgElem::one(g3)) == BinMatrix::identity(3));
  CHECK(block_lift(AlgElem::monomial(g3, 1)) == BinMatrix::from_rows({"001", "100", "010"}));
  const AlgMatrix a = parse_alg_matrix("group: C3\n1, 0, 1+x^2\n1+x, 1+x+x^2, x^2\n");
  CHECK(block_lift(a) == BinMatrix::from_rows({
                             "100000110",
                             "010000011",
                             "001000101",
                             "101111010",
                             "110111001",
                             "011111100",
                         }));
  CHECK(weight_matrix(a) == WeightMatrix::from_rows({{1, 0, 2}, {2, 3, 1}}));
  CHECK(w_limit(a) == 6);
}

TEST_CASE("block_lift of a cyclic element is the circulant oracle") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t l = 1 + rng.below(40);
    const GroupSpec g = GroupSpec::cyclic(l);
    const AlgElem a = random_elem(rng, g);
    std::vector<std::uint8_t> coeffs(l);
    for (std::size_t i = 0; i < l; ++i) coeffs[i] = a.get(i);
    CHECK(oracle::to_dense(block_lift(a)) == oracle::circulant(coeffs));
  }
}

TEST_CASE("block_lift is multiplicative and respects conj_transpose") {
  Rng rng(22);
  const std::vector<GroupSpec> groups = {GroupSpec::cyclic(7), GroupSpec({3, 5}), GroupSpec({2, 2, 3}),
                                         GroupSpec::cyclic(1)};
  for (const GroupSpec& g : groups)
    for (int t = 0; t < 10; ++t) {
      const AlgMatrix a = random_alg(rng, g, 1 + rng.below(3), 1 + rng.below(3));
      const AlgMatrix b = random_alg(rng, g, a.cols(), 1 + rng.below(3));
      CHECK(block_lift(a * b) == block_lift(a) * block_lift(b));
      CHECK(block_lift(conj_transpose(a)) == block_lift(a).transpose());
      CHECK(f2_rank(block_lift(a)) == f2_rank(block_lift(conj_transpose(a))));
    }
}

TEST_CASE("multi-cyclic group arithmetic follows the digit oracle") {
  const GroupSpec g({3, 5});
  CHECK(g.order() == 15);
  for (std::size_t a = 0; a < 15; ++a)
    for (std::size_t b = 0; b < 15; ++b) {
      const std::size_t want = ((a / 5 + b / 5) % 3) * 5 + (a % 5 + b % 5) % 5;
      CHECK(g.mul(a, b) == want);
    }
  CHECK(g.mul(7, g.inverse(7)) == 0);
  CHECK(GroupSpec::parse("C3xC5") == g);
}

TEST_CASE("conj_transpose example") {
  const GroupSpec g5 = GroupSpec::cyclic(5);
  AlgMatrix a(g5, 1, 1);
  a.set(0, 0, AlgElem::monomial(g5, 1));
  CHECK(conj_transpose(a).at(0, 0) == AlgElem::monomial(g5, 4));
}

TEST_CASE("weight matrix and limit of the Tanner matrix") {
  const AlgMatrix a = parse_alg_matrix(kTanner);
  const WeightMatrix w = weight_matrix(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(w.at(i, j) == 1);
  CHECK(w_limit(a) == 5);
  CHECK(w_limit(AlgMatrix::identity(GroupSpec::cyclic(7), 4)) == 1);
  CHECK(weight_matrix(AlgMatrix(GroupSpec::cyclic(4), 2, 2)) == WeightMatrix(2, 2));
}

TEST_CASE("reduce_mod examples") {
  const GroupSpec g3 = GroupSpec::cyclic(3);
  CHECK(reduce_mod(poly(g3, "1+x+x^2"), Poly2::parse("1+x")) == 1u);
  CHECK(reduce_mod(poly(g3, "1+x+x^2"), Poly2::parse("1+x+x^2")) == 0u);
  CHECK(reduce_mod(AlgElem::from_poly(g3, Poly2::monomial(3)), Poly2::parse("1+x+x^2")) == 1u);
  CHECK_THROWS_AS(reduce_mod(AlgElem::one(g3), Poly2::parse("1+x+x^3")), DomainError);
  CHECK_THROWS_AS(quotient_field(GroupSpec::cyclic(7), Poly2::parse("1+x+x^2")), DomainError);
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  Rng rng(23);
  for (std::size_t l : {7u, 15u, 21u}) {
    const GroupSpec g = GroupSpec::cyclic(l);
    for (const Poly2& b : factor_cyclic(l).factors) {
      const FieldSpec f = quotient_field(g, b);
      for (int t = 0; t < 20; ++t) {
        const AlgElem x = random_elem(rng, g), y = random_elem(rng, g);
        CHECK(reduce_mod(x * y, b) == f.mul(reduce_mod(x, b), reduce_mod(y, b)));
        CHECK(reduce_mod(x + y, b) == (reduce_mod(x, b) ^ reduce_mod(y, b)));
      }
    }
  }
}

TEST_CASE("eval_matrix examples") {
  const GroupSpec g3 = GroupSpec::cyclic(3);
  AlgMatrix a(g3, 1, 1);
  a.set(0, 0, AlgElem::monomial(g3, 1));
  const GfMatrix e = eval_matrix(a, Poly2::parse("1+x"));
  CHECK(e.field().r == 1);
  CHECK(e.at(0, 0) == 1u);
  const GfMatrix t = eval_matrix(parse_alg_matrix(kTanner), Poly2::parse("1+x"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(t.at(i, j) == 1u);
  a.set(0, 0, poly(g3, "1+x+x^2"));
  CHECK(eval_matrix(a, Poly2::parse("1+x+x^2")).at(0, 0) == 0u);
}

TEST_CASE("crt_decompose examples") {
  const GroupSpec g3 = GroupSpec::cyclic(3);
  AlgMatrix a(g3, 1, 1);
  a.set(0, 0, poly(g3, "1+x"));
  const auto comps = crt_decompose(a);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].factor == Poly2::parse("1+x"));
  CHECK(comps[0].matrix.at(0, 0) == 0u);
  CHECK(comps[1].factor == Poly2::parse("1+x+x^2"));
  const FieldSpec f4 = comps[1].matrix.field();
  CHECK(comps[1].matrix.at(0, 0) == (1u ^ f4.beta()));

  const GroupSpec g1 = GroupSpec::cyclic(1);
  AlgMatrix b(g1, 1, 2);
  b.set(0, 1, AlgElem::one(g1));
  const auto c1 = crt_decompose(b);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].matrix.at(0, 0) == 0u);
  CHECK(c1[0].matrix.at(0, 1) == 1u);

  std::size_t total = 0;
  for (const auto& c : crt_decompose(AlgMatrix::identity(GroupSpec::cyclic(15), 1))) total += c.matrix.field().r;
  CHECK(total == 15);
  CHECK_THROWS_AS(crt_decompose(AlgMatrix::identity(GroupSpec::cyclic(6), 1)), Unsupported);
}

TEST_CASE("parse and format round trip") {
  const AlgMatrix a = parse_alg_matrix(kTanner);
  CHECK(a.rows() == 3);
  CHECK(a.cols() == 5);
  CHECK(a.at(1, 3) == AlgElem::monomial(GroupSpec::cyclic(31), 9));
  CHECK(parse_alg_matrix(format_alg_matrix(a)) == a);
  const AlgMatrix m = parse_alg_matrix("group: C3xC5\n# comment\nx1*x2^2 + 1, 0\n");
  CHECK(m.at(0, 0).weight() == 2);
  CHECK(m.at(0, 0).get(1 * 5 + 2));
  CHECK(parse_alg_matrix(format_alg_matrix(m)) == m);
}

TEST_CASE("parse errors name the token") {
  try {
    parse_alg_matrix("group: C5\n1, x^\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("x^") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_alg_matrix("group: C5\n1, x\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_alg_matrix("1, x\n"), ParseError);
  CHECK_THROWS_AS(parse_alg_matrix("group: C5\n1, y\n"), ParseError);
}
