#include <set>

#include "doctest.h"
#include "lpc/bitmatrix.hpp"
#include "lpc/errors.hpp"
#include "lpc/gf2m.hpp"
#include "lpc/groupring.hpp"
#include "lpc/poly2.hpp"
#include "lpc/rng.hpp"
#include "support/oracles.hpp"

using namespace lpc;

TEST_CASE("bitvec basics") {
  BitVec v = BitVec::from_string("10110");
  CHECK(v.size() == 5);
  CHECK(v.weight() == 3);
  CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});
  CHECK(v.to_string() == "10110");
  CHECK(v.dot(BitVec::from_string("10100")) == false);
  CHECK(v.dot(BitVec::from_string("10000")) == true);
  BitVec big(130);
  big.set(129);
  big.set(64);
  CHECK(big.weight() == 2);
  CHECK(big.slice(64, 66).support() == std::vector<std::size_t>{0, 65});
  CHECK_THROWS(BitVec::from_string("10a"));
}

TEST_CASE("rank examples") {
  CHECK(f2_rank(BinMatrix::identity(3)) == 3);
  const BinMatrix circ = BinMatrix::from_rows({"110", "011", "101"});
  CHECK(f2_rank(circ) == 2);
  CHECK(f2_rank(BinMatrix(4, 7)) == 0);
}

TEST_CASE("rank and kernel agree with the dense oracle") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng.below(12), c = 1 + rng.below(140);
    const BinMatrix m = oracle::random_matrix(rng, r, c, 0.2 + 0.6 * rng.uniform());
    const std::size_t rk = f2_rank(m);
    REQUIRE(rk == oracle::rank(m));
    const BinMatrix k = f2_kernel_basis(m);
    CHECK(k.rows() == c - rk);
    CHECK(oracle::rank(k) == k.rows());
    CHECK((m * k.transpose()).is_zero());
    CHECK(f2_rank(m.transpose()) == rk);
  }
}

TEST_CASE("kernel examples") {
  const BinMatrix k = f2_kernel_basis(BinMatrix::from_rows({"11"}));
  REQUIRE(k.rows() == 1);
  CHECK(k.row(0).to_string() == "11");
  CHECK(f2_kernel_basis(BinMatrix::from_rows({"110", "011", "001"})).rows() == 0);
}

TEST_CASE("row space membership") {
  const BinMatrix m = BinMatrix::from_rows({"110", "011"});
  CHECK(f2_in_row_space(m, BitVec(3)));
  CHECK_FALSE(f2_in_row_space(BinMatrix::from_rows({"110"}), BitVec::from_string("001")));
  CHECK(f2_in_row_space(m, BitVec::from_string("101")));
  CHECK_THROWS_AS(f2_in_row_space(m, BitVec(4)), DimensionError);
}

TEST_CASE("matrix product, kron and stacking match the oracle") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const BinMatrix a = oracle::random_matrix(rng, 1 + rng.below(5), 1 + rng.below(70));
    const BinMatrix b = oracle::random_matrix(rng, a.cols(), 1 + rng.below(70));
    CHECK(oracle::to_dense(a * b) == oracle::product(oracle::to_dense(a), oracle::to_dense(b)));
  }
  const BinMatrix a = BinMatrix::from_rows({"10", "11"});
  const BinMatrix b = BinMatrix::from_rows({"011"});
  const BinMatrix k = BinMatrix::kron(a, b);
  CHECK(k == BinMatrix::from_rows({"011000", "011011"}));
  CHECK(BinMatrix::hstack(a, a).cols() == 4);
  CHECK(BinMatrix::vstack(a, a).rows() == 4);
  CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("rng streams are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  Rng s1 = Rng::stream(7, 3), s2 = Rng::stream(7, 3), s3 = Rng::stream(7, 4);
  CHECK(s1() == s2());
  CHECK(s1() != s3());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("poly2 arithmetic") {
  const Poly2 p = Poly2::parse("1+x+x^3");
  CHECK(p.degree() == 3);
  CHECK(p.to_bits() == 0b1011);
  CHECK(p.to_string() == "1+x+x^3");
  CHECK(Poly2::parse("x^2+x^2").is_zero());
  CHECK((Poly2::parse("1+x") * Poly2::parse("1+x")) == Poly2::parse("1+x^2"));
  const auto [q, r] = divmod(Poly2::x_pow_minus_one(7), p);
  CHECK(r.is_zero());
  CHECK(q * p == Poly2::x_pow_minus_one(7));
  CHECK(gcd(Poly2::parse("1+x^2"), Poly2::parse("1+x^3")) == Poly2::parse("1+x"));
  CHECK_THROWS_AS(divmod(p, Poly2()), DomainError);
  CHECK_THROWS(Poly2::parse("x^"));
}

TEST_CASE("poly2 products match schoolbook multiplication") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint8_t> a(1 + rng.below(150)), b(1 + rng.below(150));
    for (auto& v : a) v = rng.coin();
    for (auto& v : b) v = rng.coin();
    BitVec av(a.size()), bv(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) av.set(i, a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) bv.set(i, b[i]);
    const Poly2 p = Poly2::from_bitvec(av) * Poly2::from_bitvec(bv);
    const auto ref = oracle::poly_mul(a, b);
    REQUIRE(p.degree() == static_cast<long>(ref.size()) - 1);
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(p.coeff(i) == (ref[i] != 0));
  }
}

TEST_CASE("irreducibility agrees with trial division") {
  for (std::uint64_t f = 2; f < (1u << 12); ++f) CHECK(is_irreducible(Poly2::from_bits(f)) == oracle::irreducible(f));
}

TEST_CASE("factor_cyclic examples") {
  auto names = [](const PolyFactorization& f) {
    std::vector<std::string> s;
    for (const auto& p : f.factors) s.push_back(p.to_string());
    return s;
  };
  CHECK(names(factor_cyclic(1)) == std::vector<std::string>{"1+x"});
  CHECK(names(factor_cyclic(3)) == std::vector<std::string>{"1+x", "1+x+x^2"});
  const auto f7 = factor_cyclic(7);
  CHECK(f7.degrees() == std::vector<std::size_t>{1, 3, 3});
  const auto n7 = names(f7);
  CHECK(std::set<std::string>(n7.begin(), n7.end()) ==
        std::set<std::string>{"1+x", "1+x+x^3", "1+x^2+x^3"});
  CHECK_THROWS_AS(factor_cyclic(4), Unsupported);
}

TEST_CASE("factor_cyclic multiplies back to x^l - 1 with irreducible distinct factors") {
  for (std::size_t l = 1; l <= 63; l += 2) {
    const auto f = factor_cyclic(l);
    Poly2 prod = Poly2::from_bits(1);
    std::size_t deg = 0;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      const Poly2& p = f.factors[i];
      if (p.degree() < 40) CHECK(oracle::irreducible(p.to_bits()));
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(f.factors[j] == p);
      prod = prod * p;
      deg += static_cast<std::size_t>(p.degree());
    }
    CHECK(prod == Poly2::x_pow_minus_one(l));
    CHECK(deg == l);
  }
}

TEST_CASE("gf(2^r) arithmetic") {
  const FieldSpec f4 = FieldSpec::from_modulus(Poly2::parse("1+x+x^2"));
  CHECK(f4.r == 2);
  const GfElem b = f4.beta();
  CHECK(f4.mul(b, b) == (b ^ 1u));  // beta^2 = beta + 1
  for (GfElem a = 1; a < f4.order(); ++a) CHECK(f4.mul(a, f4.inv(a)) == 1u);
  CHECK_THROWS_AS(FieldSpec::from_modulus(Poly2::parse("1+x^2")), DomainError);
  CHECK_THROWS_AS(f4.inv(0), DomainError);
  const FieldSpec f16 = FieldSpec::from_modulus(Poly2::parse("1+x+x^4"));
  for (GfElem a = 1; a < 16; ++a)
    for (GfElem c = 1; c < 16; ++c) CHECK(f16.mul(f16.mul(a, c), f16.inv(c)) == a);
}

TEST_CASE("gf_rank examples") {
  const FieldSpec f4 = FieldSpec::from_modulus(Poly2::parse("1+x+x^2"));
  CHECK(gf_rank(GfMatrix(1, 1, f4)) == 0);
  GfMatrix m(1, 1, f4);
  m.set(0, 0, f4.beta());
  CHECK(gf_rank(m) == 1);
  const AlgMatrix tanner = parse_alg_matrix(
      "group: C31\nx, x^2, x^4, x^8, x^16\nx^5, x^10, x^20, x^9, x^18\nx^25, x^19, x^7, x^14, x^28\n");
  CHECK(gf_rank(eval_matrix(tanner, Poly2::parse("1+x"))) == 1);
}

TEST_CASE("gf_rank matches the binary rank of the expansion") {
  // rank over F_{2^r} times r equals the binary rank of the M_alpha expansion.
  Rng rng(9);
  const FieldSpec f8 = FieldSpec::from_modulus(Poly2::parse("1+x+x^3"));
  for (int t = 0; t < 50; ++t) {
    GfMatrix m(1 + rng.below(4), 1 + rng.below(5), f8);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (rng.coin()) m.set(i, j, static_cast<GfElem>(rng.below(8)));
    CHECK(gf_rank(m) * 3 == oracle::rank(m.expand()));
  }
}

TEST_CASE("companion matrix represents multiplication") {
  const FieldSpec f8 = FieldSpec::from_modulus(Poly2::parse("1+x+x^3"));
  for (GfElem a = 0; a < 8; ++a) {
    const BinMatrix m = companion_matrix(f8, a);
    for (GfElem v = 0; v < 8; ++v) {
      BitVec bv(3);
      for (unsigned i = 0; i < 3; ++i) bv.set(i, (v >> i) & 1u);
      const BitVec out = m * bv;
      GfElem o = 0;
      for (unsigned i = 0; i < 3; ++i) o |= static_cast<GfElem>(out.get(i)) << i;
      CHECK(o == f8.mul(a, v));
    }
  }
}
