#pragma once

// Univariate polynomials over F2 of arbitrary degree, and the factorization
// of x^l - 1 for odd l.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpc/bitmatrix.hpp"

namespace lpc {

class Poly2 {
 public:
  Poly2() = default;
  /// Low 64 coefficients given as a bit mask (bit i = coefficient of x^i).
  static Poly2 from_bits(std::uint64_t bits);
  static Poly2 from_bitvec(const BitVec& coeffs);
  static Poly2 monomial(std::size_t k);
  static Poly2 x_pow_minus_one(std::size_t l);  // x^l + 1
  /// Parses "1+x+x^3" style text (variable name x).
  static Poly2 parse(std::string_view text);

  /// -1 for the zero polynomial.
  long degree() const noexcept;
  bool is_zero() const noexcept { return w_.empty(); }
  bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }
  bool coeff(std::size_t i) const noexcept {
    return i / kWordBits < w_.size() && ((w_[i / kWordBits] >> (i % kWordBits)) & 1u);
  }
  void set_coeff(std::size_t i, bool v);
  std::size_t weight() const noexcept;
  /// Coefficients as a bit mask; requires degree < 64.
  std::uint64_t to_bits() const;
  /// Coefficient vector of length n (degree must be < n).
  BitVec to_bitvec(std::size_t n) const;

  Poly2& operator+=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  bool operator==(const Poly2& o) const = default;
  /// Total order by (degree, coefficient pattern from the top); used to sort factors.
  bool operator<(const Poly2& o) const;

  /// (quotient, remainder) of a / b; throws DomainError when b = 0.
  friend std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b);
  friend Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).second; }
  friend Poly2 operator/(const Poly2& a, const Poly2& b) { return divmod(a, b).first; }

  Poly2 derivative() const;
  Poly2 square() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Word> w_;
};

Poly2 gcd(Poly2 a, Poly2 b);
Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m);
Poly2 sqrmod(const Poly2& a, const Poly2& m);

/// Rabin-style test: f of degree r is irreducible iff
/// gcd(x^(2^i) - x mod f, f) = 1 for every 1 <= i <= r/2.
bool is_irreducible(const Poly2& f);

struct PolyFactorization {
  std::size_t l = 0;
  /// Distinct irreducible factors, sorted by (degree, pattern); 1+x first.
  std::vector<Poly2> factors;

  std::vector<std::size_t> degrees() const;
};

/// Complete factorization of x^l - 1 over F2 for odd l (square-free).
/// Distinct-degree splitting followed by Cantor-Zassenhaus equal-degree
/// splitting with the trace map; the random choices use a fixed seed, so the
/// result is reproducible. Throws Unsupported for even l.
PolyFactorization factor_cyclic(std::size_t l);

}  // namespace lpc
