#pragma once

// Group algebras F2G of finite abelian groups G = C_l1 x ... x C_lk, matrices
// over them, block lifts to binary matrices, and the quotient maps
// F2[x]/(x^l - 1) -> F2[x]/(b) for irreducible factors b.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lpc/bitmatrix.hpp"
#include "lpc/gf2m.hpp"
#include "lpc/poly2.hpp"

namespace lpc {

/// Group elements are numbered lexicographically over their multi-indices
/// (d_1, ..., d_k), the first coordinate most significant. A cyclic group C_l
/// has element x^d numbered d.
class GroupSpec {
 public:
  GroupSpec() : orders_{1} {}
  explicit GroupSpec(std::vector<std::size_t> orders);
  static GroupSpec cyclic(std::size_t l) { return GroupSpec({l}); }
  /// "C31" or "C3xC5".
  static GroupSpec parse(std::string_view text);

  const std::vector<std::size_t>& orders() const noexcept { return orders_; }
  std::size_t order() const noexcept { return order_; }
  bool is_cyclic() const noexcept { return orders_.size() == 1; }

  std::vector<std::size_t> digits(std::size_t g) const;
  std::size_t index(const std::vector<std::size_t>& digits) const;
  std::size_t mul(std::size_t g, std::size_t h) const;
  std::size_t inverse(std::size_t g) const;
  /// "x^3" for cyclic groups, "x1^2*x2" otherwise; "1" for the identity.
  std::string element_name(std::size_t g) const;
  std::string to_string() const;

  bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }

 private:
  std::vector<std::size_t> orders_;
  std::size_t order_ = 1;
};

class AlgElem {
 public:
  AlgElem() : coeffs_(1) {}
  explicit AlgElem(GroupSpec g) : group_(std::move(g)), coeffs_(group_.order()) {}

  static AlgElem zero(const GroupSpec& g) { return AlgElem(g); }
  static AlgElem one(const GroupSpec& g) { return monomial(g, 0); }
  static AlgElem monomial(const GroupSpec& g, std::size_t element);
  /// Sum of all group elements (1 + x + ... + x^(l-1) in R_l).
  static AlgElem all_ones(const GroupSpec& g);
  /// Image of p in R_l = F2[x]/(x^l - 1); group must be cyclic.
  static AlgElem from_poly(const GroupSpec& g, const Poly2& p);
  static AlgElem from_coeffs(const GroupSpec& g, BitVec coeffs);

  const GroupSpec& group() const noexcept { return group_; }
  const BitVec& coeffs() const noexcept { return coeffs_; }
  bool get(std::size_t g) const { return coeffs_.get(g); }
  void set(std::size_t g, bool v = true) { coeffs_.set(g, v); }
  std::size_t weight() const noexcept { return coeffs_.weight(); }
  bool is_zero() const noexcept { return coeffs_.is_zero(); }
  /// Representative of degree < l; group must be cyclic.
  Poly2 to_poly() const;
  std::string to_string() const;

  AlgElem& operator+=(const AlgElem& o);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  bool operator==(const AlgElem& o) const = default;

 private:
  GroupSpec group_;
  BitVec coeffs_;
};

/// Group-algebra product; throws DimensionError on group mismatch.
AlgElem alg_mul(const AlgElem& a, const AlgElem& b);
/// sum a_g g -> sum a_g g^{-1}.
AlgElem antipode(const AlgElem& a);

class AlgMatrix {
 public:
  AlgMatrix() = default;
  AlgMatrix(GroupSpec g, std::size_t rows, std::size_t cols);

  static AlgMatrix identity(const GroupSpec& g, std::size_t n);
  static AlgMatrix scalar(const AlgElem& a, std::size_t n);
  /// Binary matrix viewed over F2G (entries 0 or 1).
  static AlgMatrix from_binary(const GroupSpec& g, const BinMatrix& m);

  const GroupSpec& group() const noexcept { return group_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const AlgElem& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  AlgElem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, AlgElem v);

  AlgMatrix transpose() const;
  AlgMatrix operator*(const AlgMatrix& o) const;
  AlgMatrix& operator+=(const AlgMatrix& o);
  friend AlgMatrix operator+(AlgMatrix a, const AlgMatrix& b) { return a += b; }
  bool operator==(const AlgMatrix& o) const = default;
  bool is_zero() const;

  static AlgMatrix kron(const AlgMatrix& a, const AlgMatrix& b);
  static AlgMatrix hstack(const AlgMatrix& a, const AlgMatrix& b);
  static AlgMatrix vstack(const AlgMatrix& a, const AlgMatrix& b);

 private:
  GroupSpec group_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgElem> entries_;
};

/// l x l matrix with B(a)_{ij} = 1 iff g_i = g g_j for some g in supp(a).
BinMatrix block_lift(const AlgElem& a);
BinMatrix block_lift(const AlgMatrix& a);
/// A* = (antipode(a_ji)).
AlgMatrix conj_transpose(const AlgMatrix& a);

struct WeightMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  WeightMatrix() = default;
  WeightMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static WeightMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  bool operator==(const WeightMatrix&) const = default;
};

WeightMatrix weight_matrix(const AlgMatrix& a);
/// Largest row or column sum of the weight matrix.
std::size_t w_limit(const AlgMatrix& a);

/// Field F2[x]/(b); throws DomainError unless b is irreducible and divides x^l - 1.
FieldSpec quotient_field(const GroupSpec& g, const Poly2& b);
/// phi_b(a) = a mod b.
GfElem reduce_mod(const AlgElem& a, const Poly2& b);
GfMatrix eval_matrix(const AlgMatrix& a, const Poly2& b);

struct CrtComponent {
  Poly2 factor;
  GfMatrix matrix;
};
/// One component per irreducible factor of x^l - 1 (odd l, cyclic group only).
std::vector<CrtComponent> crt_decompose(const AlgMatrix& a);

/// Text format:
///   group: C31
///   x, x^2, 0
///   1+x^3, x^5, 1
/// Multi-cyclic monomials are written x1^a*x2^b. Throws ParseError.
AlgMatrix parse_alg_matrix(std::string_view text);
std::string format_alg_matrix(const AlgMatrix& a);

}  // namespace lpc
