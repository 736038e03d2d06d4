#pragma once

// Chain complexes over F2 and over group algebras, tensor and lifted
// products, CSS extraction and distance balancing.

#include <cstddef>
#include <vector>

#include "lpc/bitmatrix.hpp"
#include "lpc/css.hpp"
#include "lpc/groupring.hpp"

namespace lpc {

/// C_n -> ... -> C_1 -> C_0 over F2. boundary(i) is the matrix of
/// d_i : C_i -> C_{i-1}, shaped cells(i-1) x cells(i).
class ChainComplex {
 public:
  /// cells.size() == boundaries.size() + 1. Throws DimensionError on shape
  /// mismatch and InvariantViolation when some d_i d_{i+1} != 0.
  ChainComplex(std::vector<std::size_t> cells, std::vector<BinMatrix> boundaries);
  /// A single cell group in grade 0.
  static ChainComplex point(std::size_t cells = 1);

  std::size_t length() const noexcept { return boundaries_.size(); }
  std::size_t cells(std::size_t grade) const { return cells_.at(grade); }
  const std::vector<std::size_t>& cell_counts() const noexcept { return cells_; }
  /// 1 <= i <= length().
  const BinMatrix& boundary(std::size_t i) const { return boundaries_.at(i - 1); }

  bool operator==(const ChainComplex&) const = default;

 private:
  std::vector<std::size_t> cells_;
  std::vector<BinMatrix> boundaries_;
};

/// Same over F2G; cell counts are ranks of free modules.
class RingComplex {
 public:
  RingComplex(GroupSpec g, std::vector<std::size_t> cells, std::vector<AlgMatrix> boundaries);

  const GroupSpec& group() const noexcept { return group_; }
  std::size_t length() const noexcept { return boundaries_.size(); }
  std::size_t cells(std::size_t grade) const { return cells_.at(grade); }
  const AlgMatrix& boundary(std::size_t i) const { return boundaries_.at(i - 1); }

 private:
  GroupSpec group_;
  std::vector<std::size_t> cells_;
  std::vector<AlgMatrix> boundaries_;
};

/// C_1 -> C_0 with d_1 = h.
ChainComplex complex_from_matrix(const BinMatrix& h);
RingComplex complex_from_matrix(const AlgMatrix& h);

/// (C (x) D)_k = sum over i of C_i (x) D_{k-i}, blocks ordered by descending
/// i; d = d_C (x) id + id (x) d_D.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);
RingComplex tensor(const RingComplex& c, const RingComplex& d);
/// Block lift of every boundary map.
ChainComplex lift(const RingComplex& c);
ChainComplex lifted_tensor(const RingComplex& c, const RingComplex& d);

/// Qubits in grade q, HX = d_q, HZ = d_{q+1}^T. Needs 1 <= q <= length() - 1.
CssCode css_from_complex(const ChainComplex& c, std::size_t q);
/// C_2 -> C_1 -> C_0 with d_2 = HZ^T, d_1 = HX.
ChainComplex complex_of(const CssCode& q);

/// dim ker d_q - rk d_{q+1}; maps outside the complex are zero.
std::size_t homology_dim(const ChainComplex& c, std::size_t q);

struct BalanceParams {
  // One step Q (x) C.
  double n1_max = 0;
  double k1 = 0;
  double dz1_min = 0;
  double dx1_min = 0;
  // Two steps (Q (x) C)* (x) C.
  double n2_max = 0;
  double k2 = 0;
  double dz2_min = 0;
  double dx2_min = 0;
};
/// Bounds for balancing an [[N, K, dZ, dX]] code with a classical [n, k, d]
/// code. Throws DomainError unless all inputs are positive.
BalanceParams balance_params(double big_n, double big_k, double dz, double dx, double n, double k, double d);

struct BalanceExponents {
  double n_exponent = 0;   // n = Theta(N^e)
  double n2_exponent = 0;  // N'' = Theta(N^e)
};
/// For a family with dZ = Theta(N^alpha) balanced by classical codes of
/// length n = Theta(N^(alpha / (2 (1 - alpha)))). Needs 0 <= alpha < 1.
BalanceExponents balance_exponents(double alpha);

/// css_from_complex(tensor(complex_of(q), complex_from_matrix(hc)), grade).
CssCode balance_construct(const CssCode& q, const BinMatrix& hc, std::size_t grade = 1);

}  // namespace lpc
