#pragma once

// Extension fields F_{2^r}, r <= 16, and dense matrices over them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lpc/bitmatrix.hpp"
#include "lpc/poly2.hpp"

namespace lpc {

using GfElem = std::uint32_t;

/// F_{2^r} = F2[x]/(modulus). Elements are residues stored as r-bit masks in
/// the polynomial basis {1, beta, ..., beta^(r-1)}.
struct FieldSpec {
  unsigned r = 1;
  std::uint32_t modulus = 0b11;  // 1 + x

  /// Throws DomainError when the modulus is reducible or deg > 16.
  static FieldSpec from_modulus(const Poly2& modulus);
  static FieldSpec binary() { return {}; }

  Poly2 modulus_poly() const { return Poly2::from_bits(modulus); }
  std::uint32_t order() const { return std::uint32_t{1} << r; }
  GfElem reduce(const Poly2& p) const;
  GfElem mul(GfElem a, GfElem b) const;
  /// Throws DomainError for a = 0.
  GfElem inv(GfElem a) const;
  /// The generator beta (class of x); 1 in F2.
  GfElem beta() const { return reduce(Poly2::monomial(1)); }
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;
};

class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  static GfMatrix from_binary(const BinMatrix& m);
  static GfMatrix identity(std::size_t n, FieldSpec field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  GfElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Throws DomainError when v is not reduced.
  void set(std::size_t r, std::size_t c, GfElem v);

  GfMatrix transpose() const;
  static GfMatrix kron(const GfMatrix& a, const GfMatrix& b);
  static GfMatrix hstack(const GfMatrix& a, const GfMatrix& b);
  /// Replaces every entry alpha by the r x r binary matrix M_alpha (or its
  /// transpose).
  BinMatrix expand(bool transposed_blocks = false) const;

  bool operator==(const GfMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<GfElem> data_;
};

std::size_t gf_rank(const GfMatrix& m);

/// Matrix of x -> alpha x in the polynomial basis; column j holds alpha * beta^j.
BinMatrix companion_matrix(const FieldSpec& field, GfElem alpha);

}  // namespace lpc
