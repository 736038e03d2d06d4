#pragma once

// Dense bit-packed vectors and matrices over F2.
//
// Rows are stored as contiguous runs of 64-bit words (bit j of a row lives in
// word j / 64 at position j % 64). Padding bits past the last column are
// always zero; every mutating operation preserves that.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_(words_for(n), 0) {}

  /// Parses a string of '0'/'1' characters (other characters are rejected).
  static BitVec from_string(std::string_view bits);
  static BitVec unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool v = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) noexcept {
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
  }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Inner product over F2.
  bool dot(const BitVec& other) const;
  std::vector<std::size_t> support() const;

  BitVec slice(std::size_t offset, std::size_t len) const;
  void assign_slice(std::size_t offset, const BitVec& part);
  static BitVec concat(const BitVec& a, const BitVec& b);

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  bool operator==(const BitVec& other) const = default;
  /// Lexicographic comparison by bit index 0, 1, 2, ... (0 < 1).
  bool lex_less(const BitVec& other) const;

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BinMatrix identity(std::size_t n);
  /// Each string is one row of '0'/'1' characters.
  static BinMatrix from_rows(const std::vector<std::string>& rows);
  static BinMatrix from_dense(const std::vector<std::vector<int>>& rows);
  static BinMatrix from_row_vectors(const std::vector<BitVec>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) noexcept {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row_words(std::size_t r) noexcept {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<const Word> row_words(std::size_t r) const noexcept {
    return {data_.data() + r * stride_, stride_};
  }
  BitVec row(std::size_t r) const;
  void set_row(std::size_t r, const BitVec& v);
  BitVec column(std::size_t c) const;
  void xor_row_into(std::size_t src, std::size_t dst) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;

  BinMatrix transpose() const;
  BinMatrix operator*(const BinMatrix& rhs) const;
  BitVec operator*(const BitVec& v) const;
  BinMatrix& operator+=(const BinMatrix& rhs);
  friend BinMatrix operator+(BinMatrix a, const BinMatrix& b) { return a += b; }
  bool operator==(const BinMatrix& other) const = default;

  bool is_zero() const noexcept;
  std::size_t count_ones() const noexcept;
  std::vector<std::size_t> row_weights() const;
  std::vector<std::size_t> col_weights() const;
  BinMatrix select_columns(std::span<const std::size_t> cols) const;
  BinMatrix select_rows(std::span<const std::size_t> rows) const;

  static BinMatrix hstack(const BinMatrix& a, const BinMatrix& b);
  static BinMatrix vstack(const BinMatrix& a, const BinMatrix& b);
  /// Kronecker product; entry ((i, k), (j, l)) sits at row i*rows(b)+k,
  /// column j*cols(b)+l.
  static BinMatrix kron(const BinMatrix& a, const BinMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Incrementally built reduced basis of a row space. Each stored row has a
/// pivot column that is zero in every other stored row.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}
  explicit RowEchelon(const BinMatrix& m);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Reduces v in place against the basis; v ends up zero iff it was in the span.
  void reduce(BitVec& v) const;
  bool contains(BitVec v) const;
  /// Adds v to the basis if independent. Returns true when rank grew.
  bool insert(BitVec v);
  const std::vector<BitVec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t f2_rank(const BinMatrix& m);
/// Rows form a basis of {v : m v = 0}.
BinMatrix f2_kernel_basis(const BinMatrix& m);
/// Throws DimensionError when v.size() != m.cols().
bool f2_in_row_space(const BinMatrix& m, const BitVec& v);

}  // namespace lpc
