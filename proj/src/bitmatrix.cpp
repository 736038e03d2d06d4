#include "lpc/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "lpc/errors.hpp"

namespace lpc {

namespace {

// In-place reduced row echelon form. Returns the pivot column of each of the
// leading rank rows.
std::vector<std::size_t> rref_in_place(BinMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.get(i, c)) m.xor_row_into(r, i);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- BitVec

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw DomainError("bit string may only contain '0' and '1'");
  }
  return v;
}

BitVec BitVec::unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.set(i);
  return v;
}

std::size_t BitVec::weight() const noexcept {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVec::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

bool BitVec::dot(const BitVec& other) const {
  if (other.n_ != n_) throw DimensionError("dot: length mismatch");
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

BitVec BitVec::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > n_) throw DimensionError("slice out of range");
  BitVec out(len);
  for (std::size_t i = 0; i < len; ++i)
    if (get(offset + i)) out.set(i);
  return out;
}

void BitVec::assign_slice(std::size_t offset, const BitVec& part) {
  if (offset + part.size() > n_) throw DimensionError("assign_slice out of range");
  for (std::size_t i = 0; i < part.size(); ++i) set(offset + i, part.get(i));
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
  BitVec out(a.size() + b.size());
  out.assign_slice(0, a);
  out.assign_slice(a.size(), b);
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.n_ != n_) throw DimensionError("xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.n_ != n_) throw DimensionError("and: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVec::lex_less(const BitVec& other) const {
  for (std::size_t w = 0; w < std::min(words_.size(), other.words_.size()); ++w) {
    const Word diff = words_[w] ^ other.words_[w];
    if (diff) {
      const auto bit = static_cast<unsigned>(std::countr_zero(diff));
      return ((words_[w] >> bit) & 1u) == 0;
    }
  }
  return n_ < other.n_;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

// ---------------------------------------------------------------- BinMatrix

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinMatrix BinMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: ragged rows");
    m.set_row(r, BitVec::from_string(rows[r]));
  }
  return m;
}

BinMatrix BinMatrix::from_dense(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_dense: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] & 1) m.set(r, c);
  }
  return m;
}

BinMatrix BinMatrix::from_row_vectors(const std::vector<BitVec>& rows, std::size_t cols) {
  BinMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitVec BinMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void BinMatrix::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
  auto src = v.words();
  std::copy(src.begin(), src.end(), row_words(r).begin());
}

BitVec BinMatrix::column(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

void BinMatrix::xor_row_into(std::size_t src, std::size_t dst) noexcept {
  const Word* s = data_.data() + src * stride_;
  Word* d = data_.data() + dst * stride_;
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BinMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

BinMatrix BinMatrix::transpose() const {
  BinMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word x = words[w];
      while (x) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        t.set(c, r);
        x &= x - 1;
      }
    }
  }
  return t;
}

BinMatrix BinMatrix::operator*(const BinMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimensions differ");
  BinMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    Word* dst = out.data_.data() + r * out.stride_;
    for (std::size_t w = 0; w < stride_; ++w) {
      Word x = words[w];
      while (x) {
        const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        const Word* src = rhs.data_.data() + k * rhs.stride_;
        for (std::size_t i = 0; i < out.stride_; ++i) dst[i] ^= src[i];
        x &= x - 1;
      }
    }
  }
  return out;
}

BitVec BinMatrix::operator*(const BitVec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
  BitVec out(rows_);
  auto vw = v.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    Word acc = 0;
    for (std::size_t i = 0; i < stride_; ++i) acc ^= words[i] & vw[i];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

BinMatrix& BinMatrix::operator+=(const BinMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= rhs.data_[i];
  return *this;
}

bool BinMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word x) { return x == 0; });
}

std::size_t BinMatrix::count_ones() const noexcept {
  std::size_t n = 0;
  for (Word x : data_) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

std::vector<std::size_t> BinMatrix::row_weights() const {
  std::vector<std::size_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (Word x : row_words(r)) out[r] += static_cast<std::size_t>(std::popcount(x));
  return out;
}

std::vector<std::size_t> BinMatrix::col_weights() const {
  std::vector<std::size_t> out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word x = words[w];
      while (x) {
        ++out[w * kWordBits + static_cast<std::size_t>(std::countr_zero(x))];
        x &= x - 1;
      }
    }
  }
  return out;
}

BinMatrix BinMatrix::select_columns(std::span<const std::size_t> cols) const {
  BinMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(r, cols[j])) out.set(r, j);
  return out;
}

BinMatrix BinMatrix::select_rows(std::span<const std::size_t> rows) const {
  BinMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = row_words(rows[i]);
    std::copy(src.begin(), src.end(), out.row_words(i).begin());
  }
  return out;
}

BinMatrix BinMatrix::hstack(const BinMatrix& a, const BinMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  BinMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto aw = a.row_words(r);
    std::copy(aw.begin(), aw.end(), out.row_words(r).begin());
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(r, a.cols() + c);
  }
  return out;
}

BinMatrix BinMatrix::vstack(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  BinMatrix out(a.rows() + b.rows(), a.cols());
  std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return out;
}

BinMatrix BinMatrix::kron(const BinMatrix& a, const BinMatrix& b) {
  BinMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b.get(k, l)) out.set(i * b.rows() + k, j * b.cols() + l);
    }
  return out;
}

std::string BinMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

// ---------------------------------------------------------------- RowEchelon

RowEchelon::RowEchelon(const BinMatrix& m) : cols_(m.cols()) {
  BinMatrix work = m;
  const auto piv = rref_in_place(work);
  rows_.reserve(piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i) rows_.push_back(work.row(i));
  pivots_ = piv;
}

void RowEchelon::reduce(BitVec& v) const {
  if (v.size() != cols_) throw DimensionError("RowEchelon::reduce: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
}

bool RowEchelon::contains(BitVec v) const {
  reduce(v);
  return v.is_zero();
}

bool RowEchelon::insert(BitVec v) {
  reduce(v);
  if (v.is_zero()) return false;
  const std::size_t p = v.support().front();
  for (auto& row : rows_)
    if (row.get(p)) row ^= v;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

// ---------------------------------------------------------------- free functions

std::size_t f2_rank(const BinMatrix& m) {
  BinMatrix work = m;
  return rref_in_place(work).size();
}

BinMatrix f2_kernel_basis(const BinMatrix& m) {
  BinMatrix work = m;
  const auto piv = rref_in_place(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  BinMatrix basis(m.cols() - piv.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(out, f);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (work.get(i, f)) basis.set(out, piv[i]);
    ++out;
  }
  return basis;
}

bool f2_in_row_space(const BinMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw DimensionError("f2_in_row_space: vector length differs from column count");
  return RowEchelon(m).contains(v);
}

}  // namespace lpc
