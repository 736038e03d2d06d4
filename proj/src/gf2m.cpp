#include "lpc/gf2m.hpp"

#include <utility>

#include "lpc/errors.hpp"

namespace lpc {

FieldSpec FieldSpec::from_modulus(const Poly2& modulus) {
  const long r = modulus.degree();
  if (r < 1 || r > 16) throw DomainError("field modulus must have degree 1..16, got " + modulus.to_string());
  if (!is_irreducible(modulus)) throw DomainError("field modulus " + modulus.to_string() + " is reducible");
  FieldSpec f;
  f.r = static_cast<unsigned>(r);
  f.modulus = static_cast<std::uint32_t>(modulus.to_bits());
  return f;
}

GfElem FieldSpec::reduce(const Poly2& p) const {
  return static_cast<GfElem>((p % modulus_poly()).to_bits());
}

GfElem FieldSpec::mul(GfElem a, GfElem b) const {
  GfElem out = 0;
  const GfElem top = GfElem{1} << r;
  while (b) {
    if (b & 1u) out ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return out;
}

GfElem FieldSpec::inv(GfElem a) const {
  if (a == 0) throw DomainError("inverse of zero field element");
  // Extended Euclid on (modulus, a), tracking the coefficient of a.
  Poly2 r0 = modulus_poly(), r1 = Poly2::from_bits(a);
  Poly2 t0, t1 = Poly2::from_bits(1);
  while (!r1.is_zero()) {
    auto [q, rem] = divmod(r0, r1);
    Poly2 t2 = t0 + q * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return reduce(t0);
}

std::string FieldSpec::to_string() const {
  return "GF(2^" + std::to_string(r) + ") mod " + modulus_poly().to_string();
}

GfMatrix GfMatrix::from_binary(const BinMatrix& m) {
  GfMatrix g(m.rows(), m.cols(), FieldSpec::binary());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g.data_[i * g.cols_ + j] = m.get(i, j);
  return g;
}

GfMatrix GfMatrix::identity(std::size_t n, FieldSpec field) {
  GfMatrix g(n, n, field);
  for (std::size_t i = 0; i < n; ++i) g.data_[i * n + i] = 1;
  return g;
}

void GfMatrix::set(std::size_t r, std::size_t c, GfElem v) {
  if (v >= field_.order()) throw DomainError("field element not reduced");
  data_[r * cols_ + c] = v;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
  return t;
}

GfMatrix GfMatrix::kron(const GfMatrix& a, const GfMatrix& b) {
  if (!(a.field_ == b.field_)) throw DimensionError("kron: field mismatch");
  GfMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const GfElem x = a.at(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          out.data_[(i * b.rows_ + k) * out.cols_ + j * b.cols_ + l] = a.field_.mul(x, b.at(k, l));
    }
  return out;
}

GfMatrix GfMatrix::hstack(const GfMatrix& a, const GfMatrix& b) {
  if (!(a.field_ == b.field_)) throw DimensionError("hstack: field mismatch");
  if (a.rows_ != b.rows_) throw DimensionError("hstack: row counts differ");
  GfMatrix out(a.rows_, a.cols_ + b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.data_[i * out.cols_ + j] = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * out.cols_ + a.cols_ + j] = b.at(i, j);
  }
  return out;
}

BinMatrix GfMatrix::expand(bool transposed_blocks) const {
  const std::size_t r = field_.r;
  BinMatrix out(rows_ * r, cols_ * r);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const GfElem x = at(i, j);
      if (!x) continue;
      const BinMatrix m = companion_matrix(field_, x);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          if (transposed_blocks ? m.get(b, a) : m.get(a, b)) out.set(i * r + a, j * r + b);
    }
  return out;
}

std::size_t gf_rank(const GfMatrix& m) {
  const FieldSpec& f = m.field();
  std::vector<std::vector<GfElem>> a(m.rows(), std::vector<GfElem>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    const GfElem inv = f.inv(a[rank][c]);
    for (auto& x : a[rank]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const GfElem factor = a[i][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] ^= f.mul(factor, a[rank][j]);
    }
    ++rank;
  }
  return rank;
}

BinMatrix companion_matrix(const FieldSpec& field, GfElem alpha) {
  BinMatrix m(field.r, field.r);
  GfElem basis = 1;
  for (unsigned j = 0; j < field.r; ++j) {
    const GfElem col = field.mul(alpha, basis);
    for (unsigned i = 0; i < field.r; ++i)
      if ((col >> i) & 1u) m.set(i, j);
    basis = field.mul(basis, field.beta());
  }
  return m;
}

}  // namespace lpc
