#include "lpc/chains.hpp"

#include <string>

#include "lpc/errors.hpp"

namespace lpc {

ChainComplex::ChainComplex(std::vector<std::size_t> cells, std::vector<BinMatrix> boundaries)
    : cells_(std::move(cells)), boundaries_(std::move(boundaries)) {
  if (cells_.size() != boundaries_.size() + 1) throw DimensionError("chain complex: need one more grade than maps");
  for (std::size_t i = 1; i <= boundaries_.size(); ++i) {
    const BinMatrix& d = boundaries_[i - 1];
    if (d.rows() != cells_[i - 1] || d.cols() != cells_[i])
      throw DimensionError("chain complex: d_" + std::to_string(i) + " has shape " + std::to_string(d.rows()) +
                           "x" + std::to_string(d.cols()) + ", expected " + std::to_string(cells_[i - 1]) + "x" +
                           std::to_string(cells_[i]));
  }
  for (std::size_t i = 1; i < boundaries_.size(); ++i)
    if (!(boundaries_[i - 1] * boundaries_[i]).is_zero())
      throw InvariantViolation("chain complex: d_" + std::to_string(i) + " d_" + std::to_string(i + 1) + " != 0");
}

ChainComplex ChainComplex::point(std::size_t cells) { return ChainComplex({cells}, {}); }

RingComplex::RingComplex(GroupSpec g, std::vector<std::size_t> cells, std::vector<AlgMatrix> boundaries)
    : group_(std::move(g)), cells_(std::move(cells)), boundaries_(std::move(boundaries)) {
  if (cells_.size() != boundaries_.size() + 1) throw DimensionError("ring complex: need one more grade than maps");
  for (std::size_t i = 1; i <= boundaries_.size(); ++i) {
    const AlgMatrix& d = boundaries_[i - 1];
    if (!(d.group() == group_)) throw DimensionError("ring complex: boundary over a different group");
    if (d.rows() != cells_[i - 1] || d.cols() != cells_[i])
      throw DimensionError("ring complex: d_" + std::to_string(i) + " has the wrong shape");
  }
  for (std::size_t i = 1; i < boundaries_.size(); ++i)
    if (!(boundaries_[i - 1] * boundaries_[i]).is_zero())
      throw InvariantViolation("ring complex: d_" + std::to_string(i) + " d_" + std::to_string(i + 1) + " != 0");
}

ChainComplex complex_from_matrix(const BinMatrix& h) { return ChainComplex({h.rows(), h.cols()}, {h}); }

RingComplex complex_from_matrix(const AlgMatrix& h) {
  return RingComplex(h.group(), {h.rows(), h.cols()}, {h});
}

namespace {

// Block layout of grade k: pairs (i, k - i) for descending i.
struct Layout {
  std::vector<std::size_t> i_of;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
};

template <class Cx>
Layout layout(const Cx& c, const Cx& d, std::size_t k) {
  Layout out;
  for (std::size_t i = std::min(k, c.length()) + 1; i-- > 0;) {
    const std::size_t j = k - i;
    if (j > d.length()) continue;
    out.i_of.push_back(i);
    out.offset.push_back(out.total);
    out.total += c.cells(i) * d.cells(j);
  }
  return out;
}

std::size_t block_offset(const Layout& l, std::size_t i) {
  for (std::size_t b = 0; b < l.i_of.size(); ++b)
    if (l.i_of[b] == i) return l.offset[b];
  throw DimensionError("tensor: missing block");
}

void place(BinMatrix& dst, std::size_t r0, std::size_t c0, const BinMatrix& src) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c : src.row(r).support()) dst.flip(r0 + r, c0 + c);
}

void place(AlgMatrix& dst, std::size_t r0, std::size_t c0, const AlgMatrix& src) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c)
      if (!src.at(r, c).is_zero()) dst.at(r0 + r, c0 + c) += src.at(r, c);
}

BinMatrix eye(const ChainComplex&, std::size_t n) { return BinMatrix::identity(n); }
AlgMatrix eye(const RingComplex& c, std::size_t n) { return AlgMatrix::identity(c.group(), n); }
BinMatrix zeros(const ChainComplex&, std::size_t r, std::size_t c) { return BinMatrix(r, c); }
AlgMatrix zeros(const RingComplex& x, std::size_t r, std::size_t c) { return AlgMatrix(x.group(), r, c); }
BinMatrix kron(const BinMatrix& a, const BinMatrix& b) { return BinMatrix::kron(a, b); }
AlgMatrix kron(const AlgMatrix& a, const AlgMatrix& b) { return AlgMatrix::kron(a, b); }

template <class Cx, class Mat>
std::pair<std::vector<std::size_t>, std::vector<Mat>> tensor_parts(const Cx& c, const Cx& d) {
  const std::size_t len = c.length() + d.length();
  std::vector<Layout> grades;
  std::vector<std::size_t> cells;
  for (std::size_t k = 0; k <= len; ++k) {
    grades.push_back(layout(c, d, k));
    cells.push_back(grades.back().total);
  }
  std::vector<Mat> maps;
  for (std::size_t k = 1; k <= len; ++k) {
    Mat m = zeros(c, cells[k - 1], cells[k]);
    const Layout& src = grades[k];
    const Layout& dst = grades[k - 1];
    for (std::size_t b = 0; b < src.i_of.size(); ++b) {
      const std::size_t i = src.i_of[b], j = k - i;
      if (i >= 1) place(m, block_offset(dst, i - 1), src.offset[b], kron(c.boundary(i), eye(d, d.cells(j))));
      if (j >= 1) place(m, block_offset(dst, i), src.offset[b], kron(eye(c, c.cells(i)), d.boundary(j)));
    }
    maps.push_back(std::move(m));
  }
  return {std::move(cells), std::move(maps)};
}

}  // namespace

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d) {
  auto [cells, maps] = tensor_parts<ChainComplex, BinMatrix>(c, d);
  return ChainComplex(std::move(cells), std::move(maps));
}

RingComplex tensor(const RingComplex& c, const RingComplex& d) {
  if (!(c.group() == d.group())) throw DimensionError("tensor: complexes over different group algebras");
  auto [cells, maps] = tensor_parts<RingComplex, AlgMatrix>(c, d);
  return RingComplex(c.group(), std::move(cells), std::move(maps));
}

ChainComplex lift(const RingComplex& c) {
  const std::size_t l = c.group().order();
  std::vector<std::size_t> cells;
  std::vector<BinMatrix> maps;
  for (std::size_t i = 0; i <= c.length(); ++i) cells.push_back(c.cells(i) * l);
  for (std::size_t i = 1; i <= c.length(); ++i) maps.push_back(block_lift(c.boundary(i)));
  return ChainComplex(std::move(cells), std::move(maps));
}

ChainComplex lifted_tensor(const RingComplex& c, const RingComplex& d) { return lift(tensor(c, d)); }

CssCode css_from_complex(const ChainComplex& c, std::size_t q) {
  if (q < 1 || q + 1 > c.length())
    throw DomainError("css_from_complex: grade " + std::to_string(q) + " outside 1.." +
                      std::to_string(c.length() >= 1 ? c.length() - 1 : 0));
  return CssCode(c.boundary(q), c.boundary(q + 1).transpose());
}

ChainComplex complex_of(const CssCode& q) {
  return ChainComplex({q.hx().rows(), q.n(), q.hz().rows()}, {q.hx(), q.hz().transpose()});
}

std::size_t homology_dim(const ChainComplex& c, std::size_t q) {
  if (q > c.length()) return 0;
  const std::size_t rk_in = q >= 1 ? f2_rank(c.boundary(q)) : 0;
  const std::size_t rk_out = q + 1 <= c.length() ? f2_rank(c.boundary(q + 1)) : 0;
  return c.cells(q) - rk_in - rk_out;
}

BalanceParams balance_params(double big_n, double big_k, double dz, double dx, double n, double k, double d) {
  if (!(big_n > 0 && big_k > 0 && dz > 0 && dx > 0 && n > 0 && k > 0 && d > 0))
    throw DomainError("balance_params: all inputs must be positive");
  BalanceParams p;
  p.n1_max = 2 * n * big_n;
  p.k1 = k * big_k;
  p.dz1_min = d * dz;
  p.dx1_min = dx;
  p.n2_max = 4 * n * n * big_n;
  p.k2 = k * k * big_k;
  p.dz2_min = d * dz;
  p.dx2_min = d * dx;
  return p;
}

BalanceExponents balance_exponents(double alpha) {
  if (!(alpha >= 0 && alpha < 1)) throw DomainError("balance_exponents: need 0 <= alpha < 1");
  BalanceExponents e;
  e.n_exponent = alpha / (2 * (1 - alpha));
  e.n2_exponent = 1 + 2 * e.n_exponent;
  return e;
}

CssCode balance_construct(const CssCode& q, const BinMatrix& hc, std::size_t grade) {
  return css_from_complex(tensor(complex_of(q), complex_from_matrix(hc)), grade);
}

}  // namespace lpc
