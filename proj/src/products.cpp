#include "lpc/products.hpp"

#include "lpc/errors.hpp"

namespace lpc {

CssCode hp(const BinMatrix& a, const BinMatrix& b) {
  const std::size_t ma = a.rows(), na = a.cols(), mb = b.rows(), nb = b.cols();
  BinMatrix hx = BinMatrix::hstack(BinMatrix::kron(a, BinMatrix::identity(mb)),
                                   BinMatrix::kron(BinMatrix::identity(ma), b));
  BinMatrix hz = BinMatrix::hstack(BinMatrix::kron(BinMatrix::identity(na), b.transpose()),
                                   BinMatrix::kron(a.transpose(), BinMatrix::identity(nb)));
  return CssCode(std::move(hx), std::move(hz));
}

HpParams hp_params(std::int64_t na, std::int64_t ma, std::int64_t ka, std::int64_t nb, std::int64_t mb,
                   std::int64_t kb) {
  if (ka < 0 || ka > na || kb < 0 || kb > nb || ma < 0 || mb < 0)
    throw DomainError("hp_params: need 0 <= k <= n and m >= 0 for both factors");
  return {na * mb + nb * ma, 2 * ka * kb - ka * (nb - mb) - kb * (na - ma)};
}

CssCode lp(const AlgMatrix& a, const AlgMatrix& b) {
  if (!(a.group() == b.group()))
    throw DimensionError("lp: group mismatch " + a.group().to_string() + " vs " + b.group().to_string());
  const GroupSpec& g = a.group();
  const std::size_t ma = a.rows(), na = a.cols(), mb = b.rows(), nb = b.cols();
  const AlgMatrix hx = AlgMatrix::hstack(AlgMatrix::kron(a, AlgMatrix::identity(g, mb)),
                                         AlgMatrix::kron(AlgMatrix::identity(g, ma), b));
  const AlgMatrix hz = AlgMatrix::hstack(AlgMatrix::kron(AlgMatrix::identity(g, na), conj_transpose(b)),
                                         AlgMatrix::kron(conj_transpose(a), AlgMatrix::identity(g, nb)));
  return CssCode(block_lift(hx), block_lift(hz));
}

CssCode gb(const AlgElem& a, const AlgElem& b) {
  if (!(a.group() == b.group())) throw DimensionError("gb: group mismatch");
  const BinMatrix ba = block_lift(a), bb = block_lift(b);
  return CssCode(BinMatrix::hstack(ba, bb), BinMatrix::hstack(bb.transpose(), ba.transpose()));
}

CssCode lp_ab(const AlgMatrix& a, const AlgElem& b) {
  if (!(a.group() == b.group())) throw DimensionError("lp_ab: group mismatch");
  const AlgMatrix hx = AlgMatrix::hstack(a, AlgMatrix::scalar(b, a.rows()));
  const AlgMatrix hz = AlgMatrix::hstack(AlgMatrix::scalar(antipode(b), a.cols()), conj_transpose(a));
  return CssCode(block_lift(hx), block_lift(hz));
}

std::size_t lp_ab_dim(const AlgMatrix& a, const Poly2& b) {
  const GfMatrix ab = eval_matrix(a, b);
  const std::size_t rk = gf_rank(ab);
  return static_cast<std::size_t>(b.degree()) * ((a.cols() - rk) + (a.rows() - rk));
}

std::size_t hp_dimension_gf(const GfMatrix& a, const GfMatrix& b) {
  if (!(a.field() == b.field())) throw DimensionError("hp_dimension_gf: field mismatch");
  const std::size_t ra = gf_rank(a), rb = gf_rank(b);
  const std::size_t ka = a.cols() - ra, kat = a.rows() - ra;
  const std::size_t kb = b.cols() - rb, kbt = b.rows() - rb;
  return ka * kbt + kat * kb;
}

std::size_t lp_dim_crt(const AlgMatrix& a, const AlgMatrix& b) {
  if (!(a.group() == b.group())) throw DimensionError("lp_dim_crt: group mismatch");
  const auto ca = crt_decompose(a);
  const auto cb = crt_decompose(b);
  std::size_t k = 0;
  for (std::size_t i = 0; i < ca.size(); ++i)
    k += static_cast<std::size_t>(ca[i].factor.degree()) * hp_dimension_gf(ca[i].matrix, cb[i].matrix);
  return k;
}

CssCode lp_square(const AlgMatrix& a) { return lp(a, conj_transpose(a)); }

LpSquareReport lp_square_report(const AlgMatrix& a) {
  const CssCode q = lp_square(a);
  LpSquareReport r;
  r.n = q.n();
  r.k = css_dimension(q);
  const std::size_t l = a.group().order();
  const std::size_t diff = a.cols() > a.rows() ? a.cols() - a.rows() : a.rows() - a.cols();
  r.bound = l * diff * diff;
  r.full_row_rank = f2_rank(block_lift(a)) == l * a.rows();
  r.equality = r.k == r.bound;
  return r;
}

CssCode lp_from_field(const GfMatrix& a, const GfMatrix& b) {
  if (!(a.field() == b.field())) throw DimensionError("lp_from_field: field mismatch");
  const FieldSpec f = a.field();
  const std::size_t ma = a.rows(), na = a.cols(), mb = b.rows(), nb = b.cols();
  const GfMatrix hx = GfMatrix::hstack(GfMatrix::kron(a, GfMatrix::identity(mb, f)),
                                       GfMatrix::kron(GfMatrix::identity(ma, f), b));
  const GfMatrix hz = GfMatrix::hstack(GfMatrix::kron(GfMatrix::identity(na, f), b.transpose()),
                                       GfMatrix::kron(a.transpose(), GfMatrix::identity(nb, f)));
  return CssCode(hx.expand(false), hz.expand(true));
}

}  // namespace lpc
