#pragma once

// Product constructions: hypergraph (HP), generalized bicycle (GB), lifted
// (LP) products, LP(A, b), and their closed-form dimension formulas.

#include <cstddef>
#include <cstdint>

#include "lpc/bitmatrix.hpp"
#include "lpc/css.hpp"
#include "lpc/gf2m.hpp"
#include "lpc/groupring.hpp"

namespace lpc {

/// HX = [A (x) I_mB, I_mA (x) B], HZ = [I_nA (x) B^T, A^T (x) I_nB].
CssCode hp(const BinMatrix& a, const BinMatrix& b);

struct HpParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
};
/// N = nA mB + nB mA, K = 2 kA kB - kA (nB - mB) - kB (nA - mA).
HpParams hp_params(std::int64_t na, std::int64_t ma, std::int64_t ka, std::int64_t nb, std::int64_t mb,
                   std::int64_t kb);

/// Same layout as hp over the group algebra, with B* and A* on the Z side,
/// then block lifted.
CssCode lp(const AlgMatrix& a, const AlgMatrix& b);
/// HX = [B(a), B(b)], HZ = [B(b)^T, B(a)^T].
CssCode gb(const AlgElem& a, const AlgElem& b);
/// HX = [A, b I_m], HZ = [b-bar I_n, A*].
CssCode lp_ab(const AlgMatrix& a, const AlgElem& b);
/// deg b * (dim C(A(beta)) + dim C(A^T(beta))) for an irreducible factor b
/// of x^l - 1.
std::size_t lp_ab_dim(const AlgMatrix& a, const Poly2& b);
/// Dimension of the HP code over F_q from ranks of A, B and their transposes
/// over F_q.
std::size_t hp_dimension_gf(const GfMatrix& a, const GfMatrix& b);
/// Sum over the CRT components of deg f_i * dim HP(A_i, B_i).
std::size_t lp_dim_crt(const AlgMatrix& a, const AlgMatrix& b);

/// LP(A, A*).
CssCode lp_square(const AlgMatrix& a);

struct LpSquareReport {
  std::size_t n = 0;
  std::size_t k = 0;
  /// l (n - m)^2 with n, m the shape of A (meaningful for m <= n).
  std::size_t bound = 0;
  bool full_row_rank = false;
  /// k == bound; expected whenever full_row_rank holds.
  bool equality = false;
};
LpSquareReport lp_square_report(const AlgMatrix& a);

/// Binary expansion of the non-binary HP code: M_alpha on the X side and
/// M_alpha^T on the Z side.
CssCode lp_from_field(const GfMatrix& a, const GfMatrix& b);

}  // namespace lpc
