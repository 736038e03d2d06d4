#include "lpc/css.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "lpc/errors.hpp"
#include "lpc/rng.hpp"

namespace lpc {

std::string to_string(Side s) { return s == Side::Z ? "Z" : "X"; }

std::string to_string(DistanceKind k) {
  switch (k) {
    case DistanceKind::Exact:
      return "exact";
    case DistanceKind::UpperBound:
      return "upper-bound";
    case DistanceKind::LowerBound:
      return "lower-bound";
  }
  return "unknown";
}

CssCode::CssCode(BinMatrix hx, BinMatrix hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
  if (hx_.cols() != hz_.cols())
    throw DimensionError("HX has " + std::to_string(hx_.cols()) + " columns but HZ has " +
                         std::to_string(hz_.cols()));
  for (std::size_t i = 0; i < hx_.rows(); ++i) {
    const auto a = hx_.row_words(i);
    for (std::size_t j = 0; j < hz_.rows(); ++j) {
      const auto b = hz_.row_words(j);
      Word acc = 0;
      for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
      if (std::popcount(acc) & 1)
        throw InvariantViolation("orthogonality violated: HX row " + std::to_string(i) + " and HZ row " +
                                 std::to_string(j) + " overlap in an odd number of positions");
    }
  }
}

CssCode classical_code(const BinMatrix& h) { return CssCode(h, BinMatrix(0, h.cols())); }

std::size_t css_dimension(const CssCode& q) { return q.n() - f2_rank(q.hx()) - f2_rank(q.hz()); }

CssCode css_swap(const CssCode& q) { return CssCode(q.hz(), q.hx()); }

unsigned resolve_jobs(unsigned jobs) {
  if (jobs) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

KernelSplit split_kernel(const CssCode& q, Side s) {
  RowEchelon stab(q.stabilizers(s));
  KernelSplit out;
  out.stabilizers = stab.basis();
  const BinMatrix ker = f2_kernel_basis(q.check(s));
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    BitVec v = ker.row(i);
    if (stab.insert(v)) out.logicals.push_back(std::move(v));
  }
  return out;
}

namespace {

// Runs body(t) for t in [0, count) on up to jobs threads.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t t; (t = next.fetch_add(1)) < count;) body(t);
    });
  for (auto& th : pool) th.join();
}

struct Candidate {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::size_t order = std::numeric_limits<std::size_t>::max();
  BitVec vec;

  bool better_than(const Candidate& o) const {
    return weight < o.weight || (weight == o.weight && order < o.order);
  }
};

}  // namespace

DistanceResult exact_distance(const CssCode& q, Side s, std::size_t budget, unsigned jobs) {
  const KernelSplit ks = split_kernel(q, s);
  const std::size_t k = ks.logicals.size();
  if (k == 0) return {std::nullopt, DistanceKind::Exact, {}};
  std::vector<BitVec> basis = ks.logicals;
  basis.insert(basis.end(), ks.stabilizers.begin(), ks.stabilizers.end());
  const std::size_t kd = basis.size();
  if (kd > budget || kd > 62)
    throw BudgetExceeded("exact " + to_string(s) + "-distance needs a kernel budget of " + std::to_string(kd) +
                             " (enumerates 2^" + std::to_string(kd) + " vectors), budget is " +
                             std::to_string(budget),
                         static_cast<double>(kd));

  const std::size_t prefix_bits = kd > 16 ? std::min<std::size_t>(6, kd) : 0;
  const std::size_t low_bits = kd - prefix_bits;
  const std::uint64_t logical_mask = (k >= 64) ? ~0ULL : ((1ULL << k) - 1);
  const std::size_t words = words_for(q.n());
  const std::size_t chunks = std::size_t{1} << prefix_bits;

  std::vector<Candidate> best(chunks);
  parallel_for(chunks, resolve_jobs(jobs), [&](std::size_t c) {
    std::vector<Word> cur(words, 0);
    for (std::size_t b = 0; b < prefix_bits; ++b)
      if ((c >> b) & 1u) {
        const auto w = basis[low_bits + b].words();
        for (std::size_t i = 0; i < words; ++i) cur[i] ^= w[i];
      }
    const std::uint64_t high = static_cast<std::uint64_t>(c) << low_bits;
    Candidate& out = best[c];
    auto consider = [&](std::uint64_t gray) {
      if (((high | gray) & logical_mask) == 0) return;
      std::size_t wt = 0;
      for (std::size_t i = 0; i < words; ++i) wt += static_cast<std::size_t>(std::popcount(cur[i]));
      if (wt < out.weight) {
        out.weight = wt;
        out.order = c;
        out.vec = BitVec(q.n());
        std::copy(cur.begin(), cur.end(), out.vec.words().begin());
      }
    };
    consider(0);
    const std::uint64_t steps = 1ULL << low_bits;
    std::uint64_t gray = 0;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      gray ^= 1ULL << bit;
      const auto w = basis[bit].words();
      for (std::size_t j = 0; j < words; ++j) cur[j] ^= w[j];
      consider(gray);
    }
  });
  Candidate winner;
  for (auto& c : best)
    if (c.better_than(winner)) winner = std::move(c);
  return {winner.weight, DistanceKind::Exact, std::move(winner.vec)};
}

DistanceResult min_weight_search(const CssCode& q, Side s, std::size_t max_weight, unsigned jobs) {
  const KernelSplit ks = split_kernel(q, s);
  if (ks.logicals.empty()) return {std::nullopt, DistanceKind::Exact, {}};
  const BinMatrix& h = q.check(s);
  const std::size_t n = q.n();
  RowEchelon stab(q.stabilizers(s));

  std::vector<BitVec> col_syn(n);
  for (std::size_t c = 0; c < n; ++c) col_syn[c] = h.column(c);
  std::vector<std::vector<std::size_t>> row_cols(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) row_cols[r] = h.row(r).support();

  std::atomic<std::size_t> global_best{max_weight};
  std::vector<Candidate> found(n);

  parallel_for(n, resolve_jobs(jobs), [&](std::size_t f) {
    Candidate& out = found[f];
    std::vector<std::size_t> chosen{f};
    std::vector<char> in_set(n, 0);
    in_set[f] = 1;
    std::vector<BitVec> syn{col_syn[f]};

    auto record = [&]() {
      BitVec v(n);
      for (std::size_t c : chosen) v.set(c);
      if (stab.contains(v)) return;
      if (chosen.size() < out.weight) {
        out.weight = chosen.size();
        out.order = f;
        out.vec = std::move(v);
        std::size_t g = global_best.load();
        while (out.weight < g && !global_best.compare_exchange_weak(g, out.weight)) {
        }
      }
    };

    auto dfs = [&](auto&& self) -> void {
      const BitVec cur = syn.back();
      if (cur.is_zero()) {
        record();
        return;
      }
      const std::size_t bound =
          std::min(global_best.load(), out.weight == std::numeric_limits<std::size_t>::max() ? max_weight
                                                                                             : out.weight - 1);
      if (chosen.size() >= bound) return;
      std::size_t row = 0;
      const auto ws = cur.words();
      for (std::size_t i = 0; i < ws.size(); ++i)
        if (ws[i]) {
          row = i * kWordBits + static_cast<std::size_t>(std::countr_zero(ws[i]));
          break;
        }
      for (std::size_t c : row_cols[row]) {
        if (c <= f || in_set[c]) continue;
        chosen.push_back(c);
        in_set[c] = 1;
        syn.push_back(cur ^ col_syn[c]);
        self(self);
        syn.pop_back();
        in_set[c] = 0;
        chosen.pop_back();
      }
    };
    if (max_weight >= 1) dfs(dfs);
  });

  Candidate winner;
  for (auto& c : found)
    if (c.better_than(winner)) winner = std::move(c);
  if (winner.weight > max_weight) return {max_weight + 1, DistanceKind::LowerBound, {}};
  return {winner.weight, DistanceKind::Exact, std::move(winner.vec)};
}

DistanceResult distance_upper(const CssCode& q, Side s, std::uint64_t seed, std::size_t trials, unsigned jobs,
                              std::size_t stop_at) {
  const KernelSplit ks = split_kernel(q, s);
  const std::size_t k = ks.logicals.size();
  if (k == 0) throw DomainError("distance_upper: the code has k = 0, so there are no non-degenerate codewords");
  const std::size_t n = q.n();
  const std::size_t rows = k + ks.stabilizers.size();
  // Row i = [basis vector | logical coefficients].
  BinMatrix gen(rows, n + k);
  for (std::size_t i = 0; i < rows; ++i) {
    const BitVec& v = i < k ? ks.logicals[i] : ks.stabilizers[i - k];
    for (std::size_t c : v.support()) gen.set(i, c);
    if (i < k) gen.set(i, n + i);
  }
  const std::size_t stride = gen.stride();
  std::vector<Word> code_mask(stride, 0), aug_mask(stride, 0);
  for (std::size_t c = 0; c < n + k; ++c) (c < n ? code_mask : aug_mask)[c / kWordBits] |= Word{1} << (c % kWordBits);

  constexpr std::size_t kBlock = 256;
  const std::size_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<Candidate> best(blocks);
  std::atomic<std::size_t> stop_block{std::numeric_limits<std::size_t>::max()};

  parallel_for(blocks, resolve_jobs(jobs), [&](std::size_t b) {
    if (b > stop_block.load()) return;
    Candidate& out = best[b];
    std::vector<std::size_t> perm(n);
    std::vector<Word> tmp(stride);
    std::vector<std::size_t> pivot_of(rows, n);
    std::vector<char> is_pivot(n, 0);
    // One random information set per block, then single pivot swaps.
    Rng rng = Rng::stream(seed, b);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm.begin(), perm.end());
    BinMatrix m = gen;
    std::size_t r = 0;
    for (std::size_t pi = 0; pi < n && r < rows; ++pi) {
      const std::size_t c = perm[pi];
      std::size_t p = r;
      while (p < rows && !m.get(p, c)) ++p;
      if (p == rows) continue;
      m.swap_rows(p, r);
      for (std::size_t i = 0; i < rows; ++i)
        if (i != r && m.get(i, c)) m.xor_row_into(r, i);
      pivot_of[r] = c;
      is_pivot[c] = 1;
      ++r;
    }
    auto consider = [&](const Word* row, std::size_t order) {
      bool logical = false;
      std::size_t wt = 0;
      for (std::size_t w = 0; w < stride; ++w) {
        logical |= (row[w] & aug_mask[w]) != 0;
        wt += static_cast<std::size_t>(std::popcount(row[w] & code_mask[w]));
      }
      if (!logical || wt >= out.weight || wt == 0) return;
      out.weight = wt;
      out.order = order;
      out.vec = BitVec(n);
      for (std::size_t w = 0; w < out.vec.words().size(); ++w) out.vec.words()[w] = row[w] & code_mask[w];
    };
    std::vector<std::size_t> hits;
    for (std::size_t t = b * kBlock; t < std::min(trials, (b + 1) * kBlock); ++t) {
      if (t != b * kBlock) {
        // Swap a random non-pivot column into the information set.
        for (int tries = 0; tries < 64; ++tries) {
          const std::size_t c = static_cast<std::size_t>(rng.below(n));
          if (is_pivot[c]) continue;
          hits.clear();
          for (std::size_t i = 0; i < rows; ++i)
            if (m.get(i, c)) hits.push_back(i);
          if (hits.empty()) continue;
          const std::size_t p = hits[static_cast<std::size_t>(rng.below(hits.size()))];
          for (std::size_t i : hits)
            if (i != p) m.xor_row_into(p, i);
          is_pivot[pivot_of[p]] = 0;
          pivot_of[p] = c;
          is_pivot[c] = 1;
          break;
        }
      }
      for (std::size_t i = 0; i < rows; ++i) consider(m.row_words(i).data(), t);
      for (std::size_t i = 0; i < rows; ++i) {
        const auto a = m.row_words(i);
        for (std::size_t j = i + 1; j < rows; ++j) {
          const auto c = m.row_words(j);
          for (std::size_t w = 0; w < stride; ++w) tmp[w] = a[w] ^ c[w];
          consider(tmp.data(), t);
        }
      }
    }
    if (out.weight <= stop_at) {
      std::size_t cur = stop_block.load();
      while (b < cur && !stop_block.compare_exchange_weak(cur, b)) {
      }
    }
  });

  Candidate winner;
  const std::size_t last = std::min(blocks, stop_block.load() == std::numeric_limits<std::size_t>::max()
                                                ? blocks
                                                : stop_block.load() + 1);
  for (std::size_t b = 0; b < last; ++b)
    if (best[b].better_than(winner)) winner = std::move(best[b]);
  if (winner.vec.size() == 0) return {std::nullopt, DistanceKind::UpperBound, {}};
  return {winner.weight, DistanceKind::UpperBound, std::move(winner.vec)};
}

std::size_t limitedness(const CssCode& q) {
  std::size_t w = 0;
  for (const BinMatrix* m : {&q.hx(), &q.hz()}) {
    for (std::size_t x : m->row_weights()) w = std::max(w, x);
    for (std::size_t x : m->col_weights()) w = std::max(w, x);
  }
  return w;
}

std::size_t max_tanner_degree(const CssCode& q) {
  std::size_t w = 0;
  const auto cx = q.hx().col_weights();
  const auto cz = q.hz().col_weights();
  for (std::size_t i = 0; i < q.n(); ++i) w = std::max(w, cx[i] + cz[i]);
  for (std::size_t x : q.hx().row_weights()) w = std::max(w, x);
  for (std::size_t x : q.hz().row_weights()) w = std::max(w, x);
  return w;
}

CodeParams code_params(const CssCode& q) {
  CodeParams p;
  p.n = q.n();
  p.k = css_dimension(q);
  p.w = limitedness(q);
  return p;
}

namespace {

std::vector<AlgElem> split_blocks(const GroupSpec& g, const BitVec& z, std::size_t offset, std::size_t count) {
  std::vector<AlgElem> out;
  const std::size_t l = g.order();
  for (std::size_t i = 0; i < count; ++i) out.push_back(AlgElem::from_coeffs(g, z.slice(offset + i * l, l)));
  return out;
}

std::vector<AlgElem> ring_apply(const AlgMatrix& a, const std::vector<AlgElem>& x) {
  std::vector<AlgElem> out(a.rows(), AlgElem(a.group()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero() && !x[j].is_zero()) out[i] += alg_mul(a.at(i, j), x[j]);
  return out;
}

}  // namespace

CodewordClass classify_codeword(const AlgMatrix& a, const BitVec& z) {
  const GroupSpec& g = a.group();
  if (!g.is_cyclic()) throw Unsupported("classify_codeword needs a cyclic group");
  const std::size_t l = g.order(), m = a.rows(), n = a.cols();
  if (z.size() != l * (n + m))
    throw DomainError("codeword length " + std::to_string(z.size()) + " differs from l(n+m) = " +
                      std::to_string(l * (n + m)));
  const auto u = split_blocks(g, z, 0, n);
  const auto v = split_blocks(g, z, l * n, m);
  const AlgElem one_plus_x = AlgElem::one(g) + AlgElem::monomial(g, 1 % l);

  const auto au = ring_apply(a, u);
  for (std::size_t i = 0; i < m; ++i)
    if (!(au[i] + alg_mul(one_plus_x, v[i])).is_zero())
      throw DomainError("not a Z-codeword: A u != (1+x) v in row block " + std::to_string(i));

  // HZ = [(1+x)^bar I_n, A*]
  const AlgMatrix hz =
      AlgMatrix::hstack(AlgMatrix::scalar(antipode(one_plus_x), n), conj_transpose(a));
  if (f2_in_row_space(block_lift(hz), z)) throw DomainError("degenerate codeword: it lies in the row space of HZ");

  BinMatrix base(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) base.set(i, j, a.at(i, j).weight() & 1u);

  CodewordClass out;
  BitVec u1(n);
  for (std::size_t j = 0; j < n; ++j) u1.set(j, u[j].weight() & 1u);
  if (!u1.is_zero()) {
    if (!(base * u1).is_zero()) throw InvariantViolation("u(1) is not a codeword of C(A(1))");
    out.which = 1;
    out.u_at_one = std::move(u1);
    return out;
  }

  out.which = 2;
  for (std::size_t j = 0; j < n; ++j) {
    // u = h + x h: h_0 = 0, h_t = h_{t-1} + u_t.
    BitVec h(l);
    bool cur = false;
    for (std::size_t t = 1; t < l; ++t) {
      cur ^= u[j].get(t);
      h.set(t, cur);
    }
    BitVec comp = h;
    for (std::size_t t = 0; t < l; ++t) comp.flip(t);
    const std::size_t wt = h.weight();
    if (2 * wt > l || (2 * wt == l && comp.lex_less(h))) h = comp;
    out.h.push_back(AlgElem::from_coeffs(g, std::move(h)));
  }
  const auto ah = ring_apply(a, out.h);
  const AlgElem ones = AlgElem::all_ones(g);
  out.v_prime = BitVec(m);
  for (std::size_t i = 0; i < m; ++i) {
    const AlgElem r = v[i] + ah[i];
    if (r == ones)
      out.v_prime.set(i);
    else if (!r.is_zero())
      throw InvariantViolation("v + A h is not a multiple of the all-one polynomial in block " + std::to_string(i));
  }
  if (f2_in_row_space(base.transpose(), out.v_prime))
    throw InvariantViolation("v' lies in the image of A(1) for a non-degenerate codeword");
  return out;
}

BinMatrix read_alist(std::istream& in) {
  std::size_t line = 0;
  std::string text;
  std::vector<std::vector<std::size_t>> lines;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ls(text);
    std::vector<std::size_t> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("expected a non-negative integer, got '" + tok + "'", line, text.find(tok) + 1);
      }
      nums.push_back(v);
    }
    lines.push_back(std::move(nums));
  }
  std::vector<std::size_t> flat;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t v : lines[i]) {
      flat.push_back(v);
      origin.push_back(i + 1);
    }
  std::size_t pos = 0;
  auto next = [&]() -> std::size_t {
    if (pos >= flat.size()) throw ParseError("unexpected end of alist data", line + 1, 1);
    return flat[pos++];
  };
  const std::size_t n = next(), m = next();
  next();
  next();
  std::vector<std::size_t> cw(n), rw(m);
  for (auto& x : cw) x = next();
  for (auto& x : rw) x = next();
  BinMatrix h(m, n);
  const std::size_t max_c = cw.empty() ? 0 : *std::max_element(cw.begin(), cw.end());
  for (std::size_t c = 0; c < n; ++c) {
    // Columns may be zero padded to the maximum column weight.
    std::size_t taken = 0;
    for (std::size_t i = 0; i < cw[c]; ++i) {
      const std::size_t at = pos;
      const std::size_t r = next();
      if (r == 0 || r > m) throw ParseError("row index " + std::to_string(r) + " out of range", origin[at], 1);
      h.set(r - 1, c);
      ++taken;
    }
    while (taken < max_c && pos < flat.size() && flat[pos] == 0) {
      ++pos;
      ++taken;
    }
  }
  // The row lists repeat the same information; check them when present.
  for (std::size_t r = 0; r < m && pos < flat.size(); ++r) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < rw[r]; ++i) {
      const std::size_t at = pos;
      const std::size_t c = next();
      if (c == 0 || c > n || !h.get(r, c - 1))
        throw ParseError("row list disagrees with column list at row " + std::to_string(r + 1), origin[at], 1);
      ++count;
    }
    const std::size_t max_r = rw.empty() ? 0 : *std::max_element(rw.begin(), rw.end());
    while (count < max_r && pos < flat.size() && flat[pos] == 0) {
      ++pos;
      ++count;
    }
  }
  const auto got = h.col_weights();
  for (std::size_t c = 0; c < n; ++c)
    if (got[c] != cw[c]) throw ParseError("column " + std::to_string(c + 1) + " lists a repeated row", 1, 1);
  return h;
}

void write_alist(std::ostream& out, const BinMatrix& m) {
  const auto cw = m.col_weights();
  const auto rw = m.row_weights();
  const std::size_t max_c = cw.empty() ? 0 : *std::max_element(cw.begin(), cw.end());
  const std::size_t max_r = rw.empty() ? 0 : *std::max_element(rw.begin(), rw.end());
  out << m.cols() << " " << m.rows() << "\n" << max_c << " " << max_r << "\n";
  auto join = [&out](const std::vector<std::size_t>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    out << "\n";
  };
  join(cw);
  join(rw);
  const BinMatrix t = m.transpose();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto s = t.row(c).support();
    for (auto& x : s) ++x;
    s.resize(max_c, 0);
    join(s);
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto s = m.row(r).support();
    for (auto& x : s) ++x;
    s.resize(max_r, 0);
    join(s);
  }
}

BinMatrix read_alist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_alist(in);
}

void write_alist_file(const std::string& path, const BinMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_alist(out, m);
}

}  // namespace lpc
