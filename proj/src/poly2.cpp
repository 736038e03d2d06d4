#include "lpc/poly2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <functional>

#include "lpc/errors.hpp"
#include "lpc/rng.hpp"

namespace lpc {

namespace {

// dst ^= src << shift (word vectors, dst grown as needed).
void xor_shifted(std::vector<Word>& dst, const std::vector<Word>& src, std::size_t shift) {
  if (src.empty()) return;
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  const std::size_t need = src.size() + ws + 1;
  if (dst.size() < need) dst.resize(need, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + ws] ^= src[i] << bs;
    if (bs) dst[i + ws + 1] ^= src[i] >> (kWordBits - bs);
  }
}

}  // namespace

Poly2 Poly2::from_bits(std::uint64_t bits) {
  Poly2 p;
  if (bits) p.w_.push_back(bits);
  return p;
}

Poly2 Poly2::from_bitvec(const BitVec& coeffs) {
  Poly2 p;
  p.w_.assign(coeffs.words().begin(), coeffs.words().end());
  p.trim();
  return p;
}

Poly2 Poly2::monomial(std::size_t k) {
  Poly2 p;
  p.set_coeff(k, true);
  return p;
}

Poly2 Poly2::x_pow_minus_one(std::size_t l) {
  Poly2 p = monomial(l);
  p.set_coeff(0, !p.coeff(0));
  return p;
}

Poly2 Poly2::parse(std::string_view text) {
  Poly2 p;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty polynomial");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string term = s.substr(pos, end - pos);
    if (term == "0") {
    } else if (term == "1") {
      p.set_coeff(0, !p.coeff(0));
    } else if (term == "x") {
      p.set_coeff(1, !p.coeff(1));
    } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
      std::size_t k = 0;
      const char* first = term.data() + 2;
      const char* last = term.data() + term.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc{} || ptr != last) throw DomainError("bad exponent in term '" + term + "'");
      p.set_coeff(k, !p.coeff(k));
    } else {
      throw DomainError("bad polynomial term '" + term + "'");
    }
    if (end == s.size()) break;
    pos = end + 1;
  }
  return p;
}

long Poly2::degree() const noexcept {
  if (w_.empty()) return -1;
  return static_cast<long>((w_.size() - 1) * kWordBits) + 63 - std::countl_zero(w_.back());
}

void Poly2::set_coeff(std::size_t i, bool v) {
  const std::size_t wi = i / kWordBits;
  if (wi >= w_.size()) {
    if (!v) return;
    w_.resize(wi + 1, 0);
  }
  const Word mask = Word{1} << (i % kWordBits);
  w_[wi] = v ? (w_[wi] | mask) : (w_[wi] & ~mask);
  trim();
}

std::size_t Poly2::weight() const noexcept {
  std::size_t n = 0;
  for (Word x : w_) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

std::uint64_t Poly2::to_bits() const {
  if (degree() >= 64) throw DomainError("polynomial does not fit in 64 bits");
  return w_.empty() ? 0 : w_[0];
}

BitVec Poly2::to_bitvec(std::size_t n) const {
  if (degree() >= static_cast<long>(n)) throw DimensionError("polynomial degree exceeds vector length");
  BitVec v(n);
  std::copy(w_.begin(), w_.end(), v.words().begin());
  return v;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (w_.size() < o.w_.size()) w_.resize(o.w_.size(), 0);
  for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
  trim();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  const Poly2& small = a.weight() <= b.weight() ? a : b;
  const Poly2& big = &small == &a ? b : a;
  for (std::size_t wi = 0; wi < small.w_.size(); ++wi) {
    Word x = small.w_[wi];
    while (x) {
      const std::size_t k = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
      xor_shifted(out.w_, big.w_, k);
      x &= x - 1;
    }
  }
  out.trim();
  return out;
}

bool Poly2::operator<(const Poly2& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly2 q;
  Poly2 r = a;
  const long db = b.degree();
  long dr = r.degree();
  while (dr >= db) {
    const auto shift = static_cast<std::size_t>(dr - db);
    xor_shifted(r.w_, b.w_, shift);
    r.trim();
    q.set_coeff(shift, true);
    dr = r.degree();
  }
  return {q, r};
}

Poly2 Poly2::derivative() const {
  Poly2 d;
  for (long i = 1; i <= degree(); i += 2)
    if (coeff(static_cast<std::size_t>(i))) d.set_coeff(static_cast<std::size_t>(i - 1), true);
  return d;
}

Poly2 Poly2::square() const {
  // Squaring over F2 spreads coefficient i to position 2i.
  Poly2 out;
  out.w_.assign(w_.size() * 2, 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    for (unsigned half = 0; half < 2; ++half) {
      Word src = (w_[i] >> (32 * half)) & 0xffffffffULL;
      Word spread = 0;
      for (unsigned b = 0; b < 32 && src; ++b, src >>= 1)
        if (src & 1u) spread |= Word{1} << (2 * b);
      out.w_[2 * i + half] = spread;
    }
  }
  out.trim();
  return out;
}

std::string Poly2::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (long i = 0; i <= degree(); ++i) {
    if (!coeff(static_cast<std::size_t>(i))) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "x";
    else
      s += "x^" + std::to_string(i);
  }
  return s;
}

void Poly2::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Poly2 gcd(Poly2 a, Poly2 b) {
  while (!b.is_zero()) {
    Poly2 r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m) { return (a * b) % m; }

Poly2 sqrmod(const Poly2& a, const Poly2& m) { return a.square() % m; }

bool is_irreducible(const Poly2& f) {
  const long r = f.degree();
  if (r <= 0) return false;
  if (r == 1) return true;
  const Poly2 x = Poly2::monomial(1);
  Poly2 h = x % f;
  for (long i = 1; i <= r / 2; ++i) {
    h = sqrmod(h, f);
    if (!gcd(h + x, f).is_one()) return false;
  }
  return true;
}

std::vector<std::size_t> PolyFactorization::degrees() const {
  std::vector<std::size_t> out;
  for (const auto& f : factors) out.push_back(static_cast<std::size_t>(f.degree()));
  return out;
}

namespace {

// Splits g (a product of distinct irreducibles, each of degree d) into its factors.
void equal_degree_split(const Poly2& g, long d, Rng& rng, std::vector<Poly2>& out) {
  const long dg = g.degree();
  if (dg == d) {
    out.push_back(g);
    return;
  }
  for (;;) {
    // Random nonconstant a with deg a < deg g.
    Poly2 a;
    for (long i = 0; i < dg; ++i)
      if (rng.coin()) a.set_coeff(static_cast<std::size_t>(i), true);
    if (a.degree() < 1) continue;
    // Trace map T(a) = a + a^2 + ... + a^(2^(d-1)) mod g.
    Poly2 t = a;
    Poly2 p = a;
    for (long i = 1; i < d; ++i) {
      p = sqrmod(p, g);
      t += p;
    }
    Poly2 h = gcd(g, t);
    const long dh = h.degree();
    if (dh > 0 && dh < dg) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

PolyFactorization factor_cyclic(std::size_t l) {
  if (l == 0) throw DomainError("factor_cyclic: l must be at least 1");
  if (l % 2 == 0)
    throw Unsupported("factor_cyclic: even l = " + std::to_string(l) +
                      " gives x^l - 1 with repeated factors; only odd l is supported");
  PolyFactorization result;
  result.l = l;
  Rng rng(0x5eedf00dULL + l);
  const Poly2 x = Poly2::monomial(1);
  Poly2 f = Poly2::x_pow_minus_one(l);
  Poly2 h = x % f;
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    h = sqrmod(h, f);
    Poly2 g = gcd(h + x, f);
    if (!g.is_one()) {
      equal_degree_split(g, d, rng, result.factors);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) result.factors.push_back(f);
  std::sort(result.factors.begin(), result.factors.end());
  return result;
}

}  // namespace lpc
