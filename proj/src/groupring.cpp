#include "lpc/groupring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "lpc/errors.hpp"

namespace lpc {

GroupSpec::GroupSpec(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) orders_ = {1};
  order_ = 1;
  for (std::size_t l : orders_) {
    if (l == 0) throw DomainError("group order must be at least 1");
    order_ *= l;
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<std::size_t> orders;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  for (;;) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'C') throw DomainError("bad group spec '" + std::string(text) + "'");
    ++pos;
    std::size_t l = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), l);
    if (ec != std::errc{} || l == 0) throw DomainError("bad group order in '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    orders.push_back(l);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != 'x') throw DomainError("bad group spec '" + std::string(text) + "'");
    ++pos;
  }
  return GroupSpec(std::move(orders));
}

std::vector<std::size_t> GroupSpec::digits(std::size_t g) const {
  std::vector<std::size_t> d(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    d[i] = g % orders_[i];
    g /= orders_[i];
  }
  return d;
}

std::size_t GroupSpec::index(const std::vector<std::size_t>& digits) const {
  std::size_t g = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) g = g * orders_[i] + digits[i] % orders_[i];
  return g;
}

std::size_t GroupSpec::mul(std::size_t g, std::size_t h) const {
  if (is_cyclic()) return (g + h) % order_;
  auto a = digits(g);
  const auto b = digits(h);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % orders_[i];
  return index(a);
}

std::size_t GroupSpec::inverse(std::size_t g) const {
  if (is_cyclic()) return (order_ - g) % order_;
  auto a = digits(g);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (orders_[i] - a[i]) % orders_[i];
  return index(a);
}

std::string GroupSpec::element_name(std::size_t g) const {
  if (g == 0) return "1";
  const auto d = digits(g);
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += is_cyclic() ? "x" : "x" + std::to_string(i + 1);
    if (d[i] > 1) s += "^" + std::to_string(d[i]);
  }
  return s;
}

std::string GroupSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "x";
    s += "C" + std::to_string(orders_[i]);
  }
  return s;
}

AlgElem AlgElem::monomial(const GroupSpec& g, std::size_t element) {
  AlgElem a(g);
  a.coeffs_.set(element % g.order());
  return a;
}

AlgElem AlgElem::all_ones(const GroupSpec& g) {
  AlgElem a(g);
  for (std::size_t i = 0; i < g.order(); ++i) a.coeffs_.set(i);
  return a;
}

AlgElem AlgElem::from_poly(const GroupSpec& g, const Poly2& p) {
  if (!g.is_cyclic()) throw Unsupported("from_poly needs a cyclic group");
  AlgElem a(g);
  for (long i = 0; i <= p.degree(); ++i)
    if (p.coeff(static_cast<std::size_t>(i))) a.coeffs_.flip(static_cast<std::size_t>(i) % g.order());
  return a;
}

AlgElem AlgElem::from_coeffs(const GroupSpec& g, BitVec coeffs) {
  if (coeffs.size() != g.order()) throw DimensionError("coefficient vector length differs from group order");
  AlgElem a(g);
  a.coeffs_ = std::move(coeffs);
  return a;
}

Poly2 AlgElem::to_poly() const {
  if (!group_.is_cyclic()) throw Unsupported("to_poly needs a cyclic group");
  return Poly2::from_bitvec(coeffs_);
}

std::string AlgElem::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t g : coeffs_.support()) {
    if (!s.empty()) s += "+";
    s += group_.element_name(g);
  }
  return s;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  if (!(group_ == o.group_)) throw DimensionError("group mismatch: " + group_.to_string() + " vs " + o.group_.to_string());
  coeffs_ ^= o.coeffs_;
  return *this;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) { return alg_mul(a, b); }

AlgElem alg_mul(const AlgElem& a, const AlgElem& b) {
  const GroupSpec& g = a.group();
  if (!(g == b.group())) throw DimensionError("group mismatch: " + g.to_string() + " vs " + b.group().to_string());
  AlgElem out(g);
  const auto sb = b.coeffs().support();
  for (std::size_t x : a.coeffs().support())
    for (std::size_t y : sb) out.set(g.mul(x, y), !out.get(g.mul(x, y)));
  return out;
}

AlgElem antipode(const AlgElem& a) {
  AlgElem out(a.group());
  for (std::size_t x : a.coeffs().support()) out.set(a.group().inverse(x));
  return out;
}

AlgMatrix::AlgMatrix(GroupSpec g, std::size_t rows, std::size_t cols)
    : group_(std::move(g)), rows_(rows), cols_(cols), entries_(rows * cols, AlgElem(group_)) {}

AlgMatrix AlgMatrix::identity(const GroupSpec& g, std::size_t n) { return scalar(AlgElem::one(g), n); }

AlgMatrix AlgMatrix::scalar(const AlgElem& a, std::size_t n) {
  AlgMatrix m(a.group(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = a;
  return m;
}

AlgMatrix AlgMatrix::from_binary(const GroupSpec& g, const BinMatrix& b) {
  AlgMatrix m(g, b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b.get(i, j)) m.at(i, j) = AlgElem::one(g);
  return m;
}

void AlgMatrix::set(std::size_t r, std::size_t c, AlgElem v) {
  if (!(v.group() == group_)) throw DimensionError("entry group differs from matrix group");
  entries_[r * cols_ + c] = std::move(v);
}

AlgMatrix AlgMatrix::transpose() const {
  AlgMatrix t(group_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

AlgMatrix AlgMatrix::operator*(const AlgMatrix& o) const {
  if (!(group_ == o.group_)) throw DimensionError("group mismatch in matrix product");
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  AlgMatrix out(group_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += alg_mul(at(i, k), o.at(k, j));
    }
  return out;
}

AlgMatrix& AlgMatrix::operator+=(const AlgMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

bool AlgMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const AlgElem& e) { return e.is_zero(); });
}

AlgMatrix AlgMatrix::kron(const AlgMatrix& a, const AlgMatrix& b) {
  if (!(a.group_ == b.group_)) throw DimensionError("group mismatch in kron");
  AlgMatrix out(a.group_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (!b.at(k, l).is_zero()) out.at(i * b.rows_ + k, j * b.cols_ + l) = alg_mul(a.at(i, j), b.at(k, l));
    }
  return out;
}

AlgMatrix AlgMatrix::hstack(const AlgMatrix& a, const AlgMatrix& b) {
  if (!(a.group_ == b.group_)) throw DimensionError("group mismatch in hstack");
  if (a.rows_ != b.rows_) throw DimensionError("hstack: row counts differ");
  AlgMatrix out(a.group_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

AlgMatrix AlgMatrix::vstack(const AlgMatrix& a, const AlgMatrix& b) {
  if (!(a.group_ == b.group_)) throw DimensionError("group mismatch in vstack");
  if (a.cols_ != b.cols_) throw DimensionError("vstack: column counts differ");
  AlgMatrix out(a.group_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i) out.at(a.rows_ + i, j) = b.at(i, j);
  }
  return out;
}

namespace {

void lift_into(BinMatrix& out, std::size_t r0, std::size_t c0, const AlgElem& a) {
  const GroupSpec& g = a.group();
  const std::size_t l = g.order();
  for (std::size_t x : a.coeffs().support())
    for (std::size_t j = 0; j < l; ++j) out.flip(r0 + g.mul(x, j), c0 + j);
}

}  // namespace

BinMatrix block_lift(const AlgElem& a) {
  BinMatrix out(a.group().order(), a.group().order());
  lift_into(out, 0, 0, a);
  return out;
}

BinMatrix block_lift(const AlgMatrix& a) {
  const std::size_t l = a.group().order();
  BinMatrix out(a.rows() * l, a.cols() * l);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) lift_into(out, i * l, j * l, a.at(i, j));
  return out;
}

AlgMatrix conj_transpose(const AlgMatrix& a) {
  AlgMatrix t(a.group(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = antipode(a.at(i, j));
  return t;
}

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  WeightMatrix w(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != w.cols) throw DimensionError("ragged weight matrix");
    for (std::size_t j = 0; j < w.cols; ++j) {
      if (rows[i][j] < 0) throw DomainError("weight matrix entries must be non-negative");
      w.at(i, j) = rows[i][j];
    }
  }
  return w;
}

WeightMatrix weight_matrix(const AlgMatrix& a) {
  WeightMatrix w(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) w.at(i, j) = static_cast<std::int64_t>(a.at(i, j).weight());
  return w;
}

std::size_t w_limit(const AlgMatrix& a) {
  const WeightMatrix w = weight_matrix(a);
  std::int64_t best = 0;
  for (std::size_t i = 0; i < w.rows; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < w.cols; ++j) s += w.at(i, j);
    best = std::max(best, s);
  }
  for (std::size_t j = 0; j < w.cols; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w.rows; ++i) s += w.at(i, j);
    best = std::max(best, s);
  }
  return static_cast<std::size_t>(best);
}

FieldSpec quotient_field(const GroupSpec& g, const Poly2& b) {
  if (!g.is_cyclic()) throw Unsupported("quotient maps are implemented for cyclic groups only");
  if (!(Poly2::x_pow_minus_one(g.order()) % b).is_zero())
    throw DomainError(b.to_string() + " does not divide x^" + std::to_string(g.order()) + " - 1");
  return FieldSpec::from_modulus(b);
}

GfElem reduce_mod(const AlgElem& a, const Poly2& b) {
  const FieldSpec f = quotient_field(a.group(), b);
  return f.reduce(a.to_poly());
}

GfMatrix eval_matrix(const AlgMatrix& a, const Poly2& b) {
  const FieldSpec f = quotient_field(a.group(), b);
  GfMatrix out(a.rows(), a.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, f.reduce(a.at(i, j).to_poly()));
  return out;
}

std::vector<CrtComponent> crt_decompose(const AlgMatrix& a) {
  if (!a.group().is_cyclic()) throw Unsupported("CRT decomposition is implemented for cyclic groups only");
  const std::size_t l = a.group().order();
  if (l % 2 == 0) throw Unsupported("CRT decomposition needs odd l, got l = " + std::to_string(l));
  std::vector<CrtComponent> out;
  for (const Poly2& f : factor_cyclic(l).factors) out.push_back({f, eval_matrix(a, f)});
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t line;
  std::size_t col0;  // 1-based column of text[0]
};

[[noreturn]] void fail(const Cursor& c, std::size_t offset, const std::string& msg) {
  throw ParseError(msg, c.line, c.col0 + offset);
}

std::size_t trim_left(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::size_t trim_right(std::string_view s, std::size_t i) {
  while (i > 0 && std::isspace(static_cast<unsigned char>(s[i - 1]))) --i;
  return i;
}

std::size_t parse_count(const Cursor& c, std::size_t& i, std::string_view token, std::size_t token_off) {
  std::size_t v = 0;
  const char* first = c.text.data() + i;
  const char* last = c.text.data() + c.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr == first) fail(c, token_off, "bad exponent in '" + std::string(token) + "'");
  i = static_cast<std::size_t>(ptr - c.text.data());
  return v;
}

// One monomial between '+' signs, at c.text[b, e).
std::size_t parse_monomial(const Cursor& c, std::size_t b, std::size_t e, const GroupSpec& g) {
  const std::string_view token = c.text.substr(b, e - b);
  if (token.empty()) fail(c, b, "empty term");
  if (token == "1") return 0;
  std::vector<std::size_t> d(g.orders().size(), 0);
  std::size_t i = b;
  for (;;) {
    if (i >= e || c.text[i] != 'x') fail(c, b, "bad monomial '" + std::string(token) + "'");
    ++i;
    std::size_t var = 1;
    if (i < e && std::isdigit(static_cast<unsigned char>(c.text[i]))) {
      var = parse_count(c, i, token, b);
    } else if (!g.is_cyclic()) {
      fail(c, b, "monomial '" + std::string(token) + "' needs a variable index for group " + g.to_string());
    }
    if (var < 1 || var > d.size()) fail(c, b, "variable index out of range in '" + std::string(token) + "'");
    std::size_t k = 1;
    if (i < e && c.text[i] == '^') {
      ++i;
      if (i >= e) fail(c, b, "missing exponent in '" + std::string(token) + "'");
      k = parse_count(c, i, token, b);
    }
    if (i > e) fail(c, b, "bad monomial '" + std::string(token) + "'");
    d[var - 1] = (d[var - 1] + k) % g.orders()[var - 1];
    if (i == e) break;
    if (c.text[i] != '*') fail(c, b, "bad monomial '" + std::string(token) + "'");
    ++i;
  }
  return g.index(d);
}

AlgElem parse_entry(const Cursor& c, std::size_t b, std::size_t e, const GroupSpec& g) {
  b = trim_left(c.text, b);
  e = trim_right(c.text, e);
  if (b >= e) fail(c, b, "empty entry");
  AlgElem a(g);
  if (c.text.substr(b, e - b) == "0") return a;
  std::size_t start = b;
  for (std::size_t i = b; i <= e; ++i) {
    if (i == e || c.text[i] == '+') {
      const std::size_t tb = trim_left(c.text, start);
      const std::size_t te = trim_right(c.text, i);
      if (tb >= te) fail(c, start, "empty term");
      const std::size_t x = parse_monomial(c, tb, te, g);
      a.set(x, !a.get(x));
      start = i + 1;
    }
  }
  return a;
}

}  // namespace

AlgMatrix parse_alg_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    lines.push_back(text.substr(pos, nl - pos));
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  std::size_t li = 0;
  auto content = [](std::string_view s) {
    const std::size_t hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
  };
  auto blank = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  };
  while (li < lines.size() && blank(content(lines[li]))) ++li;
  if (li == lines.size()) throw ParseError("missing 'group:' header", 1, 1);
  GroupSpec g;
  {
    const std::string_view h = content(lines[li]);
    const std::size_t b = trim_left(h, 0);
    if (h.substr(b, 6) != "group:") throw ParseError("expected 'group: C<l>' header", li + 1, b + 1);
    try {
      g = GroupSpec::parse(h.substr(b + 6));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), li + 1, b + 7);
    }
  }
  std::vector<std::vector<AlgElem>> rows;
  for (++li; li < lines.size(); ++li) {
    const std::string_view s = content(lines[li]);
    if (blank(s)) continue;
    const Cursor c{s, li + 1, 1};
    std::vector<AlgElem> row;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i == s.size() || s[i] == ',') {
        row.push_back(parse_entry(c, start, i, g));
        start = i + 1;
      }
    }
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows[0].size()),
                       li + 1, 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix has no rows", lines.size(), 1);
  AlgMatrix m(g, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = std::move(rows[i][j]);
  return m;
}

std::string format_alg_matrix(const AlgMatrix& a) {
  std::ostringstream os;
  os << "group: " << a.group().to_string() << "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a.at(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

}  // namespace lpc
