#include "cli_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lpc/errors.hpp"
#include "lpc/poly2.hpp"

#ifndef LPCODES_VERSION
#define LPCODES_VERSION "0.0.0"
#endif

namespace lpc::cli {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool skippable(const std::string& line) {
  const auto p = line.find_first_not_of(" \t");
  return p == std::string::npos || line[p] == '#';
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

ordered_json weight_or_infinity(const std::optional<std::size_t>& w) {
  return w ? ordered_json(*w) : ordered_json("infinity");
}

ordered_json number_or_infinity(double v) { return std::isinf(v) ? ordered_json("infinity") : ordered_json(v); }

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

BinMatrix parse_binary_matrix(const std::string& text) {
  std::vector<std::string> rows;
  std::size_t line_no = 0, first_line = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    if (skippable(line)) continue;
    std::string bits;
    for (std::size_t c = 0; c < line.size(); ++c) {
      const char ch = line[c];
      if (ch == '0' || ch == '1') {
        bits += ch;
      } else if (ch != ' ' && ch != '\t' && ch != ',') {
        throw ParseError(std::string("unexpected character '") + ch + "' in binary matrix", line_no, c + 1);
      }
    }
    if (!rows.empty() && bits.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(bits.size()) + " entries, expected " +
                           std::to_string(rows.front().size()) + " (as on line " + std::to_string(first_line) + ")",
                       line_no, 1);
    if (rows.empty()) first_line = line_no;
    rows.push_back(bits);
  }
  if (rows.empty()) throw ParseError("empty binary matrix", line_no ? line_no : 1, 1);
  return BinMatrix::from_rows(rows);
}

BinMatrix load_binary_matrix(const std::filesystem::path& path) {
  if (path.extension() == ".alist") return read_alist_file(path.string());
  return parse_binary_matrix(read_text(path));
}

WeightMatrix parse_weight_matrix(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    if (skippable(line)) continue;
    std::vector<std::int64_t> row;
    std::size_t c = 0;
    while (c < line.size()) {
      if (line[c] == ' ' || line[c] == '\t' || line[c] == ',') {
        ++c;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(line[c])))
        throw ParseError(std::string("expected a non-negative integer, found '") + line[c] + "'", line_no, c + 1);
      std::size_t e = c;
      while (e < line.size() && std::isdigit(static_cast<unsigned char>(line[e]))) ++e;
      row.push_back(std::stoll(line.substr(c, e - c)));
      c = e;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("ragged weight matrix", line_no, 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty weight matrix", 1, 1);
  return WeightMatrix::from_rows(rows);
}

GfMatrix parse_field_matrix(const std::string& text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && skippable(lines[i])) ++i;
  const std::string header = "field:";
  if (i == lines.size() || trim(lines[i]).rfind(header, 0) != 0)
    throw ParseError("expected 'field: <modulus>'", i + 1, 1);
  FieldSpec field;
  try {
    field = FieldSpec::from_modulus(Poly2::parse(trim(trim(lines[i]).substr(header.size()))));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad field modulus: ") + e.what(), i + 1, header.size() + 1);
  }
  std::vector<std::vector<GfElem>> rows;
  for (++i; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    std::vector<GfElem> row;
    std::stringstream ss(lines[i]);
    std::string entry;
    std::size_t col = 1;
    while (std::getline(ss, entry, ',')) {
      try {
        row.push_back(field.reduce(Poly2::parse(trim(entry))));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), i + 1, col);
      }
      col += entry.size() + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged field matrix", i + 1, 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("field matrix has no rows", lines.size() + 1, 1);
  GfMatrix m(rows.size(), rows.front().size(), field);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  return m;
}

std::string resolve_operand(const std::string& operand, const std::filesystem::path& base) {
  if (operand.find('\n') != std::string::npos) return operand;
  const std::filesystem::path p(operand);
  return read_text(p.is_absolute() ? p : base / p);
}

CssCode load_code(const std::string& prefix) {
  return CssCode(read_alist_file(prefix + ".hx.alist"), read_alist_file(prefix + ".hz.alist"));
}

void save_code(const std::string& prefix, const CssCode& q) {
  write_alist_file(prefix + ".hx.alist", q.hx());
  write_alist_file(prefix + ".hz.alist", q.hz());
}

ordered_json report_header(const std::string& command, std::uint64_t seed) {
  return ordered_json{{"schema", 1}, {"version", LPCODES_VERSION}, {"command", command}, {"seed", seed}};
}

ordered_json distance_json(const DistanceResult& d) {
  ordered_json j{{"value", weight_or_infinity(d.weight)}, {"kind", to_string(d.kind)}};
  if (d.weight && d.witness.size() > 0) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < d.witness.size(); ++i)
      if (d.witness.get(i)) support.push_back(i);
    j["witness_support"] = support;
  }
  return j;
}

ordered_json code_json(const CssCode& q) {
  const CodeParams p = code_params(q);
  return ordered_json{{"n", p.n},
                      {"k", p.k},
                      {"limitedness", p.w},
                      {"max_tanner_degree", max_tanner_degree(q)},
                      {"hx_rows", q.hx().rows()},
                      {"hz_rows", q.hz().rows()}};
}

ordered_json spectral_json(const SpectralReport& s) {
  return ordered_json{{"lambda", s.lambda}, {"tolerance", s.tolerance}, {"eigenvalues", s.eigenvalues}};
}

ordered_json cert_json(const ExpansionCert& c) {
  ordered_json j{{"holds", c.holds()},
                 {"alpha", c.alpha},
                 {"beta", c.beta},
                 {"verified_up_to", c.verified_up_to},
                 {"checked", c.checked},
                 {"min_ratio", number_or_infinity(c.min_ratio)}};
  if (c.counterexample) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < c.counterexample->size(); ++i)
      if (c.counterexample->get(i)) support.push_back(i);
    j["counterexample_support"] = support;
  }
  return j;
}

ordered_json pipeline_json(const PipelineReport& r) {
  ordered_json j{{"l", r.l},
                 {"n", r.n},
                 {"w", r.w},
                 {"r", r.r},
                 {"delta", r.delta},
                 {"local_code", {{"h0", r.local.h0.to_string()}, {"d", r.local.d}, {"d_dual", r.local.d_dual}}},
                 {"base_vertices", r.base.vertex_count()},
                 {"lambda_base", r.lambda_base},
                 {"lambda_lift", r.lambda_lift},
                 {"shifts", r.lift.shifts},
                 {"a", format_alg_matrix(r.a)},
                 {"code", {{"n", r.code_n}, {"k_rank", r.k_rank}, {"k_formula", r.k_formula}, {"limitedness", r.limitedness}}},
                 {"expansion_premises", r.expansion_premises},
                 {"alpha", r.alpha},
                 {"beta", r.beta},
                 {"gamma", r.gamma},
                 {"gamma_l", r.gamma_l},
                 {"cert_note", r.cert_note},
                 {"dz", distance_json(r.dz)},
                 {"dx", distance_json(r.dx)}};
  if (r.cert_a) j["cert_a"] = cert_json(*r.cert_a);
  if (r.cert_at) j["cert_at"] = cert_json(*r.cert_at);
  if (r.dx_witness) j["dx_witness"] = {{"weight", r.dx_witness->weight()}, {"index", r.dx_witness_index}};
  return j;
}

}  // namespace lpc::cli
