#pragma once

// File formats and JSON helpers for the command-line tool.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "lpc/bitmatrix.hpp"
#include "lpc/css.hpp"
#include "lpc/expander.hpp"
#include "lpc/gf2m.hpp"
#include "lpc/groupring.hpp"

namespace lpc::cli {

using nlohmann::ordered_json;

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Rows of 0/1, separated by whitespace or commas (or not at all). Blank
/// lines and lines starting with '#' are skipped.
BinMatrix parse_binary_matrix(const std::string& text);
/// .alist files go through read_alist, anything else through
/// parse_binary_matrix.
BinMatrix load_binary_matrix(const std::filesystem::path& path);

/// Rows of non-negative integers separated by whitespace or commas.
WeightMatrix parse_weight_matrix(const std::string& text);

/// "field: <modulus>" then rows of comma-separated polynomials in beta
/// (written with x), reduced modulo the field polynomial.
GfMatrix parse_field_matrix(const std::string& text);

/// An operand in a descriptor is inline text when it contains a newline,
/// otherwise a path relative to base.
std::string resolve_operand(const std::string& operand, const std::filesystem::path& base);

/// <prefix>.hx.alist and <prefix>.hz.alist.
CssCode load_code(const std::string& prefix);
void save_code(const std::string& prefix, const CssCode& q);

ordered_json report_header(const std::string& command, std::uint64_t seed);
ordered_json distance_json(const DistanceResult& d);
ordered_json code_json(const CssCode& q);
ordered_json spectral_json(const SpectralReport& s);
ordered_json cert_json(const ExpansionCert& c);
ordered_json pipeline_json(const PipelineReport& r);

}  // namespace lpc::cli
