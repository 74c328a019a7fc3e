#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/identities.hpp"

namespace qlab::cli {

// Exit codes are a contract for CI use and are never conflated.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { csv, json, markdown };

std::optional<OutputFormat> parse_format(std::string_view text);

struct RunConfig {
  std::size_t max_order = 200;
  std::size_t zdeg = 16;
  std::size_t qorder = 32;
  std::size_t finite_m_max = 30;
  EnumerationLimits limits;
  std::vector<std::string> checks{"all"};
  OutputFormat format = OutputFormat::markdown;
  std::optional<std::filesystem::path> bfile_path;
  unsigned jobs = 1;
};

// Renders one row per report. json is an array of
// {name, passed, order, mismatch?}; csv is unquoted.
std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat format);

// Check names, what each verifies, and what it depends on.
void print_catalog(std::ostream& out);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Rows n = 1..max_n with a from the series and both enumeration oracles;
// oracle cells beyond the caps are printed as n/a.
int cmd_table(const RunConfig& config, std::size_t max_n, std::ostream& out, std::ostream& err);

// Compares the series coefficients of the gap-free generating function with a
// local b-file. Index 0 is skipped: the series starts at q^1.
int cmd_oeis(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qlab::cli
