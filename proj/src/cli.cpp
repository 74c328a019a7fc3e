#include "qlab/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qlab/bfile.hpp"

namespace qlab::cli {

namespace {

using Row = std::vector<std::string>;

std::string markdown_table(const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());

  std::ostringstream os;
  auto emit = [&](const Row& r) {
    os << '|';
    for (std::size_t c = 0; c < r.size(); ++c) os << ' ' << std::left << std::setw(static_cast<int>(width[c])) << r[c] << " |";
    os << '\n';
  };
  emit(header);
  os << '|';
  for (auto w : width) os << std::string(w + 2, '-') << '|';
  os << '\n';
  for (const auto& r : rows) emit(r);
  return os.str();
}

std::string csv_table(const Row& header, const std::vector<Row>& rows) {
  std::ostringstream os;
  auto emit = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << r[c];
    os << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return os.str();
}

std::string mismatch_text(const Discrepancy& d) {
  std::ostringstream os;
  if (!d.stage.empty()) os << d.stage << ": ";
  if (d.z_degree) os << "z^" << *d.z_degree << ' ';
  os << "q^" << d.q_exponent << ' ' << d.lhs << " != " << d.rhs;
  return os.str();
}

std::string elapsed_ms(const CheckReport& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1)
     << std::chrono::duration<double, std::milli>(r.elapsed).count();
  return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  if (text == "markdown") return OutputFormat::markdown;
  return std::nullopt;
}

std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["order"] = r.order_checked;
      if (r.first_mismatch) {
        const auto& d = *r.first_mismatch;
        nlohmann::ordered_json m;
        m["exponent"] = d.q_exponent;
        if (d.z_degree) m["z_degree"] = *d.z_degree;
        m["lhs"] = d.lhs.str();
        m["rhs"] = d.rhs.str();
        if (!d.stage.empty()) m["stage"] = d.stage;
        j["mismatch"] = std::move(m);
      }
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }

  if (format == OutputFormat::csv) {
    std::vector<Row> rows;
    for (const auto& r : reports) {
      Row row{r.name, r.passed ? "pass" : "fail", std::to_string(r.order_checked),
              r.zdeg_checked ? std::to_string(*r.zdeg_checked) : ""};
      if (r.first_mismatch) {
        const auto& d = *r.first_mismatch;
        row.insert(row.end(), {d.stage, std::to_string(d.q_exponent),
                               d.z_degree ? std::to_string(*d.z_degree) : "", d.lhs.str(),
                               d.rhs.str()});
      } else {
        row.insert(row.end(), 5, "");
      }
      rows.push_back(std::move(row));
    }
    return csv_table({"name", "passed", "order", "zdeg", "stage", "exponent", "z_degree", "lhs",
                      "rhs"},
                     rows);
  }

  std::vector<Row> rows;
  for (const auto& r : reports) {
    rows.push_back({r.name, r.passed ? "PASS" : "FAIL", std::to_string(r.order_checked),
                    r.zdeg_checked ? std::to_string(*r.zdeg_checked) : "-", elapsed_ms(r),
                    r.first_mismatch ? mismatch_text(*r.first_mismatch) : ""});
  }
  return markdown_table({"check", "result", "order", "zdeg", "ms", "first mismatch"}, rows);
}

void print_catalog(std::ostream& out) {
  out << "Identity checks (run with: verify --checks NAME[,NAME...] | all)\n\n";
  std::size_t width = 0;
  for (const auto& info : check_catalog()) width = std::max(width, info.name.size());
  for (const auto& info : check_catalog()) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << info.name << "  "
        << info.statement << '\n';
    if (!info.depends_on.empty()) {
      out << "  " << std::string(width, ' ') << "    after:";
      for (const auto& d : info.depends_on) out << ' ' << d;
      out << '\n';
    }
  }
  out << "\nOther commands: table --max N, oeis --bfile PATH\n";
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.max_order < 2) {
    err << "error: --order must be at least 2\n";
    return kExitUsage;
  }
  if (config.qorder < 1) {
    err << "error: --qorder must be at least 1\n";
    return kExitUsage;
  }
  CheckOptions options;
  options.order = config.max_order;
  options.zdeg = config.zdeg;
  options.qorder = config.qorder;
  options.finite_m_max = config.finite_m_max;
  options.limits = config.limits;

  std::vector<CheckReport> reports;
  try {
    resolve_check_names(config.checks);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    reports = run_checks(config.checks, options, config.jobs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  out << render_reports(reports, config.format);
  const auto broken = earliest_failures(reports);
  if (broken.empty()) return kExitOk;
  err << "earliest failing checks:";
  for (const auto& b : broken) err << ' ' << b;
  err << '\n';
  return kExitMismatch;
}

int cmd_table(const RunConfig& config, std::size_t max_n, std::ostream& out, std::ostream& err) {
  if (max_n < 1) {
    err << "error: --max must be at least 1\n";
    return kExitUsage;
  }
  const QSeries<> a = genfun_a(max_n + 1);
  const std::string na = "n/a";
  std::vector<Row> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const int ni = static_cast<int>(n);
    rows.push_back({std::to_string(n), a[n].str(),
                    ni <= config.limits.all_parts ? std::to_string(a_direct(ni, config.limits)) : na,
                    ni <= config.limits.distinct_parts
                        ? std::to_string(b_direct(ni, config.limits))
                        : na});
  }
  const Row header{"n", "a_series", "a_direct", "b_direct"};
  switch (config.format) {
    case OutputFormat::csv:
      out << csv_table(header, rows);
      break;
    case OutputFormat::markdown:
      out << markdown_table(header, rows);
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        for (std::size_t c = 0; c < header.size(); ++c) {
          if (r[c] == na) j[header[c]] = nullptr;
          else j[header[c]] = r[c];
        }
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_oeis(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.bfile_path) {
    err << "error: --bfile is required\n";
    return kExitUsage;
  }
  if (config.max_order < 2) {
    err << "error: --order must be at least 2\n";
    return kExitUsage;
  }
  std::vector<BFileEntry> entries;
  try {
    entries = read_bfile(*config.bfile_path);
  } catch (const BFileError& e) {
    err << "error: " << config.bfile_path->string() << ": " << e.what() << '\n';
    return kExitUsage;
  }

  const QSeries<> a = genfun_a(config.max_order);
  struct Bad {
    std::int64_t n;
    BigInt series, file;
  };
  std::vector<Bad> bad;
  std::size_t compared = 0, skipped = 0;
  std::optional<std::int64_t> lo, hi;
  for (const auto& e : entries) {
    if (e.index < 1 || static_cast<std::size_t>(e.index) >= a.order()) {
      ++skipped;
      continue;
    }
    ++compared;
    if (!lo) lo = e.index;
    hi = e.index;
    const BigInt& s = a[static_cast<std::size_t>(e.index)];
    if (s != e.value) bad.push_back({e.index, s, e.value});
  }

  if (config.format == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["compared"] = compared;
    j["first"] = lo ? nlohmann::ordered_json(*lo) : nlohmann::ordered_json(nullptr);
    j["last"] = hi ? nlohmann::ordered_json(*hi) : nlohmann::ordered_json(nullptr);
    j["skipped"] = skipped;
    j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& b : bad)
      j["mismatches"].push_back({{"n", b.n}, {"series", b.series.str()}, {"bfile", b.file.str()}});
    out << j.dump(2) << '\n';
  } else {
    out << "compared " << compared << " entries";
    if (lo) out << " (n = " << *lo << ".." << *hi << ")";
    out << ", skipped " << skipped << " outside 1.." << a.order() - 1 << '\n';
    for (const auto& b : bad)
      out << "mismatch at n=" << b.n << ": series " << b.series << ", b-file " << b.file << '\n';
    out << (bad.empty() ? "all compared entries match\n" : "b-file disagrees with the series\n");
  }
  return bad.empty() ? kExitOk : kExitMismatch;
}

}  // namespace qlab::cli
