#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcount/count.hpp"
#include "pcount/oracle.hpp"
#include "pcount/ptable.hpp"
#include "pcount/restricted.hpp"
#include "pcount/verify.hpp"

namespace pcount::cli {

enum class OutputFormat { plain, csv, json };

namespace detail {

inline OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + name);
}

// One row of results; counts render as decimal strings in every format so
// consumers never lose precision to numeric parsing.
struct TableRow {
  std::int64_t n = 0;
  Count p;
  Count pm;
  Count qm;
  Count comp;
};

inline void emit_single(std::ostream& out, OutputFormat format, std::int64_t n, const Count& count) {
  switch (format) {
    case OutputFormat::plain:
      out << count << '\n';
      break;
    case OutputFormat::csv:
      out << "n,count\n" << n << ',' << count << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json row{{"n", n}, {"count", count.str()}};
      nlohmann::ordered_json doc{{"results", nlohmann::ordered_json::array({row})}};
      out << doc.dump() << '\n';
      break;
    }
  }
}

inline void emit_table(std::ostream& out, OutputFormat format, const std::vector<TableRow>& rows) {
  switch (format) {
    case OutputFormat::plain:
      for (const TableRow& r : rows)
        out << r.n << ' ' << r.p << ' ' << r.pm << ' ' << r.qm << ' ' << r.comp << '\n';
      break;
    case OutputFormat::csv:
      out << "n,p,p_m,q_m,complement\n";
      for (const TableRow& r : rows)
        out << r.n << ',' << r.p << ',' << r.pm << ',' << r.qm << ',' << r.comp << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json results = nlohmann::ordered_json::array();
      for (const TableRow& r : rows) {
        results.push_back({{"n", r.n},
                           {"p", r.p.str()},
                           {"p_m", r.pm.str()},
                           {"q_m", r.qm.str()},
                           {"complement", r.comp.str()}});
      }
      out << nlohmann::ordered_json{{"results", results}}.dump() << '\n';
      break;
    }
  }
}

inline PTable load_cache(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) return PTable{};  // absent cache: start fresh, silently
  try {
    return PTable::deserialize(in);
  } catch (const std::exception& e) {
    err << "pcount: warning: ignoring corrupt cache " << path << " (" << e.what()
        << "); rebuilding\n";
    return PTable{};
  }
}

// Write-temp-then-rename keeps concurrent invocations from tearing the file;
// last writer wins.
inline void store_cache(const PTable& table, const std::string& path) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    table.serialize(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace detail

// Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition counts restricted by divisibility or multiplicity,\n"
               "via the generalized pentagonal-number recurrence.",
               "pcount"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  std::string cache_path;
  bool stats = false;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    sub->add_option("--cache", cache_path, "Path of the persistent p(n) table");
    sub->add_flag("--stats", stats, "Report extensions, pentagonal terms and wall time on stderr");
  };

  std::int64_t arg_n = 0;
  std::int64_t arg_m = 1;
  bool want_complement = false;
  std::int64_t verify_max_n = 30;
  std::int64_t verify_max_m = 5;
  std::int64_t verify_dp_max_n = 500;

  // Integer-typed ranges; the stock numeric validators quote double bounds,
  // which reads poorly for count arguments.
  const CLI::Range nonnegative{std::int64_t{0}, std::numeric_limits<std::int64_t>::max(),
                               "NONNEGATIVE"};
  const CLI::Range positive{std::int64_t{1}, std::numeric_limits<std::int64_t>::max(), "POSITIVE"};

  CLI::App* cmd_p = app.add_subcommand("p", "Print p(n), the number of partitions of n");
  cmd_p->add_option("n", arg_n, "Nonnegative integer")->required()->check(nonnegative);
  add_common(cmd_p);

  CLI::App* cmd_pm = app.add_subcommand(
      "pm", "Print P_m(n), the number of partitions of n with no part divisible by m");
  cmd_pm->add_option("m", arg_m, "Modulus, >= 1")->required()->check(positive);
  cmd_pm->add_option("n", arg_n, "Nonnegative integer")->required()->check(nonnegative);
  cmd_pm->add_flag("--complement", want_complement,
                   "Print the count of partitions with at least one part divisible by m");
  add_common(cmd_pm);

  CLI::App* cmd_qm = app.add_subcommand(
      "qm", "Print Q_m(n), the number of partitions of n with every part appearing < m times");
  cmd_qm->add_option("m", arg_m, "Multiplicity bound, >= 1")->required()->check(positive);
  cmd_qm->add_option("n", arg_n, "Nonnegative integer")->required()->check(nonnegative);
  add_common(cmd_qm);

  CLI::App* cmd_table = app.add_subcommand("table", "Emit rows (n, p, p_m, q_m, complement)");
  cmd_table->add_option("--m", arg_m, "Modulus, >= 1")->required()->check(positive);
  cmd_table->add_option("--max-n", arg_n, "Last row index")->required()->check(nonnegative);
  add_common(cmd_table);

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the oracle cross-check suites");
  cmd_verify->add_option("--max-n", verify_max_n, "Enumeration bound (<= 60)")
      ->check(nonnegative);
  cmd_verify->add_option("--max-m", verify_max_m, "Largest modulus checked")
      ->check(positive);
  cmd_verify->add_option("--dp-max-n", verify_dp_max_n, "Bound for the DP-backed suites")
      ->check(nonnegative);
  add_common(cmd_verify);

  {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("pcount");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
  }

  const OutputFormat format = detail::parse_format(format_name);
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t formula_terms = 0;
  int exit_code = 0;

  try {
    PTable table = cache_path.empty() ? PTable{} : detail::load_cache(cache_path, err);

    if (*cmd_p) {
      detail::emit_single(out, format, arg_n, table.p(arg_n));
    } else if (*cmd_pm) {
      const Count value = want_complement ? complement(table, arg_m, arg_n)
                                          : p_m(table, arg_m, arg_n);
      formula_terms += p_m_term_count(arg_m, arg_n);
      detail::emit_single(out, format, arg_n, value);
    } else if (*cmd_qm) {
      const Count value = q_m(table, arg_m, arg_n);
      formula_terms += p_m_term_count(arg_m, arg_n);
      detail::emit_single(out, format, arg_n, value);
    } else if (*cmd_table) {
      table.extend(arg_n);
      std::vector<detail::TableRow> rows;
      rows.reserve(static_cast<std::size_t>(arg_n) + 1);
      for (std::int64_t n = 0; n <= arg_n; ++n) {
        detail::TableRow row;
        row.n = n;
        row.p = table.p(n);
        row.pm = p_m(table, arg_m, n);
        row.qm = q_m(table, arg_m, n);
        row.comp = row.p - row.pm;
        formula_terms += 2 * p_m_term_count(arg_m, n);
        rows.push_back(std::move(row));
      }
      detail::emit_table(out, format, rows);
    } else if (*cmd_verify) {
      if (verify_max_n > oracle::kMaxEnumerationN) {
        err << "pcount: verify --max-n must be <= " << oracle::kMaxEnumerationN
            << " (exhaustive-enumeration limit)\n";
        return 2;
      }
      const auto results = verify::run_all(table, verify_max_n, verify_max_m, verify_dp_max_n);
      bool all_passed = true;
      for (const auto& suite : results) {
        if (suite.passed) {
          out << "suite " << suite.name << ": PASS (" << suite.checks << " checks)\n";
        } else {
          out << "suite " << suite.name << ": FAIL (" << suite.counterexample << ")\n";
          all_passed = false;
        }
      }
      out << (all_passed ? "verify: all suites passed\n" : "verify: FAILED\n");
      if (!all_passed) exit_code = 1;
    }

    if (!cache_path.empty() && table.extensions() > 0 && exit_code == 0)
      detail::store_cache(table, cache_path);

    if (stats) {
      const auto elapsed = std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start);
      err << "stats: extensions=" << table.extensions()
          << " pentagonal_terms=" << table.recurrence_terms() + formula_terms
          << " wall_ms=" << elapsed.count() << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "pcount: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "pcount: " << e.what() << '\n';
    return 1;
  }

  return exit_code;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace pcount::cli
