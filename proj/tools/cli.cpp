#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "symcover/class_algebra.hpp"
#include "symcover/covering.hpp"
#include "symcover/error.hpp"
#include "symcover/format.hpp"
#include "symcover/generic_table.hpp"
#include "symcover/kronecker_support.hpp"
#include "symcover/parallel.hpp"
#include "symcover/verification.hpp"
#include "symcover/workspace.hpp"

namespace symcover::cli {

namespace {

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

unsigned parse_unsigned(std::string_view s, const std::string& what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("bad " + what + " '" + std::string(s) + "'");
  }
  return v;
}

/// "7" or "5..10", inclusive.
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned n = parse_unsigned(text, "n");
    return {n, n};
  }
  Range r{parse_unsigned(std::string_view(text).substr(0, dots), "range start"),
          parse_unsigned(std::string_view(text).substr(dots + 2), "range end")};
  if (r.lo > r.hi) throw InvalidArgument("empty range '" + text + "'");
  return r;
}

std::filesystem::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "symcover";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "symcover";
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering numbers and constituents of powers of symmetric-group characters", "symcover"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  bool no_cache = false;
  std::string format_name = "text";
  std::string threads_text = "1";
  bool extended = false;
  unsigned max_n = 20;
  GenericTolerances tolerances;
  app.add_option("--cache-dir", cache_dir, "Character-table cache directory")->envname("SYMCOVER_CACHE_DIR");
  app.add_flag("--no-cache", no_cache, "Do not read or write the table cache");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", threads_text, "Worker threads, or 'auto'");
  app.add_flag("--extended", extended, "Allow verification beyond n = 10");
  app.add_option("--max-n", max_n, "Largest n for which tables are built")->check(CLI::Range(1u, 40u));
  app.add_option("--orthogonality-tol", tolerances.orthogonality, "Generic-table orthogonality tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--integrality-tol", tolerances.integrality, "Generic-table integrality tolerance")
      ->check(CLI::PositiveNumber);

  unsigned n = 0;
  std::string lambda_text, mu_text;
  unsigned k = 1;
  bool support_only = false;

  auto* table_cmd = app.add_subcommand("table", "Emit the character table of S_n");
  table_cmd->add_option("--n", n, "n")->required();

  auto* kron_cmd = app.add_subcommand("kron", "Decompose chi_lambda * chi_mu");
  kron_cmd->add_option("--n", n, "n")->required();
  kron_cmd->add_option("--lambda", lambda_text, "First partition, e.g. 6,2,2")->required();
  kron_cmd->add_option("--mu", mu_text, "Second partition")->required();
  kron_cmd->add_flag("--support-only", support_only, "Emit only the set of constituents");

  std::uint64_t power_k = 1;
  auto* power_cmd = app.add_subcommand("power", "Decompose chi_lambda^k");
  power_cmd->add_option("--n", n, "n")->required();
  power_cmd->add_option("--lambda", lambda_text, "Partition")->required();
  power_cmd->add_option("--k", power_k, "Exponent")->required()->check(CLI::PositiveNumber);
  power_cmd->add_flag("--support-only", support_only, "Emit only the set of constituents");

  auto* cover_cmd = app.add_subcommand("cover", "Covering numbers e and d");
  cover_cmd->add_option("--n", n, "n")->required();
  cover_cmd->add_option("--lambda", lambda_text, "Restrict to one irreducible");

  std::string target, range_text;
  std::optional<unsigned> theta_u, theta_v;
  unsigned samples = 200, max_size = 9;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("target", target, "What to verify")
      ->required()
      ->check(CLI::IsMember({"theorem1", "table1", "non-rectangle", "rectangle", "theta-move", "semigroup", "brauer"}));
  verify_cmd->add_option("--n", range_text, "n or an inclusive range a..b");
  verify_cmd->add_option("--u", theta_u, "theta-move: fixed u");
  verify_cmd->add_option("--v", theta_v, "theta-move: fixed v");
  verify_cmd->add_option("--samples", samples, "semigroup: number of random instances");
  verify_cmd->add_option("--max-size", max_size, "semigroup: bound on |lambda|+|alpha|");
  verify_cmd->add_option("--seed", seed, "semigroup: RNG seed");

  std::string table_file;
  std::optional<unsigned> dihedral_m;
  auto* generic_cmd = app.add_subcommand("generic", "Covering numbers from a character table file");
  auto* file_opt = generic_cmd->add_option("file", table_file, "JSON character table");
  generic_cmd->add_option("--dihedral", dihedral_m, "Use the dihedral group of order 2m (m odd)")->excludes(file_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Format format = parse_format(format_name);
    unsigned threads = 1;
    if (threads_text == "auto") {
      threads = 0;
    } else {
      threads = parse_unsigned(threads_text, "thread count");
      if (threads == 0) throw InvalidArgument("--threads must be positive or 'auto'");
    }

    TableCache cache;
    if (!no_cache) {
      const std::filesystem::path dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
      if (!dir.empty()) cache = TableCache(dir, [&err](const std::string& msg) { err << "warning: " << msg << '\n'; });
    }
    Workspace ws(cache, TableOptions{max_n, threads});

    auto require_n = [&](unsigned lo) {
      if (n < lo || n > max_n) {
        throw InvalidArgument("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(max_n) + "]");
      }
    };
    auto partition_of_n = [&](const std::string& text) {
      const Partition p = Partition::parse(text);
      if (p.size() != n) throw InvalidArgument("(" + text + ") is not a partition of " + std::to_string(n));
      return p;
    };

    if (*table_cmd) {
      require_n(1);
      out << format_table(ws.table(n), format);
      return kOk;
    }

    if (*kron_cmd) {
      require_n(1);
      const Partition lambda = partition_of_n(lambda_text), mu = partition_of_n(mu_text);
      const CharacterTable& table = ws.table(n);
      if (support_only) {
        out << format_support(pair_support(lambda, mu, table, ws.pairs(n)), 2, format);
      } else {
        out << format_decomposition(decompose(pointwise_product(character(table, lambda), character(table, mu)), table),
                                    format);
      }
      return kOk;
    }

    if (*power_cmd) {
      require_n(1);
      const Partition lambda = partition_of_n(lambda_text);
      const CharacterTable& table = ws.table(n);
      if (support_only) {
        out << format_support(power_support(lambda, power_k, table, ws.pairs(n)),
                              static_cast<unsigned>(std::min<std::uint64_t>(power_k, ~0u)), format);
      } else {
        if (power_k > 64) throw InvalidArgument("exact powers are limited to k <= 64; use --support-only");
        out << format_decomposition(power_exact(lambda, static_cast<unsigned>(power_k), table), format);
      }
      return kOk;
    }

    if (*cover_cmd) {
      require_n(2);
      const CharacterTable& table = ws.table(n);
      CoveringReport report;
      if (lambda_text.empty()) {
        report = covering_survey(table, ws.pairs(n), resolve_threads(threads));
      } else {
        report.group = "S_" + std::to_string(n);
        report.records.push_back(covering_record(partition_of_n(lambda_text), table, ws.pairs(n)));
        report.compute_aggregates();
      }
      out << format_report(report, format);
      return kOk;
    }

    if (*verify_cmd) {
      std::vector<VerificationReport> reports;
      auto range_or = [&](Range fallback) {
        const Range r = range_text.empty() ? fallback : parse_range(range_text);
        if (r.hi > 10 && !extended) throw InvalidArgument("n > 10 requires --extended");
        if (r.hi > max_n) throw InvalidArgument("n exceeds --max-n");
        return r;
      };
      const unsigned top = extended ? 12 : 10;
      if (target == "table1") {
        reports.push_back(verify_table1(ws));
      } else if (target == "semigroup") {
        reports.push_back(verify_semigroup(ws, samples, max_size, seed));
      } else if (target == "theorem1") {
        const Range r = range_or({5, top});
        for (unsigned m = r.lo; m <= r.hi; ++m) reports.push_back(verify_theorem1(ws, m));
      } else if (target == "non-rectangle") {
        const Range r = range_or({3, top});
        for (unsigned m = r.lo; m <= r.hi; ++m) reports.push_back(verify_lemma_nonrectangle(ws, m));
      } else if (target == "rectangle") {
        const Range r = range_or({7, top});
        for (unsigned m = r.lo; m <= r.hi; ++m) reports.push_back(verify_lemma_rectangle(ws, m));
      } else if (target == "theta-move") {
        const Range r = range_or({1, 9});
        for (unsigned m = r.lo; m <= r.hi; ++m) reports.push_back(verify_theta_move(ws, m, theta_u, theta_v));
      } else if (target == "brauer") {
        const Range r = range_or({2, top});
        for (unsigned m = r.lo; m <= r.hi; ++m) reports.push_back(verify_brauer(ws, m));
      }
      out << format_verification(reports, format);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      return ok ? kOk : kVerificationFailed;
    }

    if (*generic_cmd) {
      GenericCharTable table = [&] {
        if (dihedral_m) return dihedral_table(*dihedral_m);
        if (table_file.empty()) throw InvalidArgument("generic needs a table file or --dihedral m");
        return load_generic_table(table_file);
      }();
      out << format_report(generic_covering(table, tolerances, resolve_threads(threads)), format);
      return kOk;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << '\n';
    return kEnvironment;
  } catch (const TableError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const NotACharacter& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEnvironment;
  }
  return kUsage;
}

}  // namespace symcover::cli
