// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcover/class_algebra.hpp"
#include "symcover/covering.hpp"
#include "symcover/generic_table.hpp"
#include "symcover/verification.hpp"
#include "symcover/workspace.hpp"

using namespace symcover;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kSquareMultiplicityLimit = 10.0;
constexpr double kCoveringBoundLimit = 300.0;
constexpr double kCoveringBoundExtendedLimit = 1800.0;
constexpr double kNonRectangleLimit = 120.0;
constexpr double kRectangleLimit = 300.0;
constexpr double kThetaMoveLimit = 120.0;
constexpr double kDihedralLimit = 1.0;
constexpr double kPropertyLimit = 600.0;
constexpr double kNonexistenceLimit = 1.0;
constexpr double kIntegralityTolerance = 1e-6;
constexpr unsigned kSemigroupSamples = 200;
constexpr unsigned kSemigroupMaxSize = 9;

struct Outcome {
  bool passed = true;
  std::string summary;
  std::string first_failure;

  void absorb(const VerificationReport& r) {
    for (const Check& c : r.checks()) {
      ++total;
      if (c.passed) {
        ++ok;
      } else if (passed) {
        passed = false;
        first_failure = c.label + (c.detail.empty() ? "" : ": " + c.detail);
      } else {
        passed = false;
      }
    }
  }
  void expect(bool condition, const std::string& what) {
    ++total;
    if (condition) {
      ++ok;
      return;
    }
    if (passed) first_failure = what;
    passed = false;
  }
  std::string counts() const { return std::to_string(ok) + "/" + std::to_string(total) + " checks"; }

  std::size_t ok = 0;
  std::size_t total = 0;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

Workspace fresh_workspace(unsigned threads) {
  TableOptions options;
  options.threads = threads;
  return Workspace(TableCache{}, options);
}

Outcome square_multiplicities(unsigned threads) {
  Workspace ws = fresh_workspace(threads);
  Outcome out;
  const Decomposition sq = power_exact(Partition{6, 2, 2}, 2, ws.table(10));
  for (const auto& [nu, expected] : table1_expected()) {
    out.expect(sq.multiplicity(nu) == expected, nu.to_string() + " expected " + std::to_string(expected) +
                                                    " got " + to_string(sq.multiplicity(nu)));
  }
  out.expect(table1_expected().size() == 19, "19 rows");
  out.expect(sq.multiplicity(Partition{8, 2}) == 3, "(8,2) -> 3");
  out.expect(sq.multiplicity(Partition{5, 3, 1, 1}) == 10, "(5,3,1,1) -> 10");
  out.expect(sq.multiplicity(Partition{5, 1, 1, 1, 1, 1}) == 2, "(5,1,1,1,1,1) -> 2");
  out.absorb(verify_table1(ws));
  out.summary = std::to_string(table1_expected().size()) + " multiplicities, " + out.counts();
  return out;
}

Outcome covering_bound(unsigned threads, unsigned lo, unsigned hi) {
  Workspace ws = fresh_workspace(threads);
  Outcome out;
  for (unsigned n = lo; n <= hi; ++n) out.absorb(verify_theorem1(ws, n));
  out.summary = "n=" + std::to_string(lo) + ".." + std::to_string(hi) + ", " + out.counts();
  return out;
}

Outcome non_rectangle(unsigned threads) {
  Workspace ws = fresh_workspace(threads);
  Outcome out;
  for (unsigned n = 3; n <= 10; ++n) out.absorb(verify_lemma_nonrectangle(ws, n));
  out.summary = "n=3..10, " + out.counts();
  return out;
}

Outcome rectangle(unsigned threads) {
  Workspace ws = fresh_workspace(threads);
  Outcome out;
  std::size_t intermediate = 0;
  for (unsigned n : {7u, 8u, 9u, 10u, 12u}) {
    const VerificationReport r = verify_lemma_rectangle(ws, n);
    out.absorb(r);
    const std::string mu = "(" + std::to_string(n - 4) + ",2,2)";
    for (const Check& c : r.checks()) intermediate += (n >= 10 && c.label.find(mu) != std::string::npos) ? 1 : 0;
  }
  out.expect(intermediate > 0, "intermediate claims at n = 10, 12 exercised");
  out.summary = "n=7,8,9,10,12, " + out.counts();
  return out;
}

Outcome theta_move(unsigned threads) {
  Workspace ws = fresh_workspace(threads);
  Outcome out;
  for (unsigned n = 1; n <= 9; ++n) out.absorb(verify_theta_move(ws, n));
  out.summary = "n<=9, u<=3, v<=3, " + out.counts();
  return out;
}

Outcome dihedral(unsigned threads) {
  Outcome out;
  GenericTolerances tol;
  tol.integrality = kIntegralityTolerance;
  const CoveringReport report = generic_covering(dihedral_table(7), tol, threads);
  std::size_t nonlinear = 0;
  for (const CoveringRecord& r : report.records) {
    if (r.linear()) continue;
    ++nonlinear;
    out.expect(r.e == 6u, r.id + " e=6");
    out.expect(r.d == 3u, r.id + " d=3");
  }
  out.expect(nonlinear == 3, "three nonlinear irreducibles");
  out.summary = "D_14, " + out.counts();
  return out;
}

Outcome properties(unsigned threads) {
  Workspace ws = fresh_workspace(threads);
  Outcome out;
  for (unsigned n = 1; n <= 8; ++n) out.absorb(verify_oracle_equivalence(ws, n));
  const VerificationReport semigroup = verify_semigroup(ws, kSemigroupSamples, kSemigroupMaxSize, 1);
  out.absorb(semigroup);
  for (unsigned n = 2; n <= 10; ++n) out.absorb(verify_brauer(ws, n));
  for (unsigned n = 1; n <= 12; ++n) {
    bool ok = true;
    try {
      ws.table(n).verify();
    } catch (const std::exception&) {
      ok = false;
    }
    out.expect(ok, "orthogonality n=" + std::to_string(n));
  }
  for (unsigned n = 2; n <= 10; ++n) {
    const CoveringReport survey = covering_survey(ws.table(n), ws.pairs(n), threads);
    for (const CoveringRecord& r : survey.records) {
      out.expect(r.stabilizes, "stabilization n=" + std::to_string(n) + " " + r.id);
    }
  }
  out.summary = "oracle n<=8, semigroup " + std::to_string(kSemigroupSamples) + " samples, Brauer n<=10, " +
                "orthogonality n<=12, stabilization n<=10; " + out.counts();
  return out;
}

Outcome nonexistence(unsigned threads) {
  Workspace ws = fresh_workspace(threads);
  Outcome out;
  for (unsigned n = 2; n <= 10; ++n) {
    const CharacterTable& t = ws.table(n);
    const CoveringRecord trivial = covering_record(Partition::row(n), t, ws.pairs(n));
    out.expect(!trivial.e && !trivial.d, "trivial n=" + std::to_string(n));
    if (n >= 3) {
      const CoveringRecord sign = covering_record(Partition::column(n), t, ws.pairs(n));
      out.expect(!sign.e && !sign.d, "sign n=" + std::to_string(n));
    }
  }
  const CoveringRecord square = covering_record(Partition{2, 2}, ws.table(4), ws.pairs(4));
  out.expect(!square.e && !square.d, "(2,2) at n=4");
  out.summary = "trivial n=2..10, sign n=3..10, (2,2); " + out.counts();
  return out;
}

std::string seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << " s";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool extended = false;
  unsigned threads = 0;
  app.add_flag("--extended", extended, "Also check e_max = d_max = n-1 at n = 11, 12");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria{
      {"1", "multiplicities in chi_(6,2,2)^2", kSquareMultiplicityLimit, [&] { return square_multiplicities(threads); }},
      {"2", "e_max = d_max = n-1, n = 5..10", kCoveringBoundLimit, [&] { return covering_bound(threads, 5, 10); }},
      {"3", "theta_2 inside chi^2, non-rectangular shapes", kNonRectangleLimit, [&] { return non_rectangle(threads); }},
      {"4", "theta_5 inside chi^4, rectangular shapes", kRectangleLimit, [&] { return rectangle(threads); }},
      {"5", "theta-move law", kThetaMoveLimit, [&] { return theta_move(threads); }},
      {"6", "dihedral example", kDihedralLimit, [&] { return dihedral(threads); }},
      {"7", "property suites", kPropertyLimit, [&] { return properties(threads); }},
      {"8", "nonexistence semantics", kNonexistenceLimit, [&] { return nonexistence(threads); }},
  };
  if (extended) {
    criteria.push_back({"2x", "e_max = d_max = n-1, n = 11..12", kCoveringBoundExtendedLimit,
                        [&] { return covering_bound(threads, 11, 12); }});
  }

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.first_failure = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = elapsed <= c.limit_seconds;
    const bool ok = outcome.passed && in_time;
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << outcome.summary << " ("
              << seconds(elapsed) << ", limit " << seconds(c.limit_seconds) << ")";
    if (!outcome.passed) std::cout << "; first failure: " << outcome.first_failure;
    if (!in_time) std::cout << "; over time limit";
    std::cout << '\n';
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
