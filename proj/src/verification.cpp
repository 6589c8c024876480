#include "symcover/verification.hpp"

#include <random>
#include <set>
#include <sstream>

#include "symcover/class_algebra.hpp"
#include "symcover/covering.hpp"
#include "symcover/error.hpp"

namespace symcover {

namespace {

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string list(const std::vector<Partition>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? " " : "") + paren(ps[i]);
  return out + "}";
}

std::vector<Partition> difference(const SupportSet& a, const SupportSet& b) {
  std::vector<Partition> out;
  for (const Partition& p : a.members()) {
    if (!b.contains(p)) out.push_back(p);
  }
  return out;
}

SupportSet support_of(const Decomposition& d, const CharacterTable& table) {
  return SupportSet::of(table.shared_index(), d.support());
}

}  // namespace

void VerificationReport::add(std::string label, bool passed, std::string detail) {
  checks_.push_back({std::move(label), passed, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t VerificationReport::passed_count() const {
  std::size_t count = 0;
  for (const auto& c : checks_) count += c.passed ? 1 : 0;
  return count;
}

VerificationReport verify_theorem1(Workspace& ws, unsigned n) {
  if (n <= 4) throw InvalidArgument("theorem1 requires n > 4");
  VerificationReport report("theorem1 n=" + std::to_string(n));
  const CharacterTable& table = ws.table(n);
  PairSupportCache& pairs = ws.pairs(n);
  const unsigned k = n - 1;

  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table.degree(r) == 1) continue;
    const Partition& lambda = table.partitions()[r];
    const auto seq = power_support_sequence(lambda, k, table, pairs);
    SupportSet covered(table.shared_index());
    for (const auto& s : seq) covered |= s;
    const bool ok = seq.back().is_full() && covered.is_full();
    std::string detail;
    if (!ok) {
      detail = "lambda=" + paren(lambda) + " k=" + std::to_string(k) + " missing from power " +
               list(seq.back().missing()) + ", from union " + list(covered.missing());
    }
    report.add("n=" + std::to_string(n) + " " + paren(lambda) + ": power " + std::to_string(k) +
                   " and union through " + std::to_string(k) + " cover Irr",
               ok, detail);
  }

  const Partition standard{n - 1, 1};
  const auto seq = power_support_sequence(standard, n - 2, table, pairs);
  SupportSet covered(table.shared_index());
  for (const auto& s : seq) covered |= s;
  const std::vector<Partition> sign_only{Partition::column(n)};
  const bool sharp = seq.back().missing() == sign_only && covered.missing() == sign_only;
  report.add("n=" + std::to_string(n) + " " + paren(standard) + " at k=" + std::to_string(n - 2) +
                 ": power and union miss exactly the sign character",
             sharp,
             sharp ? "" : "missing from power " + list(seq.back().missing()) + ", from union " + list(covered.missing()));

  const CoveringReport survey = covering_survey(table, pairs, ws.threads());
  auto show = [](const std::optional<unsigned>& v) { return v ? std::to_string(*v) : std::string("none"); };
  report.add("n=" + std::to_string(n) + ": e_max = d_max = " + std::to_string(k),
             survey.e_max == k && survey.d_max == k, "e_max=" + show(survey.e_max) + " d_max=" + show(survey.d_max));
  bool stable = true;
  for (const auto& rec : survey.records) stable = stable && rec.stabilizes;
  report.add("n=" + std::to_string(n) + ": full power stays full", stable);
  return report;
}

VerificationReport verify_lemma_nonrectangle(Workspace& ws, unsigned n) {
  if (n < 3) throw InvalidArgument("non-rectangle lemma requires n >= 3");
  VerificationReport report("non-rectangle n=" + std::to_string(n));
  const CharacterTable& table = ws.table(n);
  PairSupportCache& pairs = ws.pairs(n);
  const SupportSet theta2 = support_of(decompose(theta(n, 2), table), table);

  if (n >= 4) {
    const SupportSet expected =
        SupportSet::of(table.shared_index(), {Partition{n}, Partition{n - 1, 1}, Partition{n - 2, 2}, Partition{n - 2, 1, 1}});
    report.add("n=" + std::to_string(n) + ": c(theta_{n,2}) = {(n),(n-1,1),(n-2,2),(n-2,1,1)}", theta2 == expected,
               "got " + list(theta2.members()));
  }
  for (const Partition& lambda : table.partitions()) {
    if (is_rectangle(lambda)) continue;
    const SupportSet square = pair_support(lambda, lambda, table, pairs);
    const bool ok = theta2.is_subset_of(square);
    report.add("n=" + std::to_string(n) + " " + paren(lambda) + ": c(theta_{n,2}) in c(chi^2)", ok,
               ok ? "" : "missing " + list(difference(theta2, square)));
  }
  return report;
}

VerificationReport verify_lemma_rectangle(Workspace& ws, unsigned n) {
  if (n <= 6) throw InvalidArgument("rectangle lemma requires n > 6");
  VerificationReport report("rectangle n=" + std::to_string(n));
  const CharacterTable& table = ws.table(n);
  PairSupportCache& pairs = ws.pairs(n);
  const SupportSet theta5 = support_of(decompose(theta(n, 5), table), table);
  const std::string tag = "n=" + std::to_string(n) + " ";

  std::optional<Partition> mu;
  if (n >= 10) {
    mu = Partition{n - 4, 2, 2};
    SupportSet shifted(table.shared_index());
    for (const Partition& nu : table1_lambda_set()) shifted.insert(add(nu, Partition::row(n - 10)));
    report.add(tag + "c(theta_{n,5}) = {nu + (n-10) : nu in Lambda}", shifted == theta5,
               "got " + list(theta5.members()));
    const SupportSet mu_square = pair_support(*mu, *mu, table, pairs);
    const bool ok = theta5.is_subset_of(mu_square);
    report.add(tag + "c(theta_{n,5}) in c(chi_" + paren(*mu) + "^2)", ok,
               ok ? "" : "missing " + list(difference(theta5, mu_square)));
  }

  for (std::size_t r = 0; r < table.size(); ++r) {
    const Partition& lambda = table.partitions()[r];
    if (!is_rectangle(lambda) || table.degree(r) == 1) continue;
    const auto seq = power_support_sequence(lambda, 4, table, pairs);
    const bool ok = theta5.is_subset_of(seq[3]);
    report.add(tag + paren(lambda) + ": c(theta_{n,5}) in c(chi^4)", ok,
               ok ? "" : "missing " + list(difference(theta5, seq[3])));
    if (mu) {
      report.add(tag + paren(lambda) + ": " + paren(*mu) + " in c(chi^2)", seq[1].contains(*mu));
    }
  }
  return report;
}

std::vector<Partition> table1_lambda_set() {
  std::set<Partition, CanonicalOrder> out;
  for (unsigned s = 0; s <= 5; ++s) {
    for (const Partition& alpha : partitions_of(s)) out.insert(add_conj(alpha, Partition::row(10 - s)));
  }
  return {out.begin(), out.end()};
}

const std::vector<std::pair<Partition, unsigned>>& table1_expected() {
  static const std::vector<std::pair<Partition, unsigned>> rows = {
      {Partition{10}, 1},          {Partition{9, 1}, 1},          {Partition{8, 2}, 3},
      {Partition{8, 1, 1}, 1},     {Partition{7, 3}, 3},          {Partition{7, 2, 1}, 5},
      {Partition{7, 1, 1, 1}, 3},  {Partition{6, 4}, 4},          {Partition{6, 3, 1}, 7},
      {Partition{6, 2, 2}, 7},     {Partition{6, 2, 1, 1}, 7},    {Partition{6, 1, 1, 1, 1}, 4},
      {Partition{5, 5}, 1},        {Partition{5, 4, 1}, 7},       {Partition{5, 3, 2}, 8},
      {Partition{5, 3, 1, 1}, 10}, {Partition{5, 2, 2, 1}, 8},    {Partition{5, 2, 1, 1, 1}, 7},
      {Partition{5, 1, 1, 1, 1, 1}, 2},
  };
  return rows;
}

VerificationReport verify_table1(Workspace& ws) {
  VerificationReport report("table1");
  const CharacterTable& table = ws.table(10);
  const Decomposition square = power_exact(Partition{6, 2, 2}, 2, table);
  const auto lambda_set = table1_lambda_set();

  std::vector<Partition> listed;
  for (const auto& [nu, m] : table1_expected()) listed.push_back(nu);
  std::sort(listed.begin(), listed.end(), CanonicalOrder());
  report.add("|Lambda| = 19", lambda_set.size() == 19, "got " + std::to_string(lambda_set.size()));
  report.add("Lambda equals the tabulated partitions", lambda_set == listed, "Lambda = " + list(lambda_set));

  for (const auto& [nu, expected] : table1_expected()) {
    const BigInt got = square.multiplicity(nu);
    report.add("<chi_" + paren(nu) + ", chi_(6,2,2)^2> = " + std::to_string(expected), got == expected,
               "computed " + got.str());
  }
  return report;
}

VerificationReport verify_theta_move(Workspace& ws, unsigned n, std::optional<unsigned> u, std::optional<unsigned> v) {
  if (n < 1) throw InvalidArgument("theta-move requires n >= 1");
  if (u && *u > n) throw InvalidArgument("theta-move requires u <= n");
  VerificationReport report("theta-move n=" + std::to_string(n));
  const CharacterTable& table = ws.table(n);

  const unsigned u_lo = u.value_or(0), u_hi = u.value_or(std::min(3u, n));
  const unsigned v_lo = v.value_or(0), v_hi = v.value_or(3);
  for (unsigned uu = u_lo; uu <= u_hi; ++uu) {
    const ClassFunction th = theta(n, uu);
    for (unsigned vv = v_lo; vv <= v_hi; ++vv) {
      ClassFunction power = trivial_character(n);
      for (unsigned i = 0; i < vv; ++i) power *= th;
      std::string failure;
      for (const Partition& lambda : table.partitions()) {
        const SupportSet got = support_of(decompose(pointwise_product(power, character(table, lambda)), table), table);
        SupportSet expected(table.shared_index());
        for (const Partition& mu : table.partitions()) {
          if (skew_outside_size(lambda, mu) <= static_cast<std::uint64_t>(uu) * vv) expected.insert(mu);
        }
        if (got != expected && failure.empty()) {
          failure = "lambda=" + paren(lambda) + " extra " + list(difference(got, expected)) + " missing " +
                    list(difference(expected, got));
        }
      }
      report.add("n=" + std::to_string(n) + " u=" + std::to_string(uu) + " v=" + std::to_string(vv) +
                     ": c(theta^v chi_lambda) = {mu : |lambda \\ mu| <= uv} for all lambda",
                 failure.empty(), failure);
    }
  }
  return report;
}

VerificationReport verify_semigroup(Workspace& ws, unsigned samples, unsigned max_size, std::uint64_t seed) {
  if (max_size < 2) throw InvalidArgument("semigroup sampling needs max_size >= 2");
  VerificationReport report("semigroup");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto random_partition = [&](unsigned size) {
    const auto& all = ws.table(size).partitions();
    return all[uniform(0, all.size() - 1)];
  };
  auto random_member = [&](const SupportSet& s) {
    const auto members = s.members();
    return members[uniform(0, members.size() - 1)];
  };
  auto support = [&](const Partition& a, const Partition& b) {
    const unsigned size = a.size();
    return pair_support(a, b, ws.table(size), ws.pairs(size));
  };

  unsigned violations = 0;
  for (unsigned i = 0; i < samples; ++i) {
    const auto a = static_cast<unsigned>(uniform(1, max_size - 1));
    const auto b = static_cast<unsigned>(uniform(1, max_size - a));
    const Partition lambda = random_partition(a), mu = random_partition(a);
    const Partition alpha = random_partition(b), beta = random_partition(b);
    const Partition nu = random_member(support(lambda, mu));
    const Partition gamma = random_member(support(alpha, beta));
    const Partition target = add(nu, gamma);
    const bool plus = support(add(lambda, alpha), add(mu, beta)).contains(target);
    const bool plus_conj = support(add_conj(lambda, alpha), add_conj(mu, beta)).contains(target);
    if (!plus || !plus_conj) {
      ++violations;
      report.add("sample " + std::to_string(i), false,
                 "lambda=" + paren(lambda) + " mu=" + paren(mu) + " nu=" + paren(nu) + " alpha=" + paren(alpha) +
                     " beta=" + paren(beta) + " gamma=" + paren(gamma) + (plus ? "" : " fails for +") +
                     (plus_conj ? "" : " fails for +'"));
    }
  }
  report.add("semigroup property over " + std::to_string(samples) + " sampled instances (sizes <= " +
                 std::to_string(max_size) + ", seed " + std::to_string(seed) + ")",
             violations == 0, std::to_string(violations) + " violations");
  return report;
}

VerificationReport verify_brauer(Workspace& ws, unsigned n) {
  if (n < 2) throw InvalidArgument("brauer check requires n >= 2");
  VerificationReport report("brauer n=" + std::to_string(n));
  const CoveringReport survey = covering_survey(ws.table(n), ws.pairs(n), ws.threads());
  for (const auto& rec : survey.records) {
    if (rec.linear()) continue;
    const std::string label = "n=" + std::to_string(n) + " (" + rec.id + "): d <= |values| and d <= e";
    if (!rec.d) {
      report.add(label, true, "d does not exist");
      continue;
    }
    const bool ok = *rec.d <= rec.distinct_values && (!rec.e || *rec.d <= *rec.e);
    report.add(label, ok,
               "d=" + std::to_string(*rec.d) + " |values|=" + std::to_string(rec.distinct_values) +
                   " e=" + (rec.e ? std::to_string(*rec.e) : std::string("none")));
  }
  return report;
}

VerificationReport verify_oracle_equivalence(Workspace& ws, unsigned n) {
  VerificationReport report("oracle n=" + std::to_string(n));
  const CharacterTable& table = ws.table(n);
  PairSupportCache& pairs = ws.pairs(n);
  const unsigned k_max = std::max(1u, n - 1);
  for (const Partition& lambda : table.partitions()) {
    const auto seq = power_support_sequence(lambda, k_max, table, pairs);
    std::string failure;
    for (unsigned k = 1; k <= k_max && failure.empty(); ++k) {
      const SupportSet exact = support_of(power_exact(lambda, k, table), table);
      if (exact != seq[k - 1]) {
        failure = "k=" + std::to_string(k) + " exact " + list(exact.members()) + " iterated " + list(seq[k - 1].members());
      }
    }
    report.add("n=" + std::to_string(n) + " " + paren(lambda) + ": support iteration = exact powers for k <= " +
                   std::to_string(k_max),
               failure.empty(), failure);
  }
  return report;
}

}  // namespace symcover
