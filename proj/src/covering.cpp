#include "symcover/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symcover/error.hpp"
#include "symcover/parallel.hpp"

namespace symcover {

PowerOrbit explore_orbit(const PowerOrbit::Bits& start,
                         const std::function<PowerOrbit::Bits(const PowerOrbit::Bits&)>& step) {
  PowerOrbit orbit;
  std::map<PowerOrbit::Bits, unsigned> seen;
  PowerOrbit::Bits covered = start;

  orbit.powers.push_back(start);
  seen.emplace(start, 1);
  if (start.all()) orbit.e = 1;
  if (covered.all()) orbit.d = 1;

  while (true) {
    PowerOrbit::Bits next = step(orbit.powers.back());
    const auto k = static_cast<unsigned>(orbit.powers.size() + 1);
    orbit.powers.push_back(next);
    if (!orbit.e && next.all()) orbit.e = k;
    covered |= next;
    if (!orbit.d && covered.all()) orbit.d = k;

    const auto [it, inserted] = seen.emplace(std::move(next), k);
    if (!inserted) {
      orbit.cycle_start = it->second;
      orbit.cycle_length = k - it->second;
      orbit.e_witness_k = orbit.e.value_or(k);
      orbit.d_witness_k = orbit.d.value_or(k);
      break;
    }
  }

  for (std::size_t i = 0; i + 1 < orbit.powers.size(); ++i) {
    if (orbit.powers[i].all() && !orbit.powers[i + 1].all()) orbit.stabilizes = false;
  }
  return orbit;
}

void CoveringReport::compute_aggregates() {
  e_max.reset();
  d_max.reset();
  bool any = false, e_ok = true, d_ok = true;
  unsigned e_best = 0, d_best = 0;
  for (const auto& r : records) {
    if (r.linear()) continue;
    any = true;
    if (r.e) e_best = std::max(e_best, *r.e); else e_ok = false;
    if (r.d) d_best = std::max(d_best, *r.d); else d_ok = false;
  }
  if (any && e_ok) e_max = e_best;
  if (any && d_ok) d_max = d_best;
}

PowerOrbit sn_orbit(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache) {
  const SupportSet start = SupportSet::of(table.shared_index(), {lambda});
  const auto index = table.shared_index();
  return explore_orbit(start.bits(), [&](const PowerOrbit::Bits& bits) {
    return support_step(SupportSet(index, bits), lambda, table, cache).bits();
  });
}

SupportSet power_support(const Partition& lambda, std::uint64_t k, const CharacterTable& table, PairSupportCache& cache) {
  if (k == 0) throw InvalidArgument("power exponent must be positive");
  const PowerOrbit orbit = sn_orbit(lambda, table, cache);
  std::uint64_t pos = k;
  if (pos > orbit.powers.size()) {
    pos = orbit.cycle_start + (pos - orbit.cycle_start) % orbit.cycle_length;
  }
  return SupportSet(table.shared_index(), orbit.powers[pos - 1]);
}

std::optional<unsigned> e_of(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache) {
  return sn_orbit(lambda, table, cache).e;
}

std::optional<unsigned> d_of(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache) {
  return sn_orbit(lambda, table, cache).d;
}

CoveringRecord covering_record(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache) {
  const std::size_t row = table.index_of(lambda);
  const BigInt& degree = table.degree(row);

  CoveringRecord record;
  record.id = lambda.to_string();
  record.degree = degree;

  BigInt kernel = 0;
  record.center_order = 0;
  std::set<BigInt> values;
  for (std::size_t c = 0; c < table.size(); ++c) {
    const BigInt& v = table.value(row, c);
    values.insert(v);
    if (v == degree) kernel += table.class_sizes()[c];
    if (abs(v) == degree) record.center_order += table.class_sizes()[c];
  }
  record.faithful = (kernel == 1);
  record.distinct_values = values.size();

  const PowerOrbit orbit = sn_orbit(lambda, table, cache);
  record.e = orbit.e;
  record.d = orbit.d;
  record.e_witness_k = orbit.e_witness_k;
  record.d_witness_k = orbit.d_witness_k;
  record.stabilizes = orbit.stabilizes;
  return record;
}

CoveringReport covering_survey(const CharacterTable& table, PairSupportCache& cache, unsigned threads) {
  if (table.n() < 2) throw InvalidArgument("covering survey needs n >= 2");
  CoveringReport report;
  report.group = "S_" + std::to_string(table.n());
  report.records.resize(table.size());
  parallel_for(table.size(), threads, [&](std::size_t i) {
    report.records[i] = covering_record(table.partitions()[i], table, cache);
  });
  report.compute_aggregates();
  return report;
}

}  // namespace symcover
