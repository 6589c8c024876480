#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcover/bigint.hpp"
#include "symcover/kronecker_support.hpp"

namespace symcover {

/// The orbit S_1, S_2, ... of the support map, followed until a subset
/// repeats. Because the map is deterministic on a finite set, a repeat proves
/// the orbit is periodic from then on.
struct PowerOrbit {
  using Bits = SupportSet::Bits;

  /// powers[k-1] = S_k, including the first repeated subset.
  std::vector<Bits> powers;
  /// Smallest k with S_k = everything, if any.
  std::optional<unsigned> e;
  /// Smallest k with S_1 ∪ ... ∪ S_k = everything, if any.
  std::optional<unsigned> d;
  /// k at which e (resp. d) was decided: e itself when it exists, otherwise
  /// the k whose S_k repeated an earlier subset.
  unsigned e_witness_k = 0;
  unsigned d_witness_k = 0;
  /// S_{cycle_start} = S_{cycle_start + cycle_length}.
  unsigned cycle_start = 0;
  unsigned cycle_length = 0;
  /// S_k full implies S_{k+1} full, over every k recorded.
  bool stabilizes = true;
};

PowerOrbit explore_orbit(const PowerOrbit::Bits& start,
                         const std::function<PowerOrbit::Bits(const PowerOrbit::Bits&)>& step);

struct CoveringRecord {
  std::string id;
  BigInt degree;
  std::optional<unsigned> e;
  std::optional<unsigned> d;
  unsigned e_witness_k = 0;
  unsigned d_witness_k = 0;
  bool faithful = false;
  /// |Z(χ)| = total size of the classes with |χ(g)| = χ(1).
  BigInt center_order;
  /// |{χ(g) : g ∈ G}|, the Brauer bound on d.
  std::size_t distinct_values = 0;
  bool stabilizes = true;

  bool linear() const { return degree == 1; }
};

struct CoveringReport {
  std::string group;
  std::vector<CoveringRecord> records;
  /// Maxima over nonlinear characters; nullopt if any of them lacks the
  /// number, or if there are no nonlinear characters.
  std::optional<unsigned> e_max;
  std::optional<unsigned> d_max;

  void compute_aggregates();
};

PowerOrbit sn_orbit(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache);
/// c(χ_λ^k) for any k >= 1, using the orbit's period once k runs past it.
SupportSet power_support(const Partition& lambda, std::uint64_t k, const CharacterTable& table, PairSupportCache& cache);

std::optional<unsigned> e_of(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache);
std::optional<unsigned> d_of(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache);

CoveringRecord covering_record(const Partition& lambda, const CharacterTable& table, PairSupportCache& cache);

/// Records for every irreducible of S_n in canonical order. Throws
/// InvalidArgument when n < 2.
CoveringReport covering_survey(const CharacterTable& table, PairSupportCache& cache, unsigned threads = 1);

}  // namespace symcover
