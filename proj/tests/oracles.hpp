#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the Murnaghan–Nakayama code or the support iteration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "symcover/partition.hpp"

namespace symcover::oracle {

/// p(n) by the coin-change recurrence over part sizes.
inline std::vector<std::uint64_t> partition_counts(unsigned n_max) {
  std::vector<std::uint64_t> ways(n_max + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= n_max; ++part) {
    for (unsigned total = part; total <= n_max; ++total) ways[total] += ways[total - part];
  }
  return ways;
}

/// Cycle type of a permutation given in one-line notation.
inline Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<Partition::Part> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    Partition::Part len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

/// Class sizes of S_n by enumerating all n! permutations.
inline std::map<Partition, std::uint64_t> class_sizes_by_enumeration(unsigned n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, std::uint64_t> out;
  do {
    ++out[cycle_type(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Permutation character of S_n on tabloids of composition alpha, at cycle
/// type t: the number of ways to put every cycle of t into a block so that
/// block j receives exactly alpha_j points.
inline std::int64_t young_character(std::vector<int> alpha, const std::vector<Partition::Part>& cycles,
                                    std::size_t next = 0) {
  if (next == cycles.size()) {
    return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; }) ? 1 : 0;
  }
  std::int64_t total = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] >= static_cast<int>(cycles[next])) {
      alpha[j] -= static_cast<int>(cycles[next]);
      total += young_character(alpha, cycles, next + 1);
      alpha[j] += static_cast<int>(cycles[next]);
    }
  }
  return total;
}

/// χ_λ(t) by the Jacobi–Trudi determinant det[h_{λ_i - i + j}], with each
/// product of h's read as a Young permutation character.
inline std::int64_t jacobi_trudi_character(const Partition& lambda, const Partition& t) {
  const std::size_t len = lambda.length();
  if (len == 0) return 1;
  std::vector<int> sigma(len);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < len; ++a) {
      for (std::size_t b = a + 1; b < len; ++b) inversions += sigma[a] > sigma[b] ? 1 : 0;
    }
    std::vector<int> alpha(len);
    bool valid = true;
    for (std::size_t i = 0; i < len; ++i) {
      alpha[i] = static_cast<int>(lambda[i]) - static_cast<int>(i) + sigma[i];
      valid = valid && alpha[i] >= 0;
    }
    if (!valid) continue;
    const std::int64_t term = young_character(alpha, t.parts());
    total += (inversions % 2) ? -term : term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace symcover::oracle
