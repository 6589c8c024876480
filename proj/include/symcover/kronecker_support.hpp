#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "symcover/partition.hpp"
#include "symcover/sn_characters.hpp"

namespace symcover {

/// A set of irreducibles of one group, stored as a bitset over the
/// canonical index. For S_n the members are partitions of n.
class SupportSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  explicit SupportSet(std::shared_ptr<const PartitionIndex> index);
  SupportSet(std::shared_ptr<const PartitionIndex> index, Bits bits);

  static SupportSet full(std::shared_ptr<const PartitionIndex> index);
  static SupportSet of(std::shared_ptr<const PartitionIndex> index, const std::vector<Partition>& members);

  unsigned n() const noexcept { return index_->n(); }
  const PartitionIndex& index() const noexcept { return *index_; }
  const Bits& bits() const noexcept { return bits_; }

  bool contains(const Partition& lambda) const;
  bool contains_index(std::size_t i) const { return bits_.test(i); }
  void insert(const Partition& lambda);
  void insert_index(std::size_t i) { bits_.set(i); }

  std::size_t count() const noexcept { return bits_.count(); }
  bool is_full() const noexcept { return bits_.all(); }
  bool is_subset_of(const SupportSet& other) const { return bits_.is_subset_of(other.bits_); }

  /// Members in canonical order.
  std::vector<Partition> members() const;
  /// Partitions of n not in the set, canonical order.
  std::vector<Partition> missing() const;

  SupportSet& operator|=(const SupportSet& other);

  friend bool operator==(const SupportSet& a, const SupportSet& b) {
    return a.n() == b.n() && a.bits_ == b.bits_;
  }
  friend bool operator<(const SupportSet& a, const SupportSet& b) { return a.bits_ < b.bits_; }

 private:
  std::shared_ptr<const PartitionIndex> index_;
  Bits bits_;
};

/// Lazily filled map from unordered pairs (λ, μ) to c(χ_λ χ_μ) for a single
/// character table. Concurrent lookups of the same pair may compute it
/// twice; the first insert wins and both results agree.
class PairSupportCache {
 public:
  explicit PairSupportCache(const CharacterTable& table);
  ~PairSupportCache();
  PairSupportCache(const PairSupportCache&) = delete;
  PairSupportCache& operator=(const PairSupportCache&) = delete;

  const CharacterTable& table() const noexcept { return table_; }
  const SupportSet& get(std::size_t i, std::size_t j);
  std::size_t size() const;

 private:
  SupportSet compute(std::size_t i, std::size_t j) const;

  const CharacterTable& table_;
  struct Store;
  std::unique_ptr<Store> store_;
};

/// c(χ_λ χ_μ). The table argument must be the one the cache was built for.
SupportSet pair_support(const Partition& lambda, const Partition& mu, const CharacterTable& table,
                        PairSupportCache& cache);

/// T(S) = ∪_{μ ∈ S} c(χ_μ χ_λ).
SupportSet support_step(const SupportSet& s, const Partition& lambda, const CharacterTable& table,
                        PairSupportCache& cache, unsigned threads = 1);

/// [c(χ_λ), c(χ_λ^2), ..., c(χ_λ^{k_max})].
std::vector<SupportSet> power_support_sequence(const Partition& lambda, unsigned k_max,
                                               const CharacterTable& table, PairSupportCache& cache);

}  // namespace symcover
