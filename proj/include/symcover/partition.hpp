#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace symcover {

/// An integer partition stored as its nonzero parts in weakly decreasing
/// order. The empty partition is the unique partition of 0.
///
/// Comparison is lexicographic on the parts; for partitions of the same
/// size the canonical order used throughout is *descending* lexicographic,
/// see CanonicalOrder.
class Partition {
 public:
  using Part = std::uint32_t;

  /// Largest size accepted by any constructor.
  static constexpr std::uint64_t kMaxSize = 10000;

  Partition() = default;

  /// Accepts weakly decreasing non-negative parts; trailing zeros are
  /// dropped. Throws InvalidArgument on increasing parts, a zero followed by
  /// a positive part, or a total above kMaxSize.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts);

  static Partition row(Part n);
  static Partition column(Part n);

  /// Parses "6,2,2"; the empty string is the empty partition. Rejects
  /// zeros, increasing order, signs, whitespace and non-digits.
  static Partition parse(std::string_view text);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  /// λ_i with 0-based i; zero past the last part.
  Part operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const noexcept { return parts_.size(); }
  Part size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
  Part size_ = 0;
};

/// (n) first, (1^n) last.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// All partitions of n in canonical order.
std::vector<Partition> partitions_of(unsigned n);

/// Number of partitions of n via the pentagonal-number recurrence.
std::uint64_t partition_count(unsigned n);

Partition conjugate(const Partition& lambda);
Partition add(const Partition& lambda, const Partition& mu);
Partition add_conj(const Partition& lambda, const Partition& mu);

/// |λ \ μ|: boxes of λ outside the diagram of μ.
std::uint64_t skew_outside_size(const Partition& lambda, const Partition& mu);

bool is_rectangle(const Partition& lambda);

/// Number of i with λ_i > λ_{i+1} (λ_{ℓ+1} = 0), i.e. removable corners.
std::size_t corner_count(const Partition& lambda);

/// Canonical list of the partitions of one n together with a reverse lookup.
/// Instances are shared; use PartitionIndex::of.
class PartitionIndex {
 public:
  static std::shared_ptr<const PartitionIndex> of(unsigned n);

  explicit PartitionIndex(unsigned n);

  unsigned n() const noexcept { return n_; }
  std::size_t size() const noexcept { return list_.size(); }
  const std::vector<Partition>& partitions() const noexcept { return list_; }
  const Partition& operator[](std::size_t i) const { return list_[i]; }

  /// Throws InvalidArgument if lambda is not a partition of n.
  std::size_t index_of(const Partition& lambda) const;

 private:
  struct Hash {
    std::size_t operator()(const Partition& p) const noexcept;
  };
  unsigned n_;
  std::vector<Partition> list_;
  std::unordered_map<Partition, std::size_t, Hash> lookup_;
};

}  // namespace symcover
