#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcover/bigint.hpp"
#include "symcover/partition.hpp"

namespace symcover {

/// Cycle lengths of a permutation; names a conjugacy class of S_n.
using CycleType = Partition;

/// z_t = Π i^{m_i} m_i!.
BigInt centralizer_order(const CycleType& t);

/// n!/z_t. Throws InvalidArgument when |t| != n.
BigInt class_size(unsigned n, const CycleType& t);

/// (-1)^(n - ℓ(t)).
int sign_of(const CycleType& t);

/// Number of 1-cycles in t.
unsigned fixed_points(const CycleType& t);

/// Murnaghan–Nakayama evaluator with a shared memo keyed on
/// (remaining shape, remaining cycles). Cycles are consumed largest first.
/// Safe to call from several threads; concurrent duplicate work is allowed
/// and always agrees.
class MurnaghanNakayama {
 public:
  MurnaghanNakayama();
  ~MurnaghanNakayama();
  MurnaghanNakayama(const MurnaghanNakayama&) = delete;
  MurnaghanNakayama& operator=(const MurnaghanNakayama&) = delete;

  BigInt value(const Partition& lambda, const CycleType& t);
  std::size_t memo_size() const;

 private:
  struct Memo;
  std::unique_ptr<Memo> memo_;
};

/// χ_λ(t) with a process-wide memo. Throws InvalidArgument on size mismatch.
BigInt mn_value(const Partition& lambda, const CycleType& t);

/// Character table of S_n. Rows are irreducibles and columns are cycle
/// types, both in canonical order, so the degree column is the last one.
class CharacterTable {
 public:
  CharacterTable(unsigned n, std::vector<BigInt> class_sizes, std::vector<BigInt> values);

  unsigned n() const noexcept { return n_; }
  std::size_t size() const noexcept { return index_->size(); }
  const PartitionIndex& index() const noexcept { return *index_; }
  std::shared_ptr<const PartitionIndex> shared_index() const noexcept { return index_; }
  const std::vector<Partition>& partitions() const noexcept { return index_->partitions(); }
  std::size_t index_of(const Partition& lambda) const { return index_->index_of(lambda); }

  const BigInt& value(std::size_t row, std::size_t col) const { return values_[row * size() + col]; }
  std::span<const BigInt> row(std::size_t r) const { return {values_.data() + r * size(), size()}; }
  const std::vector<BigInt>& values() const noexcept { return values_; }
  const std::vector<BigInt>& class_sizes() const noexcept { return class_sizes_; }
  const BigInt& group_order() const noexcept { return order_; }

  std::size_t identity_column() const noexcept { return size() - 1; }
  const BigInt& degree(std::size_t row) const { return value(row, identity_column()); }

  /// Entries as machine integers, available whenever every entry fits
  /// (always the case for n <= 20).
  bool has_small_values() const noexcept { return !small_values_.empty(); }
  std::int64_t small_value(std::size_t row, std::size_t col) const {
    return small_values_[row * size() + col];
  }
  std::int64_t small_class_size(std::size_t col) const { return small_class_sizes_[col]; }

  /// Throws TableError naming the first failing pair if row or column
  /// orthogonality, or Σ class sizes = n!, fails.
  void verify() const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.n_ == b.n_ && a.class_sizes_ == b.class_sizes_ && a.values_ == b.values_;
  }

 private:
  unsigned n_;
  std::shared_ptr<const PartitionIndex> index_;
  std::vector<BigInt> class_sizes_;
  std::vector<BigInt> values_;
  BigInt order_;
  std::vector<std::int64_t> small_values_;
  std::vector<std::int64_t> small_class_sizes_;
};

/// Computes the table from scratch (no cache) and verifies it.
CharacterTable compute_table(unsigned n, unsigned threads = 1);

/// Per-n on-disk cache under <dir>/sn/<n>.tbl. A default-constructed cache
/// is disabled and never touches the filesystem.
class TableCache {
 public:
  using WarningSink = std::function<void(const std::string&)>;

  TableCache() = default;
  explicit TableCache(std::filesystem::path dir, WarningSink warn = {});

  bool enabled() const noexcept { return !dir_.empty(); }
  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path file_for(unsigned n) const;

  /// nullopt if absent. Throws CacheError when present but unreadable or
  /// failing its checksum or orthogonality.
  std::optional<CharacterTable> load(unsigned n) const;

  /// Returns false (after a warning) when the file cannot be written.
  bool store(const CharacterTable& table) const;

  void warn(const std::string& message) const;

 private:
  std::filesystem::path dir_;
  WarningSink warn_;
};

struct TableOptions {
  unsigned max_n = 20;
  unsigned threads = 1;
};

/// Loads from the cache when a valid file exists; otherwise computes and
/// writes back. A corrupt file is recomputed and overwritten with a warning;
/// throws CacheError if that overwrite fails. Throws InvalidArgument when n
/// is outside [1, max_n].
CharacterTable build_table(unsigned n, const TableCache& cache, const TableOptions& options = {});

/// Text serialization used by the cache file, including the trailing
/// SHA256 line.
std::string serialize_table(const CharacterTable& table);
CharacterTable deserialize_table(const std::string& text);

std::string sha256_hex(std::string_view bytes);

}  // namespace symcover
