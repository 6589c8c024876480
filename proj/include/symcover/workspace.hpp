#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "symcover/kronecker_support.hpp"
#include "symcover/sn_characters.hpp"

namespace symcover {

/// Character tables and pair-support caches for several n, built on first
/// use and kept for the lifetime of the workspace.
class Workspace {
 public:
  explicit Workspace(TableCache cache = {}, TableOptions options = {});
  ~Workspace();

  const CharacterTable& table(unsigned n);
  PairSupportCache& pairs(unsigned n);

  unsigned threads() const noexcept { return options_.threads; }
  const TableOptions& options() const noexcept { return options_; }
  const TableCache& cache() const noexcept { return cache_; }

 private:
  struct Entry {
    std::unique_ptr<CharacterTable> table;
    std::unique_ptr<PairSupportCache> pairs;
  };
  Entry& entry(unsigned n);

  TableCache cache_;
  TableOptions options_;
  std::mutex mutex_;
  std::map<unsigned, Entry> entries_;
};

}  // namespace symcover
