#include "symcover/workspace.hpp"

namespace symcover {

Workspace::Workspace(TableCache cache, TableOptions options) : cache_(std::move(cache)), options_(options) {}
Workspace::~Workspace() = default;

Workspace::Entry& Workspace::entry(unsigned n) {
  std::lock_guard lock(mutex_);
  Entry& e = entries_[n];
  if (!e.table) {
    e.table = std::make_unique<CharacterTable>(build_table(n, cache_, options_));
    e.pairs = std::make_unique<PairSupportCache>(*e.table);
  }
  return e;
}

const CharacterTable& Workspace::table(unsigned n) { return *entry(n).table; }

PairSupportCache& Workspace::pairs(unsigned n) { return *entry(n).pairs; }

}  // namespace symcover
