#include "symcover/kronecker_support.hpp"

#include <shared_mutex>
#include <unordered_map>

#include "symcover/error.hpp"
#include "symcover/parallel.hpp"

namespace symcover {

SupportSet::SupportSet(std::shared_ptr<const PartitionIndex> index)
    : index_(std::move(index)), bits_(index_->size()) {}

SupportSet::SupportSet(std::shared_ptr<const PartitionIndex> index, Bits bits)
    : index_(std::move(index)), bits_(std::move(bits)) {
  if (bits_.size() != index_->size()) throw InvalidArgument("support bitset has the wrong width");
}

SupportSet SupportSet::full(std::shared_ptr<const PartitionIndex> index) {
  SupportSet s(std::move(index));
  s.bits_.set();
  return s;
}

SupportSet SupportSet::of(std::shared_ptr<const PartitionIndex> index, const std::vector<Partition>& members) {
  SupportSet s(std::move(index));
  for (const Partition& p : members) s.insert(p);
  return s;
}

bool SupportSet::contains(const Partition& lambda) const {
  if (lambda.size() != n()) return false;
  return bits_.test(index_->index_of(lambda));
}

void SupportSet::insert(const Partition& lambda) { bits_.set(index_->index_of(lambda)); }

std::vector<Partition> SupportSet::members() const {
  std::vector<Partition> out;
  for (std::size_t i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back((*index_)[i]);
  return out;
}

std::vector<Partition> SupportSet::missing() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_.test(i)) out.push_back((*index_)[i]);
  }
  return out;
}

SupportSet& SupportSet::operator|=(const SupportSet& other) {
  if (other.n() != n()) throw InvalidArgument("union of supports for different n");
  bits_ |= other.bits_;
  return *this;
}

struct PairSupportCache::Store {
  mutable std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, SupportSet> entries;
};

PairSupportCache::PairSupportCache(const CharacterTable& table) : table_(table), store_(std::make_unique<Store>()) {}
PairSupportCache::~PairSupportCache() = default;

std::size_t PairSupportCache::size() const {
  std::shared_lock lock(store_->mutex);
  return store_->entries.size();
}

const SupportSet& PairSupportCache::get(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const std::uint64_t key = static_cast<std::uint64_t>(i) * table_.size() + j;
  {
    std::shared_lock lock(store_->mutex);
    const auto it = store_->entries.find(key);
    if (it != store_->entries.end()) return it->second;
  }
  SupportSet computed = compute(i, j);
  std::unique_lock lock(store_->mutex);
  return store_->entries.try_emplace(key, std::move(computed)).first->second;
}

// Multiplicity of χ_ν in χ_iχ_j is (1/n!) Σ_c |c| χ_i(c) χ_j(c) χ_ν(c).
// By Cauchy–Schwarz Σ_c |c||χ_iχ_j| <= n!, so the 128-bit path cannot
// overflow for n <= 20; the checked builtins guard anything larger.
SupportSet PairSupportCache::compute(std::size_t i, std::size_t j) const {
  const CharacterTable& t = table_;
  const std::size_t p = t.size();
  SupportSet out(t.shared_index());

  if (t.has_small_values()) {
    Int128 order = 0;
    for (std::size_t c = 0; c < p; ++c) order += t.small_class_size(c);
    std::vector<Int128> weight(p);
    bool ok = true;
    for (std::size_t c = 0; c < p && ok; ++c) {
      Int128 w;
      ok = !__builtin_mul_overflow(static_cast<Int128>(t.small_value(i, c)), static_cast<Int128>(t.small_value(j, c)), &w) &&
           !__builtin_mul_overflow(w, static_cast<Int128>(t.small_class_size(c)), &w);
      weight[c] = w;
    }
    for (std::size_t nu = 0; nu < p && ok; ++nu) {
      Int128 sum = 0;
      for (std::size_t c = 0; c < p && ok; ++c) {
        Int128 term;
        ok = !__builtin_mul_overflow(weight[c], static_cast<Int128>(t.small_value(nu, c)), &term) &&
             !__builtin_add_overflow(sum, term, &sum);
      }
      if (!ok) break;
      if (sum % order != 0) throw NotACharacter("non-integral Kronecker coefficient; table is corrupt");
      if (sum / order > 0) out.insert_index(nu);
    }
    if (ok) return out;
    out = SupportSet(t.shared_index());
  }

  std::vector<BigInt> weight(p);
  for (std::size_t c = 0; c < p; ++c) weight[c] = t.class_sizes()[c] * t.value(i, c) * t.value(j, c);
  for (std::size_t nu = 0; nu < p; ++nu) {
    BigInt sum = 0;
    for (std::size_t c = 0; c < p; ++c) sum += weight[c] * t.value(nu, c);
    BigInt q, r;
    boost::multiprecision::divide_qr(sum, t.group_order(), q, r);
    if (r != 0) throw NotACharacter("non-integral Kronecker coefficient; table is corrupt");
    if (q > 0) out.insert_index(nu);
  }
  return out;
}

namespace {

void require_table(const CharacterTable& table, const PairSupportCache& cache) {
  if (&cache.table() != &table) throw InvalidArgument("pair-support cache belongs to a different table");
}

}  // namespace

SupportSet pair_support(const Partition& lambda, const Partition& mu, const CharacterTable& table,
                        PairSupportCache& cache) {
  require_table(table, cache);
  return cache.get(table.index_of(lambda), table.index_of(mu));
}

SupportSet support_step(const SupportSet& s, const Partition& lambda, const CharacterTable& table,
                        PairSupportCache& cache, unsigned threads) {
  require_table(table, cache);
  if (s.n() != table.n()) throw InvalidArgument("support set and table disagree on n");
  const std::size_t li = table.index_of(lambda);
  std::vector<std::size_t> members;
  for (std::size_t i = s.bits().find_first(); i != SupportSet::Bits::npos; i = s.bits().find_next(i)) {
    members.push_back(i);
  }
  if (threads != 1 && members.size() > 1) {
    parallel_for(members.size(), threads, [&](std::size_t m) { cache.get(members[m], li); });
  }
  SupportSet out(table.shared_index());
  for (std::size_t m : members) out |= cache.get(m, li);
  return out;
}

std::vector<SupportSet> power_support_sequence(const Partition& lambda, unsigned k_max,
                                               const CharacterTable& table, PairSupportCache& cache) {
  std::vector<SupportSet> out;
  if (k_max == 0) return out;
  out.push_back(SupportSet::of(table.shared_index(), {lambda}));
  while (out.size() < k_max) out.push_back(support_step(out.back(), lambda, table, cache));
  return out;
}

}  // namespace symcover
