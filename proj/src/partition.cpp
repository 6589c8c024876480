#include "symcover/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

#include "symcover/error.hpp"

namespace symcover {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidArgument("partition has a zero part before a positive one");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    total += parts_[i];
    if (total > kMaxSize) throw InvalidArgument("partition size exceeds " + std::to_string(kMaxSize));
  }
  size_ = static_cast<Part>(total);
}

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

Partition Partition::row(Part n) { return Partition(std::vector<Part>{n}); }

Partition Partition::column(Part n) { return Partition(std::vector<Part>(n, 1)); }

Partition Partition::parse(std::string_view text) {
  std::vector<Part> parts;
  if (text.empty()) return {};
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("malformed partition '" + std::string(text) + "'");
    }
    Part value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("partition part out of range in '" + std::string(text) + "'");
    }
    if (value == 0) throw InvalidArgument("partition '" + std::string(text) + "' contains a zero part");
    if (!parts.empty() && value > parts.back()) {
      throw InvalidArgument("partition '" + std::string(text) + "' is not weakly decreasing");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(unsigned n) {
  if (n > Partition::kMaxSize) throw InvalidArgument("n exceeds the partition size limit");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Partition::Part> a{n};
  while (true) {
    out.emplace_back(a);
    Partition::Part rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) break;
    --a.back();
    ++rem;
    const Partition::Part cap = a.back();
    while (rem > cap) {
      a.push_back(cap);
      rem -= cap;
    }
    a.push_back(rem);
  }
  return out;
}

std::uint64_t partition_count(unsigned n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    std::int64_t sum = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2) ? 1 : -1;
      sum += sign * static_cast<std::int64_t>(p[m - g1]);
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g2 <= m) sum += sign * static_cast<std::int64_t>(p[m - g2]);
    }
    p[m] = static_cast<std::uint64_t>(sum);
  }
  return p[n];
}

Partition conjugate(const Partition& lambda) {
  std::vector<Partition::Part> out(lambda[0], 0);
  for (Partition::Part part : lambda.parts()) {
    for (Partition::Part i = 0; i < part; ++i) ++out[i];
  }
  return Partition(std::move(out));
}

Partition add(const Partition& lambda, const Partition& mu) {
  std::vector<Partition::Part> out(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lambda[i] + mu[i];
  return Partition(std::move(out));
}

Partition add_conj(const Partition& lambda, const Partition& mu) {
  return conjugate(add(conjugate(lambda), conjugate(mu)));
}

std::uint64_t skew_outside_size(const Partition& lambda, const Partition& mu) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (lambda[i] > mu[i]) total += lambda[i] - mu[i];
  }
  return total;
}

bool is_rectangle(const Partition& lambda) {
  const auto& p = lambda.parts();
  return std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) == p.end();
}

std::size_t corner_count(const Partition& lambda) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (lambda[i] > lambda[i + 1]) ++count;
  }
  return count;
}

std::size_t PartitionIndex::Hash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Partition::Part part : p.parts()) h = (h ^ part) * 0x100000001b3ull;
  return h;
}

PartitionIndex::PartitionIndex(unsigned n) : n_(n), list_(partitions_of(n)) {
  lookup_.reserve(list_.size());
  for (std::size_t i = 0; i < list_.size(); ++i) lookup_.emplace(list_[i], i);
}

std::shared_ptr<const PartitionIndex> PartitionIndex::of(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const PartitionIndex>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[n];
  if (!slot) slot = std::make_shared<const PartitionIndex>(n);
  return slot;
}

std::size_t PartitionIndex::index_of(const Partition& lambda) const {
  const auto it = lookup_.find(lambda);
  if (it == lookup_.end()) {
    throw InvalidArgument("(" + lambda.to_string() + ") is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

}  // namespace symcover
