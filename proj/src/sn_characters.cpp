#include "symcover/sn_characters.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include <openssl/evp.h>

#include "symcover/error.hpp"
#include "symcover/parallel.hpp"

namespace symcover {

namespace {

void require_same_size(const Partition& lambda, const CycleType& t) {
  if (lambda.size() != t.size()) {
    throw InvalidArgument("size mismatch: (" + lambda.to_string() + ") vs cycle type (" + t.to_string() + ")");
  }
}

bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

// Σ_c w[c] a[c] b[c] in 128-bit arithmetic; false on overflow.
bool checked_weighted_dot(const CharacterTable& t, std::size_t ra, std::size_t rb, bool rows, Int128& out) {
  Int128 sum = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    Int128 term;
    if (rows) {
      if (__builtin_mul_overflow(static_cast<Int128>(t.small_value(ra, c)), static_cast<Int128>(t.small_value(rb, c)), &term)) return false;
      if (__builtin_mul_overflow(term, static_cast<Int128>(t.small_class_size(c)), &term)) return false;
    } else {
      if (__builtin_mul_overflow(static_cast<Int128>(t.small_value(c, ra)), static_cast<Int128>(t.small_value(c, rb)), &term)) return false;
    }
    if (__builtin_add_overflow(sum, term, &sum)) return false;
  }
  out = sum;
  return true;
}

BigInt weighted_dot(const CharacterTable& t, std::size_t ra, std::size_t rb, bool rows) {
  if (t.has_small_values()) {
    Int128 small;
    if (checked_weighted_dot(t, ra, rb, rows, small)) {
      BigInt out = static_cast<std::int64_t>(small >> 64);
      out <<= 64;
      out += static_cast<std::uint64_t>(small);
      return out;
    }
  }
  BigInt sum = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (rows) {
      sum += t.class_sizes()[c] * t.value(ra, c) * t.value(rb, c);
    } else {
      sum += t.value(c, ra) * t.value(c, rb);
    }
  }
  return sum;
}

}  // namespace

BigInt centralizer_order(const CycleType& t) {
  BigInt z = 1;
  const auto& parts = t.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::size_t m = j - i;
    for (std::size_t r = 0; r < m; ++r) z *= parts[i];
    z *= factorial(static_cast<unsigned>(m));
    i = j;
  }
  return z;
}

BigInt class_size(unsigned n, const CycleType& t) {
  if (t.size() != n) {
    throw InvalidArgument("cycle type (" + t.to_string() + ") is not a partition of " + std::to_string(n));
  }
  return factorial(n) / centralizer_order(t);
}

int sign_of(const CycleType& t) { return ((t.size() - t.length()) % 2 == 0) ? 1 : -1; }

unsigned fixed_points(const CycleType& t) {
  return static_cast<unsigned>(std::count(t.parts().begin(), t.parts().end(), 1u));
}

struct MurnaghanNakayama::Memo {
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
      std::size_t h = 0xcbf29ce484222325ull;
      for (std::uint32_t x : key) h = (h ^ x) * 0x100000001b3ull;
      return h;
    }
  };
  mutable std::shared_mutex mutex;
  std::unordered_map<std::vector<std::uint32_t>, BigInt, KeyHash> values;

  BigInt eval(const std::vector<std::uint32_t>& shape, std::span<const std::uint32_t> cycles);
};

// Rim hooks of length r correspond to moving one bead of the beta-set
// β_i = λ_i + (ℓ-1-i) down by r onto an empty position; the hook's height
// is the number of beads jumped over.
BigInt MurnaghanNakayama::Memo::eval(const std::vector<std::uint32_t>& shape,
                                     std::span<const std::uint32_t> cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() == 1) return 1;

  std::vector<std::uint32_t> key(shape);
  key.push_back(0);
  key.insert(key.end(), cycles.begin(), cycles.end());
  {
    std::shared_lock lock(mutex);
    const auto it = values.find(key);
    if (it != values.end()) return it->second;
  }

  const std::uint32_t r = cycles.front();
  const std::size_t len = shape.size();
  std::vector<std::uint32_t> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = shape[i] + static_cast<std::uint32_t>(len - 1 - i);

  BigInt total = 0;
  std::vector<std::uint32_t> moved(len);
  std::vector<std::uint32_t> next;
  for (std::size_t i = 0; i < len; ++i) {
    if (beta[i] < r) continue;
    const std::uint32_t target = beta[i] - r;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    std::size_t jumped = 0;
    for (std::uint32_t b : beta) {
      if (b > target && b < beta[i]) ++jumped;
    }
    moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    next.clear();
    for (std::size_t k = 0; k < len; ++k) {
      const std::uint32_t part = moved[k] - static_cast<std::uint32_t>(len - 1 - k);
      if (part == 0) break;
      next.push_back(part);
    }
    BigInt sub = eval(next, cycles.subspan(1));
    if (jumped % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  }

  std::unique_lock lock(mutex);
  values.emplace(std::move(key), total);
  return total;
}

MurnaghanNakayama::MurnaghanNakayama() : memo_(std::make_unique<Memo>()) {}
MurnaghanNakayama::~MurnaghanNakayama() = default;

BigInt MurnaghanNakayama::value(const Partition& lambda, const CycleType& t) {
  require_same_size(lambda, t);
  return memo_->eval(lambda.parts(), t.parts());
}

std::size_t MurnaghanNakayama::memo_size() const {
  std::shared_lock lock(memo_->mutex);
  return memo_->values.size();
}

BigInt mn_value(const Partition& lambda, const CycleType& t) {
  static MurnaghanNakayama shared;
  return shared.value(lambda, t);
}

CharacterTable::CharacterTable(unsigned n, std::vector<BigInt> class_sizes, std::vector<BigInt> values)
    : n_(n), index_(PartitionIndex::of(n)), class_sizes_(std::move(class_sizes)), values_(std::move(values)) {
  const std::size_t p = index_->size();
  if (class_sizes_.size() != p || values_.size() != p * p) {
    throw TableError("character table for n=" + std::to_string(n) + " has the wrong shape");
  }
  order_ = 0;
  for (const BigInt& s : class_sizes_) order_ += s;

  const bool small = std::all_of(values_.begin(), values_.end(), fits_int64) &&
                     std::all_of(class_sizes_.begin(), class_sizes_.end(), fits_int64);
  if (small) {
    small_values_.reserve(values_.size());
    for (const BigInt& v : values_) small_values_.push_back(static_cast<std::int64_t>(v));
    for (const BigInt& s : class_sizes_) small_class_sizes_.push_back(static_cast<std::int64_t>(s));
  }
}

void CharacterTable::verify() const {
  const BigInt n_fact = factorial(n_);
  if (order_ != n_fact) throw TableError("class sizes of S_" + std::to_string(n_) + " do not sum to n!");
  const std::size_t p = size();
  for (std::size_t c = 0; c < p; ++c) {
    if (class_sizes_[c] != class_size(n_, partitions()[c])) {
      throw TableError("wrong class size for cycle type (" + partitions()[c].to_string() + ")");
    }
  }
  for (std::size_t r = 0; r < p; ++r) {
    if (degree(r) <= 0) throw TableError("non-positive degree for (" + partitions()[r].to_string() + ")");
  }
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a; b < p; ++b) {
      const BigInt expected = (a == b) ? n_fact : BigInt(0);
      if (weighted_dot(*this, a, b, true) != expected) {
        throw TableError("row orthogonality fails for (" + partitions()[a].to_string() + "), (" +
                         partitions()[b].to_string() + ")");
      }
      const BigInt col_expected = (a == b) ? BigInt(n_fact / class_sizes_[a]) : BigInt(0);
      if (weighted_dot(*this, a, b, false) != col_expected) {
        throw TableError("column orthogonality fails for (" + partitions()[a].to_string() + "), (" +
                         partitions()[b].to_string() + ")");
      }
    }
  }
}

CharacterTable compute_table(unsigned n, unsigned threads) {
  const auto index = PartitionIndex::of(n);
  const std::size_t p = index->size();
  std::vector<BigInt> sizes(p);
  for (std::size_t c = 0; c < p; ++c) sizes[c] = class_size(n, (*index)[c]);

  MurnaghanNakayama mn;
  std::vector<BigInt> values(p * p);
  parallel_for(p, threads, [&](std::size_t r) {
    for (std::size_t c = 0; c < p; ++c) values[r * p + c] = mn.value((*index)[r], (*index)[c]);
  });

  CharacterTable table(n, std::move(sizes), std::move(values));
  table.verify();
  return table;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<unsigned>(digest[i]);
  return out.str();
}

std::string serialize_table(const CharacterTable& table) {
  std::ostringstream body;
  body << "SYMCOVER-TABLE v1 n=" << table.n() << " p=" << table.size() << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) body << (i ? " " : "") << table.partitions()[i].to_string();
  body << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) body << (i ? " " : "") << table.class_sizes()[i];
  body << '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t c = 0; c < table.size(); ++c) body << (c ? " " : "") << table.value(r, c);
    body << '\n';
  }
  std::string text = body.str();
  text += "SHA256:" + sha256_hex(text) + "\n";
  return text;
}

CharacterTable deserialize_table(const std::string& text) {
  const std::size_t sha_pos = text.rfind("SHA256:");
  if (sha_pos == std::string::npos || (sha_pos > 0 && text[sha_pos - 1] != '\n')) {
    throw CacheError("table file has no checksum line");
  }
  std::string recorded = text.substr(sha_pos + 7);
  if (!recorded.empty() && recorded.back() == '\n') recorded.pop_back();
  if (recorded != sha256_hex(std::string_view(text).substr(0, sha_pos))) {
    throw CacheError("table file checksum mismatch");
  }

  std::istringstream in(text.substr(0, sha_pos));
  std::string line;
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line)) throw CacheError("table file is truncated");
    return line;
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream words(s);
    for (std::string w; words >> w;) out.push_back(w);
    return out;
  };

  unsigned n = 0;
  std::size_t p = 0;
  {
    const std::string header = next_line();
    std::istringstream h(header);
    std::string magic, version, n_field, p_field, extra;
    h >> magic >> version >> n_field >> p_field;
    if (magic != "SYMCOVER-TABLE" || version != "v1" || n_field.rfind("n=", 0) != 0 || p_field.rfind("p=", 0) != 0 ||
        (h >> extra)) {
      throw CacheError("unrecognized table header '" + header + "'");
    }
    try {
      n = static_cast<unsigned>(std::stoul(n_field.substr(2)));
      p = std::stoul(p_field.substr(2));
    } catch (const std::exception&) {
      throw CacheError("unrecognized table header '" + header + "'");
    }
  }
  const auto index = PartitionIndex::of(n);
  if (p != index->size()) throw CacheError("table header has wrong p(n)");

  const auto names = split(next_line());
  if (names.size() != p) throw CacheError("partition line has wrong length");
  for (std::size_t i = 0; i < p; ++i) {
    if (names[i] != (*index)[i].to_string()) throw CacheError("partition line is not in canonical order");
  }

  auto parse_row = [&](const std::string& s) {
    const auto words = split(s);
    if (words.size() != p) throw CacheError("table row has wrong length");
    std::vector<BigInt> row;
    row.reserve(p);
    try {
      for (const auto& w : words) row.push_back(parse_bigint(w));
    } catch (const InvalidArgument& e) {
      throw CacheError(e.what());
    }
    return row;
  };

  std::vector<BigInt> sizes = parse_row(next_line());
  std::vector<BigInt> values;
  values.reserve(p * p);
  for (std::size_t r = 0; r < p; ++r) {
    auto row = parse_row(next_line());
    values.insert(values.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
  }
  if (std::getline(in, line)) throw CacheError("trailing data in table file");

  try {
    CharacterTable table(n, std::move(sizes), std::move(values));
    table.verify();
    return table;
  } catch (const TableError& e) {
    throw CacheError(std::string("cached table is invalid: ") + e.what());
  }
}

TableCache::TableCache(std::filesystem::path dir, WarningSink warn) : dir_(std::move(dir)), warn_(std::move(warn)) {}

std::filesystem::path TableCache::file_for(unsigned n) const { return dir_ / "sn" / (std::to_string(n) + ".tbl"); }

void TableCache::warn(const std::string& message) const {
  if (warn_) {
    warn_(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

std::optional<CharacterTable> TableCache::load(unsigned n) const {
  if (!enabled()) return std::nullopt;
  const auto file = file_for(n);
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) return std::nullopt;
  std::ifstream in(file, std::ios::binary);
  if (!in) throw CacheError("cannot read " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CharacterTable table = deserialize_table(buffer.str());
  if (table.n() != n) throw CacheError(file.string() + " holds a table for a different n");
  return table;
}

bool TableCache::store(const CharacterTable& table) const {
  if (!enabled()) return false;
  const auto file = file_for(table.n());
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) out << serialize_table(table);
    if (!out) {
      warn("cannot write cache file " + tmp.string());
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    warn("cannot write cache file " + file.string() + ": " + ec.message());
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

CharacterTable build_table(unsigned n, const TableCache& cache, const TableOptions& options) {
  if (n < 1 || n > options.max_n) {
    throw InvalidArgument("n=" + std::to_string(n) + " is outside [1, " + std::to_string(options.max_n) + "]");
  }
  bool corrupt = false;
  try {
    if (auto cached = cache.load(n)) return std::move(*cached);
  } catch (const CacheError& e) {
    cache.warn(std::string(e.what()) + "; recomputing " + cache.file_for(n).string());
    corrupt = true;
  }
  CharacterTable table = compute_table(n, options.threads);
  if (cache.enabled() && !cache.store(table) && corrupt) {
    throw CacheError("corrupt cache file " + cache.file_for(n).string() + " could not be overwritten");
  }
  return table;
}

}  // namespace symcover
