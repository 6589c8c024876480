#include "symcover/class_algebra.hpp"

#include "symcover/error.hpp"

namespace symcover {

ClassFunction::ClassFunction(unsigned n, std::vector<BigInt> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != PartitionIndex::of(n)->size()) {
    throw InvalidArgument("class function of S_" + std::to_string(n) + " needs p(n) values");
  }
}

void ClassFunction::require_same_n(const ClassFunction& other) const {
  if (other.n_ != n_) {
    throw InvalidArgument("class functions of S_" + std::to_string(n_) + " and S_" + std::to_string(other.n_));
  }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_n(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  require_same_n(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& other) {
  require_same_n(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

Decomposition::Decomposition(unsigned n, Map multiplicities) : n_(n), mult_(std::move(multiplicities)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->first.size() != n_) throw InvalidArgument("decomposition entry is not a partition of n");
    if (it->second < 0) throw NotACharacter("negative multiplicity for (" + it->first.to_string() + ")");
    it = (it->second == 0) ? mult_.erase(it) : std::next(it);
  }
}

BigInt Decomposition::multiplicity(const Partition& lambda) const {
  const auto it = mult_.find(lambda);
  return it == mult_.end() ? BigInt(0) : it->second;
}

std::vector<Partition> Decomposition::support() const {
  std::vector<Partition> out;
  out.reserve(mult_.size());
  for (const auto& [lambda, m] : mult_) out.push_back(lambda);
  return out;
}

ClassFunction Decomposition::reconstruct(const CharacterTable& table) const {
  std::vector<BigInt> values(table.size(), 0);
  for (const auto& [lambda, m] : mult_) {
    const auto row = table.row(table.index_of(lambda));
    for (std::size_t c = 0; c < values.size(); ++c) values[c] += m * row[c];
  }
  return ClassFunction(n_, std::move(values));
}

ClassFunction character(const CharacterTable& table, const Partition& lambda) {
  const auto row = table.row(table.index_of(lambda));
  return ClassFunction(table.n(), std::vector<BigInt>(row.begin(), row.end()));
}

ClassFunction trivial_character(unsigned n) {
  return ClassFunction(n, std::vector<BigInt>(PartitionIndex::of(n)->size(), 1));
}

ClassFunction regular_character(const CharacterTable& table) {
  std::vector<BigInt> values(table.size(), 0);
  values.back() = table.group_order();
  return ClassFunction(table.n(), std::move(values));
}

BigInt inner_product(const ClassFunction& f, const ClassFunction& g, const CharacterTable& table) {
  if (f.n() != table.n() || g.n() != table.n()) throw InvalidArgument("inner product across different n");
  BigInt sum = 0;
  for (std::size_t c = 0; c < f.size(); ++c) sum += table.class_sizes()[c] * f[c] * g[c];
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(sum, table.group_order(), quotient, remainder);
  if (remainder != 0) throw NotACharacter("inner product is not an integer; input is not a virtual character");
  return quotient;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction out = f;
  out *= g;
  return out;
}

Decomposition decompose(const ClassFunction& f, const CharacterTable& table) {
  Decomposition::Map mult;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const BigInt m = inner_product(f, character(table, table.partitions()[r]), table);
    if (m < 0) {
      throw NotACharacter("multiplicity " + m.str() + " of (" + table.partitions()[r].to_string() +
                          ") is negative; input is not a character");
    }
    if (m > 0) mult.emplace(table.partitions()[r], m);
  }
  return Decomposition(table.n(), std::move(mult));
}

ClassFunction theta(unsigned n, unsigned u) {
  if (u > n) throw InvalidArgument("theta requires 0 <= u <= n");
  const auto index = PartitionIndex::of(n);
  std::vector<BigInt> values;
  values.reserve(index->size());
  for (const Partition& t : index->partitions()) {
    const unsigned fix = fixed_points(t);
    BigInt v = 1;
    for (unsigned i = 0; i < u; ++i) v *= (fix >= i) ? fix - i : 0;
    values.push_back(v);
  }
  return ClassFunction(n, std::move(values));
}

Decomposition power_exact(const Partition& lambda, unsigned k, const CharacterTable& table) {
  if (k == 0) throw InvalidArgument("power exponent must be positive");
  const ClassFunction chi = character(table, lambda);
  ClassFunction power = chi;
  for (unsigned i = 1; i < k; ++i) power *= chi;
  return decompose(power, table);
}

}  // namespace symcover
