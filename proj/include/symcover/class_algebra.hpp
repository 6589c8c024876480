#pragma once

#include <map>
#include <vector>

#include "symcover/bigint.hpp"
#include "symcover/partition.hpp"
#include "symcover/sn_characters.hpp"

namespace symcover {

/// Integer-valued class function of S_n, indexed by cycle types in
/// canonical order.
class ClassFunction {
 public:
  ClassFunction(unsigned n, std::vector<BigInt> values);

  unsigned n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<BigInt>& values() const noexcept { return values_; }
  const BigInt& operator[](std::size_t i) const { return values_[i]; }
  /// Value at the identity, i.e. the degree for a character.
  const BigInt& degree() const { return values_.back(); }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const ClassFunction& other);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  void require_same_n(const ClassFunction& other) const;

  unsigned n_;
  std::vector<BigInt> values_;
};

/// Multiplicities of irreducibles; only positive entries are stored.
class Decomposition {
 public:
  using Map = std::map<Partition, BigInt, CanonicalOrder>;

  Decomposition(unsigned n, Map multiplicities);

  unsigned n() const noexcept { return n_; }
  const Map& multiplicities() const noexcept { return mult_; }
  /// Zero for partitions not in the support.
  BigInt multiplicity(const Partition& lambda) const;
  std::vector<Partition> support() const;

  /// Σ_λ m_λ χ_λ.
  ClassFunction reconstruct(const CharacterTable& table) const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  unsigned n_;
  Map mult_;
};

ClassFunction character(const CharacterTable& table, const Partition& lambda);
ClassFunction trivial_character(unsigned n);
ClassFunction regular_character(const CharacterTable& table);

/// (1/n!) Σ_c |c| f(c) g(c). Throws NotACharacter when the sum is not
/// divisible by n!, InvalidArgument on mismatched n.
BigInt inner_product(const ClassFunction& f, const ClassFunction& g, const CharacterTable& table);

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);

/// Throws NotACharacter on any negative multiplicity.
Decomposition decompose(const ClassFunction& f, const CharacterTable& table);

/// θ_{n,u}: permutation character on ordered u-tuples of distinct points,
/// t ↦ fix(t)(fix(t)-1)...(fix(t)-u+1). Throws InvalidArgument unless
/// 0 <= u <= n.
ClassFunction theta(unsigned n, unsigned u);

/// Exact decomposition of χ_λ^k.
Decomposition power_exact(const Partition& lambda, unsigned k, const CharacterTable& table);

}  // namespace symcover
