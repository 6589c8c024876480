#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "symcover/class_algebra.hpp"
#include "symcover/error.hpp"
#include "symcover/kronecker_support.hpp"

using namespace symcover;

namespace {

struct Fixture {
  explicit Fixture(unsigned n) : table(compute_table(n)), cache(table) {}
  CharacterTable table;
  PairSupportCache cache;
};

SupportSet set_of(unsigned n, std::vector<Partition> members) {
  return SupportSet::of(PartitionIndex::of(n), members);
}

}  // namespace

TEST_CASE("SupportSet basics") {
  auto idx = PartitionIndex::of(4);
  SupportSet s(idx);
  CHECK(s.count() == 0);
  s.insert(Partition{2, 2});
  CHECK(s.contains(Partition{2, 2}));
  CHECK_FALSE(s.contains(Partition{4}));
  CHECK(s.members() == std::vector<Partition>{Partition{2, 2}});
  CHECK(s.missing().size() == 4);
  CHECK(s.is_subset_of(SupportSet::full(idx)));
  CHECK(SupportSet::full(idx).is_full());
  s |= set_of(4, {Partition{4}});
  CHECK(s.members() == std::vector<Partition>{Partition{4}, Partition{2, 2}});
  CHECK_THROWS_AS(s.insert(Partition{3}), InvalidArgument);
}

TEST_CASE("pair supports on small groups") {
  Fixture f(3);
  const Partition trivial{3}, standard{2, 1}, sign{1, 1, 1};
  CHECK(pair_support(trivial, standard, f.table, f.cache) == set_of(3, {standard}));
  CHECK(pair_support(sign, standard, f.table, f.cache) == set_of(3, {standard}));
  CHECK(pair_support(sign, sign, f.table, f.cache) == set_of(3, {trivial}));
  CHECK(pair_support(standard, standard, f.table, f.cache).is_full());

  Fixture g(4);
  CHECK_THROWS_AS(pair_support(trivial, standard, g.table, f.cache), InvalidArgument);
}

TEST_CASE("multiplying by the trivial character is the identity") {
  for (unsigned n = 1; n <= 9; ++n) {
    Fixture f(n);
    for (const auto& lambda : f.table.partitions()) {
      REQUIRE(pair_support(Partition::row(n), lambda, f.table, f.cache) == set_of(n, {lambda}));
    }
  }
}

TEST_CASE("pair supports match Kronecker coefficients from an independent table") {
  for (unsigned n = 2; n <= 7; ++n) {
    Fixture f(n);
    const auto& parts = f.table.partitions();
    const auto sizes = oracle::class_sizes_by_enumeration(n);
    std::vector<std::vector<std::int64_t>> chi(parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r) {
      for (const auto& t : parts) chi[r].push_back(oracle::jacobi_trudi_character(parts[r], t));
    }
    std::int64_t order = 0;
    for (const auto& [t, s] : sizes) order += static_cast<std::int64_t>(s);
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = a; b < parts.size(); ++b) {
        const SupportSet got = f.cache.get(a, b);
        for (std::size_t c = 0; c < parts.size(); ++c) {
          std::int64_t sum = 0;
          for (std::size_t col = 0; col < parts.size(); ++col) {
            sum += static_cast<std::int64_t>(sizes.at(parts[col])) * chi[a][col] * chi[b][col] * chi[c][col];
          }
          REQUIRE(sum % order == 0);
          REQUIRE(got.contains_index(c) == (sum != 0));
        }
      }
    }
  }
}

TEST_CASE("the pair cache is symmetric and shared") {
  Fixture f(6);
  const std::size_t a = f.table.index_of(Partition{4, 2});
  const std::size_t b = f.table.index_of(Partition{3, 1, 1, 1});
  CHECK(f.cache.get(a, b) == f.cache.get(b, a));
  CHECK(f.cache.size() == 1);
}

TEST_CASE("concurrent cache lookups agree with sequential ones") {
  Fixture shared(8);
  Fixture reference(8);
  const std::size_t p = shared.table.size();
  std::vector<std::jthread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) (void)shared.cache.get(i, j);
    });
  }
  workers.clear();
  CHECK(shared.cache.size() == p * (p + 1) / 2);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) REQUIRE(shared.cache.get(i, j) == reference.cache.get(i, j));
}

TEST_CASE("support_step") {
  Fixture f(5);
  const auto idx = f.table.shared_index();
  const Partition hook{4, 1};
  CHECK(support_step(set_of(5, {Partition{5}}), hook, f.table, f.cache) == set_of(5, {hook}));
  CHECK(support_step(SupportSet::full(idx), hook, f.table, f.cache).is_full());
  CHECK(support_step(SupportSet::full(idx), hook, f.table, f.cache, 4).is_full());
  CHECK(support_step(SupportSet(idx), hook, f.table, f.cache).count() == 0);
}

TEST_CASE("power support sequence of (4,1)") {
  Fixture f(5);
  const auto seq = power_support_sequence(Partition{4, 1}, 4, f.table, f.cache);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0] == set_of(5, {Partition{4, 1}}));
  CHECK(seq[2].missing() == std::vector<Partition>{Partition{1, 1, 1, 1, 1}});
  CHECK(seq[3].is_full());
}

TEST_CASE("(2,2) has supports that settle without filling S_4") {
  Fixture f(4);
  const auto seq = power_support_sequence(Partition{2, 2}, 8, f.table, f.cache);
  for (unsigned k = 1; k <= 8; ++k) {
    REQUIRE_FALSE(seq[k - 1].is_full());
    REQUIRE(seq[k - 1].members() == power_exact(Partition{2, 2}, k, f.table).support());
  }
  CHECK(seq[0] == set_of(4, {Partition{2, 2}}));
  CHECK(seq[1] == set_of(4, {Partition{4}, Partition{2, 2}, Partition{1, 1, 1, 1}}));
  for (unsigned k = 3; k <= 8; ++k) REQUIRE(seq[k - 1] == seq[1]);
}

TEST_CASE("support iteration agrees with exact powers") {
  for (unsigned n = 1; n <= 8; ++n) {
    Fixture f(n);
    for (const auto& lambda : f.table.partitions()) {
      const unsigned k_max = std::max(1u, n - 1);
      const auto seq = power_support_sequence(lambda, k_max, f.table, f.cache);
      for (unsigned k = 1; k <= k_max; ++k) {
        REQUIRE(seq[k - 1].members() == power_exact(lambda, k, f.table).support());
      }
    }
  }
}
