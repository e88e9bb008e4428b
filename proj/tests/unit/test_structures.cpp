#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"

using namespace shr;

namespace {

CensusConfig sampled(std::uint64_t seed, std::size_t count) {
  CensusConfig cfg;
  cfg.order = 4;
  cfg.mode = CensusMode::sampled;
  cfg.seed = seed;
  cfg.sample_count = count;
  return cfg;
}

}  // namespace

TEST_SUITE("structures-gen") {

TEST_CASE("topologies") {
  CHECK(all_topologies(1).size() == 1);
  CHECK(all_topologies(2).size() == 4);
  CHECK(all_topologies(3).size() == 29);
  CHECK(all_topologies(4).size() == 355);
  CHECK(is_topology(2, {0, 0b10, 0b11}));
  CHECK_FALSE(is_topology(2, {0b10, 0b11}));
  CHECK_FALSE(is_topology(3, {0, 0b001, 0b010, 0b111}));
  CHECK_THROWS_AS(from_topology(2, {0b01, 0b11}), DomainError);
  for (const auto& opens : all_topologies(3)) {
    const auto r = from_topology(3, opens);
    CHECK(r.order() == opens.size());
    CHECK(validate(r, StructureClass::semihyperring).ok());
    CHECK(r.mul_commutative());
  }
}

TEST_CASE("named fixtures") {
  const auto t = t2();
  CHECK(t.element_names() == std::vector<std::string>{"e", "s", "x"});
  CHECK(t.add(1, 2) == bit(2));
  CHECK(t.mul(1, 2) == 1u);
  CHECK(t == from_topology(2, {0, 0b10, 0b11}, {"e", "s", "x"}, t.name()));
  CHECK(validate(one_element(), StructureClass::hyperring).ok());
  CHECK(example_1_3().order() == 4);
}

TEST_CASE("search space") {
  CHECK(census_search_space(1) == 1);
  CHECK(census_search_space(2) == 6);
  CHECK(census_search_space(3) == 343u * 81u);
  CHECK(census_search_space(4) == 2985984000000ull);
}

TEST_CASE("exhaustive census regression counts") {
  const auto& all = testing::small_census();
  std::array<std::size_t, 4> by_order{};
  for (const auto& r : all) ++by_order[r.order()];
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 6);
  CHECK(by_order[3] == 162);

  std::set<std::vector<std::uint64_t>> classes;
  std::size_t fully_idempotent = 0, regular = 0, commutative = 0;
  for (const auto& r : all) {
    if (r.order() != 3) continue;
    classes.insert(canonical_form(r));
    fully_idempotent += is_fully_idempotent(r);
    regular += is_regular(r).regular;
    commutative += r.mul_commutative();
  }
  CHECK(classes.size() == 88);
  CHECK(fully_idempotent == 48);
  CHECK(regular == 48);
  CHECK(commutative == 150);
}

TEST_CASE("census output is valid, ordered and zero-anchored") {
  CensusConfig cfg;
  cfg.order = 3;
  const auto all = census(cfg);
  std::vector<std::vector<std::uint64_t>> enc;
  for (const auto& r : all) {
    CHECK(r.zero() == 0);
    CHECK(r.element_names() == census_names(3));
    CHECK(validate(r, StructureClass::semihyperring).ok());
    enc.push_back(table_encoding(r));
  }
  CHECK(std::is_sorted(enc.begin(), enc.end()));
  CHECK(std::adjacent_find(enc.begin(), enc.end()) == enc.end());

  cfg.require_commutative_mul = true;
  CHECK(census(cfg).size() == 150);
}

TEST_CASE("sampled census depends only on the seed") {
  const auto a = census(sampled(42, 12));
  const auto b = census(sampled(42, 12));
  CHECK(a.size() == 12);
  CHECK(a == b);
  for (const auto& r : a) {
    CHECK(r.order() == 4);
    CHECK(is_semihyperring(r));
  }
  CHECK(census(sampled(43, 12)) != a);
}

TEST_CASE("sampled census honours the commutative filter") {
  auto cfg = sampled(7, 8);
  cfg.require_commutative_mul = true;
  for (const auto& r : census(cfg)) CHECK(r.mul_commutative());
}

TEST_CASE("census configuration errors") {
  CensusConfig cfg;
  cfg.order = 0;
  CHECK_THROWS_AS(check_census_config(cfg), DomainError);
  cfg.order = 4;
  CHECK_THROWS_AS(check_census_config(cfg), DomainError);
  cfg = sampled(1, 0);
  CHECK_THROWS_AS(check_census_config(cfg), DomainError);
  cfg = sampled(1, 3);
  cfg.seed.reset();
  CHECK_THROWS_AS(check_census_config(cfg), DomainError);
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(8);
  for (const auto& r : testing::small_census()) {
    std::vector<std::size_t> perm(r.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    const auto p = permuted(r, perm);
    CHECK(canonical_form(p) == canonical_form(r));
    CHECK(iso_equivalent(p, r));
    CHECK(validate(p, StructureClass::semihyperring).ok());
  }
}

TEST_CASE("census names") {
  CHECK(census_names(4) == std::vector<std::string>{"0", "a", "b", "c"});
}

}
