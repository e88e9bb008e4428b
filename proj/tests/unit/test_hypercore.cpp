#include <doctest.h>

#include "support.hpp"

using namespace shr;
using testing::set;

TEST_SUITE("hypercore") {

TEST_CASE("set-extended hyperaddition") {
  const auto ex = example_1_3();
  const auto t = t2();
  CHECK(hyperadd_sets(ex, set(ex, "{a}"), set(ex, "{a}")) == set(ex, "{a,b}"));
  CHECK(hyperadd_sets(t, set(t, "{s}"), set(t, "{s,x}")) == set(t, "{s,x}"));
  CHECK(hyperadd_sets(t, CrispSubset::empty(3), set(t, "{s,x}")).is_empty());
  CHECK(hyperadd_sets(t, set(t, "{x}"), CrispSubset::empty(3)).is_empty());
  CHECK_THROWS_AS(hyperadd_sets(t, CrispSubset::full(4), set(t, "{s}")), StructureError);
}

TEST_CASE("set-extended multiplication") {
  const auto ex = example_1_3();
  const auto t = t2();
  CHECK(mul_sets(ex, set(ex, "{a,b}"), set(ex, "{c}")) == set(ex, "{a,b}"));
  CHECK(mul_sets(t, set(t, "{x}"), set(t, "{s,x}")) == set(t, "{s,x}"));
  CHECK(mul_sets(ex, CrispSubset::empty(4), set(ex, "{c}")).is_empty());
  CHECK_THROWS_AS(mul_sets(ex, set(ex, "{a}"), CrispSubset::full(3)), StructureError);
}

TEST_CASE("additive closure") {
  const auto t = t2();
  const auto ex = example_1_3();
  CHECK(additive_closure(t, set(t, "{e,s}")) == set(t, "{e,s}"));
  CHECK(additive_closure(t, CrispSubset::full(3)).is_full());
  // a (+) a = {a,b}; b (+) a = {b}: C = {a,b} already satisfies C (+) {a} within C.
  CHECK(additive_closure(ex, set(ex, "{a}")) == set(ex, "{a,b}"));
  CHECK_THROWS_AS(additive_closure(t, CrispSubset::empty(3)), DomainError);
}

TEST_CASE("additive closure is the least C containing S with C (+) S inside C") {
  std::mt19937_64 rng(11);
  for (const auto& r : testing::small_census()) {
    const auto n = r.order();
    for (int k = 0; k < 6; ++k) {
      auto s = testing::random_subset(n, rng);
      if (s.is_empty()) continue;
      const auto c = additive_closure(r, s);
      CHECK(s.subset_of(c));
      CHECK(hyperadd_sets(r, c, s).subset_of(c));
      // Brute force: no strictly smaller superset of s is closed.
      for (Mask m = 0; m <= full_mask(n); ++m) {
        const CrispSubset d(n, m);
        if (s.subset_of(d) && hyperadd_sets(r, d, s).subset_of(d)) CHECK(c.subset_of(d));
      }
    }
  }
}

TEST_CASE("closure operator laws and monotone, commutative set addition") {
  std::mt19937_64 rng(5);
  for (const auto& r : testing::small_census()) {
    const auto n = r.order();
    for (int k = 0; k < 8; ++k) {
      auto a = testing::random_subset(n, rng);
      auto b = testing::random_subset(n, rng);
      auto c = a | b;
      CHECK(hyperadd_sets(r, a, b) == hyperadd_sets(r, b, a));
      CHECK(hyperadd_sets(r, a, b).subset_of(hyperadd_sets(r, c, b)));
      CHECK(hyperadd_sets(r, b, a).subset_of(hyperadd_sets(r, b, c)));
      if (a.is_empty()) continue;
      const auto ca = additive_closure(r, a);
      CHECK(additive_closure(r, ca) == ca);
      CHECK(ca.subset_of(additive_closure(r, c)));
    }
  }
}

TEST_CASE("validation of the fixtures") {
  auto ok = validate(t2(), StructureClass::semihyperring);
  CHECK(ok.ok());
  CHECK(ok.structure_class == StructureClass::semihyperring);
  CHECK(validate(one_element(), StructureClass::semihyperring).ok());

  const auto ex = example_1_3();
  const auto bad = validate(ex, StructureClass::semihyperring);
  CHECK(bad.structure_class == StructureClass::invalid);
  REQUIRE(!bad.failures.empty());
  CHECK(bad.failures.front() == AxiomFailure{"zero-add-identity", {0, 1}});
  CHECK(bad.has_failure("left-distributive"));
  for (const auto& f : bad.failures) CHECK(recheck(ex, f));
  CHECK(validate(ex, StructureClass::semihyperring) == bad);
  CHECK_FALSE(is_semihyperring(ex));
}

TEST_CASE("failure witnesses re-fail on corrupted tables") {
  const auto t = t2();
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const auto x = rng() % 3, y = rng() % 3;
    const auto broken = k % 2 ? t.with_mul(x, y, rng() % 3) : t.with_add(x, y, 1 + rng() % 7);
    const auto rep = validate(broken, StructureClass::semihyperring);
    CHECK(rep.ok() == is_semihyperring(broken));
    for (const auto& f : rep.failures) CHECK(recheck(broken, f));
  }
}

TEST_CASE("hypergroup hierarchy") {
  // Z2 as a group: a canonical hypergroup.
  const SemihyperringTable z2("z2", {"0", "1"}, 0, {bit(0), bit(1), bit(1), bit(0)}, {0, 0, 0, 1});
  CHECK(validate(z2, StructureClass::semihypergroup).ok());
  CHECK(validate(z2, StructureClass::hypergroup).ok());
  CHECK(validate(z2, StructureClass::polygroup).ok());
  CHECK(validate(z2, StructureClass::canonical_hypergroup).ok());
  CHECK(validate(z2, StructureClass::hyperring).ok());

  // Total hypergroup: reproduction holds, no identity.
  const Mask all = 0b11;
  const SemihyperringTable total("total", {"0", "1"}, 0, {all, all, all, all}, {0, 0, 0, 0});
  CHECK(validate(total, StructureClass::hypergroup).ok());
  CHECK(validate(total, StructureClass::polygroup).has_failure("polygroup-identity"));

  // T2 under union is a semihypergroup but s (+) R misses e.
  const auto t = t2();
  CHECK(validate(t, StructureClass::semihypergroup).ok());
  CHECK(validate(t, StructureClass::hypergroup).has_failure("reproduction"));
  CHECK(validate(t, StructureClass::hyperring).has_failure("polygroup-inverse"));
}

TEST_CASE("distributivity as a set identity on every valid structure") {
  for (const auto& r : testing::small_census()) {
    const auto n = r.order();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto X = CrispSubset(n, bit(x));
          const auto yz = r.subset(r.add(y, z));
          CHECK(mul_sets(r, X, yz) ==
                hyperadd_sets(r, r.subset(bit(r.mul(x, y))), r.subset(bit(r.mul(x, z)))));
          CHECK(mul_sets(r, yz, X) ==
                hyperadd_sets(r, r.subset(bit(r.mul(y, x))), r.subset(bit(r.mul(z, x)))));
        }
  }
}

TEST_CASE("table construction errors") {
  CHECK_THROWS_AS(SemihyperringTable("e", {"0", "a"}, 0, {bit(0), 0, 0, bit(1)}, {0, 0, 0, 1}),
                  StructureError);
  CHECK_THROWS_AS(SemihyperringTable("a", {"0", "a"}, 0, {bit(0), bit(1), bit(0), bit(1)}, {0, 0, 0, 1}),
                  StructureError);
  CHECK_THROWS_AS(SemihyperringTable("d", {"0", "0"}, 0, {1, 1, 1, 1}, {0, 0, 0, 0}), StructureError);
  CHECK_THROWS_AS(SemihyperringTable("m", {"0", "a"}, 0, {1, 2, 2, 2}, {0, 0, 0, 2}), StructureError);
}

TEST_CASE("formatting and names") {
  const auto ex = example_1_3();
  CHECK(ex.format(set(ex, "{b,0}")) == "{0,b}");
  CHECK(ex.index_of("c") == 3u);
  CHECK_FALSE(ex.index_of("z").has_value());
}

}
