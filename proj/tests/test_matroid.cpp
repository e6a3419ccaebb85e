#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gammaext/catalog.hpp"
#include "gammaext/errors.hpp"
#include "gammaext/matroid.hpp"
#include "oracles.hpp"

using namespace gammaext;

namespace {

// The small pool every oracle comparison runs over.
std::vector<BinaryMatroid> oracle_pool() {
  std::vector<BinaryMatroid> pool{named("u23"), named("k4-cycle"), fano(), named("fano-dual"),
                                  named("ag32")};
  for (const auto& e : enumerate_matroids(3, 5)) pool.push_back(e.matroid);
  for (const auto& e : enumerate_matroids(3, 6)) pool.push_back(e.matroid);
  return pool;
}

std::vector<ElementSet> frozen(std::initializer_list<const char*> sets) {
  std::vector<ElementSet> out;
  for (const char* csv : sets) out.push_back(ElementSet::from_csv(csv));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("fano basics") {
  const BinaryMatroid f7 = fano();
  CHECK(f7.size() == 7);
  CHECK(f7.rank() == 3);
  CHECK(f7.validated());
  CHECK(f7.labels() == std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7"});
  CHECK(f7.ground_set() == ElementSet::from_csv("1,2,3,4,5,6,7"));
  CHECK(f7.contains("5"));
  CHECK_FALSE(f7.contains("8"));
  CHECK(f7.index_of("4") == 3);
  CHECK_THROWS_AS(f7.index_of("x"), LabelError);

  // Identity block, then 4=(0,1,1), 5=(1,0,1), 6=(1,1,0), 7=(1,1,1).
  CHECK(f7.column_bits(0) == 0b001);
  CHECK(f7.column_bits(3) == 0b110);
  CHECK(f7.column_bits(6) == 0b111);

  CHECK(f7.rank_of(ElementSet::from_csv("1,2,3")) == 3);
  CHECK(f7.rank_of(ElementSet::from_csv("1,2,6")) == 2);  // a line
  CHECK(f7.rank_of(ElementSet{}) == 0);
  CHECK(f7.is_independent(ElementSet::from_csv("1,2,4")));
  CHECK_FALSE(f7.is_independent(ElementSet::from_csv("2,3,4")));
  CHECK(f7.is_independent(ElementSet{}));
  CHECK_THROWS_AS(f7.rank_of(ElementSet{"nope"}), LabelError);
}

TEST_CASE("mask round trip") {
  const BinaryMatroid f7 = fano();
  const ElementSet s = ElementSet::from_csv("2,5,7");
  const Mask mask = f7.mask_of(s);
  CHECK(f7.set_of(mask) == s);
  CHECK(f7.rank_of_mask(mask) == f7.rank_of(s));
  CHECK(f7.full_mask() == 0b1111111);
  CHECK(f7.set_of(f7.full_mask()) == f7.ground_set());
  CHECK(f7.rank_of_mask(0) == 0);
}

TEST_CASE("fano circuits and cocircuits are the classical ones") {
  const BinaryMatroid f7 = fano();
  // Seven lines plus the seven line complements.
  const auto expected_circuits = frozen({"1,2,6", "1,3,5", "1,4,7", "2,3,4", "2,5,7", "3,6,7",
                                         "4,5,6", "1,2,3,7", "1,2,4,5", "1,3,4,6", "1,5,6,7",
                                         "2,3,5,6", "2,4,6,7", "3,4,5,7"});
  CHECK(circuits(f7) == expected_circuits);
  // Cocircuits of F7 are exactly the line complements.
  const auto expected_cocircuits = frozen(
      {"1,2,3,7", "1,2,4,5", "1,3,4,6", "1,5,6,7", "2,3,5,6", "2,4,6,7", "3,4,5,7"});
  CHECK(cocircuits(f7) == expected_cocircuits);
  CHECK(girth(f7) == 3);
  CHECK(cogirth(f7) == 4);
}

TEST_CASE("u23 basics") {
  const BinaryMatroid u = named("u23");
  CHECK(u.rank() == 2);
  CHECK(circuits(u) == frozen({"a,b,c"}));
  CHECK(cocircuits(u) == frozen({"a,b", "a,c", "b,c"}));
  CHECK(girth(u) == 3);
  CHECK(cogirth(u) == 2);
}

TEST_CASE("circuits and cocircuits match the brute-force oracle") {
  for (const BinaryMatroid& m : oracle_pool()) {
    CHECK(oracle::sets_of(m, circuit_masks(m)) == oracle::sets_of(m, oracle::circuits(m)));
    CHECK(oracle::sets_of(m, cocircuit_masks(m)) == oracle::sets_of(m, oracle::cocircuits(m)));
  }
}

TEST_CASE("rank agrees with the span-counting oracle on every subset") {
  for (const BinaryMatroid& m : oracle_pool()) {
    const Mask full = m.full_mask();
    for (Mask a = 0;; ++a) {
      REQUIRE(m.rank_of_mask(a) == oracle::rank_of(m, a));
      if (a == full) break;
    }
  }
}

TEST_CASE("dual") {
  const BinaryMatroid f7 = fano();
  CHECK(equals(dual(f7), named("fano-dual")));
  CHECK(dual(f7).rank() == 4);

  for (const BinaryMatroid& m : oracle_pool()) {
    CHECK(equals(dual(dual(m)), m));
    // Cocircuits are the dual's circuits, on the same labels.
    CHECK(oracle::sets_of(m, cocircuit_masks(m)) ==
          oracle::sets_of(dual(m), circuit_masks(dual(m))));
    CHECK(dual(m).rank() == m.size() - m.rank());
  }

  // A raw matroid with a coloop has no loopless dual.
  const BinaryMatroid with_coloop =
      BinaryMatroid::create_raw(Gf2Matrix::from_rows({{1, 0, 1}, {0, 1, 0}}), {"a", "b", "c"});
  CHECK_THROWS_AS(dual(with_coloop), LoopError);
}

TEST_CASE("deletion") {
  const BinaryMatroid f7 = fano();

  SUBCASE("deleting a point of the Fano plane leaves the K4 cycle matroid") {
    const BinaryMatroid d = delete_elements(f7, ElementSet{"7"});
    CHECK(d.size() == 6);
    CHECK(d.rank() == 3);
    CHECK(d.validated());
    CHECK(circuits(d).size() == 7);  // 4 triangles + 3 quads, like k4-cycle
    CHECK(girth(d) == 3);
    CHECK(oracle::sets_of(d, circuit_masks(d)) == oracle::sets_of(d, oracle::circuits(d)));
  }

  SUBCASE("strict mode rejects coloops, raw mode keeps them") {
    const ElementSet y = ElementSet::from_csv("4,5,6,7");
    CHECK_THROWS_AS(delete_elements(f7, y), ColoopError);
    const BinaryMatroid d = delete_elements(f7, y, DeleteMode::raw);
    CHECK_FALSE(d.validated());
    CHECK(d.size() == 3);
    CHECK(d.rank() == 3);                    // free matroid on {1,2,3}
    CHECK(circuits(d).empty());
    CHECK(girth(d) == SIZE_MAX);
    CHECK(cogirth(d) == 1);                  // every element is a coloop
    CHECK(cocircuits(d) == frozen({"1", "2", "3"}));
  }

  SUBCASE("argument checks") {
    CHECK_THROWS_AS(delete_elements(f7, f7.ground_set()), EmptyError);
    CHECK_THROWS_AS(delete_elements(f7, ElementSet{"9"}), LabelError);
  }

  SUBCASE("deletion against the oracle") {
    // Deleting must give exactly the circuits of M that avoid Y.
    const ElementSet y = ElementSet::from_csv("2,6");
    const BinaryMatroid d = delete_elements(f7, y, DeleteMode::raw);
    std::vector<ElementSet> survivors;
    for (const auto& c : circuits(f7))
      if (!c.intersects(y)) survivors.push_back(c);
    std::sort(survivors.begin(), survivors.end());
    CHECK(circuits(d) == survivors);
  }
}

TEST_CASE("components") {
  const BinaryMatroid f7 = fano();
  CHECK(component_count(f7) == 1);
  CHECK(components(f7) == std::vector<ElementSet>{f7.ground_set()});

  const BinaryMatroid uu = direct_sum(named("u23"), named("u23"));
  CHECK(component_count(uu) == 2);
  CHECK(components(uu) ==
        std::vector<ElementSet>{ElementSet::from_csv("a:a,a:b,a:c"),
                                ElementSet::from_csv("b:a,b:b,b:c")});
  CHECK(component_masks(uu).size() == 2);

  for (const BinaryMatroid& m : oracle_pool()) {
    auto expected = oracle::sets_of(m, oracle::components(m));
    auto got = components(m);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(component_masks(m).size() == expected.size());
  }

  // Coloops of raw matroids are singleton components.
  const BinaryMatroid free3 =
      delete_elements(f7, ElementSet::from_csv("4,5,6,7"), DeleteMode::raw);
  CHECK(components(free3) ==
        std::vector<ElementSet>{ElementSet{"1"}, ElementSet{"2"}, ElementSet{"3"}});
  const BinaryMatroid coloopy =
      BinaryMatroid::create_raw(Gf2Matrix::from_rows({{1, 0, 1}, {0, 1, 0}}), {"a", "b", "c"});
  CHECK(components(coloopy) ==
        std::vector<ElementSet>{ElementSet{"a", "c"}, ElementSet{"b"}});
  CHECK(oracle::sets_of(coloopy, oracle::components(coloopy)) == components(coloopy));
}

TEST_CASE("direct sum") {
  SUBCASE("disjoint labels pass through") {
    const BinaryMatroid sum = direct_sum(named("u23"), fano());
    CHECK(sum.size() == 10);
    CHECK(sum.rank() == 5);
    CHECK(sum.contains("a"));
    CHECK(sum.contains("7"));
    CHECK(circuits(sum).size() == 15);  // 1 + 14, nothing across the seam
    CHECK(component_count(sum) == 2);
  }

  SUBCASE("colliding labels get side prefixes") {
    const BinaryMatroid sum = direct_sum(named("u23"), named("u23"));
    CHECK(sum.ground_set() == ElementSet::from_csv("a:a,a:b,a:c,b:a,b:b,b:c"));
    CHECK(circuits(sum) == frozen({"a:a,a:b,a:c", "b:a,b:b,b:c"}));
  }
}

TEST_CASE("equality") {
  const BinaryMatroid f7 = fano();
  CHECK(equals(f7, fano()));

  SUBCASE("row operations do not matter") {
    Gf2Matrix m = f7.representation();
    m.xor_row(0, 2);
    m.xor_row(1, 0);
    CHECK(equals(BinaryMatroid::create(m, f7.labels()), f7));
  }

  SUBCASE("column order does not matter, labels do") {
    // Present the same labeled columns in a shuffled order.
    Gf2Matrix shuffled(3, 7);
    const std::vector<std::size_t> order{4, 2, 0, 6, 1, 5, 3};
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < 7; ++c) {
      labels.push_back(f7.labels()[order[c]]);
      for (std::size_t i = 0; i < 3; ++i) shuffled.set(i, c, f7.representation().get(i, order[c]));
    }
    CHECK(equals(BinaryMatroid::create(shuffled, labels), f7));
    // Same matrix under fresh labels is a different labeled matroid.
    CHECK_FALSE(equals(BinaryMatroid::create(f7.representation(),
                                             {"a", "b", "c", "d", "e", "f", "g"}),
                       f7));
  }

  SUBCASE("different ground sets never compare equal") {
    CHECK_FALSE(equals(named("u23"), fano()));
  }

  SUBCASE("same ground set, different matroid") {
    const auto pool = enumerate_matroids(3, 5);
    REQUIRE(pool.size() == 21);
    CHECK_FALSE(equals(pool[0].matroid, pool[1].matroid));
  }
}

TEST_CASE("construction rules") {
  CHECK_THROWS_AS(BinaryMatroid::create(Gf2Matrix::from_rows({{1, 0}, {0, 1}}), {"a"}),
                  DimensionError);
  CHECK_THROWS_AS(BinaryMatroid::create(Gf2Matrix::from_rows({{1, 0}, {0, 1}}), {"a", "a"}),
                  LabelError);
  CHECK_THROWS_AS(BinaryMatroid::create(Gf2Matrix::from_rows({{1, 0}, {0, 0}}), {"a", "b"}),
                  LoopError);

  // e2 lies in every basis: fine raw, rejected validated.
  const Gf2Matrix coloopy = Gf2Matrix::from_rows({{1, 0, 1}, {0, 1, 0}});
  CHECK_THROWS_AS(BinaryMatroid::create(coloopy, {"a", "b", "c"}), ColoopError);
  const BinaryMatroid raw = BinaryMatroid::create_raw(coloopy, {"a", "b", "c"});
  CHECK_FALSE(raw.validated());
  CHECK(raw.rank() == 2);

  // A dependent-row representation standardizes to full row rank.
  const BinaryMatroid m = BinaryMatroid::create(
      Gf2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}}), {"a", "b", "c"});
  CHECK(m.rank() == 2);
  CHECK(equals(m, named("u23")));
}

TEST_CASE("enumeration bounds guard the exponential searches") {
  const BinaryMatroid big = direct_sum(named("k5-cycle"), fano());  // 17 elements
  CHECK(big.size() == 17);
  CHECK_THROWS_AS(circuits(big), SizeError);
  CHECK_THROWS_AS(girth(big), SizeError);
  CHECK_THROWS_AS(components(big), SizeError);
  CHECK(component_masks(big).size() == 2);  // the cheap path has no bound
  CHECK(circuits(big, 17).size() == 37 + 14);
}
