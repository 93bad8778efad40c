#include "doctest.h"

#include <random>

#include "poslat/error.hpp"
#include "poslat/instances.hpp"
#include "poslat/poset.hpp"
#include "support/oracle.hpp"

using namespace poslat;

namespace {

Poset chain2() { return Poset::from_covers(2, std::vector<Cover>{{0, 1}}); }
Poset vposet() { return Poset::from_covers(3, std::vector<Cover>{{0, 1}, {0, 2}}); }

oracle::Matrix matrix_of(const Poset& p) {
  oracle::Matrix m(p.size(), std::vector<bool>(p.size()));
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b) m[a][b] = p.leq(a, b);
  return m;
}

}  // namespace

TEST_CASE("from_covers builds the reflexive-transitive closure") {
  Poset c = chain2();
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(1, 0));
  CHECK(c.leq(0, 0));

  Poset v = vposet();
  CHECK(v.incomparable(1, 2));
  CHECK(v.leq(0, 2));

  Poset chain3 = Poset::from_covers(3, std::vector<Cover>{{0, 1}, {1, 2}});
  CHECK(chain3.leq(0, 2));
}

TEST_CASE("from_covers errors") {
  CHECK_THROWS_AS(Poset::from_covers(3, std::vector<Cover>{{0, 1}, {1, 2}, {2, 0}}), Error);
  try {
    Poset::from_covers(3, std::vector<Cover>{{0, 1}, {1, 2}, {2, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Cycle);
  }
  try {
    Poset::from_covers(2, std::vector<Cover>{{0, 5}});
    FAIL("expected IndexError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Index);
  }
  try {
    Poset::from_covers(65, {});
    FAIL("expected CapacityError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Capacity);
  }
  CHECK_THROWS_AS(chain2().leq(0, 2), Error);
}

TEST_CASE("maximal elements") {
  CHECK(chain2().maximal(ElemSet::of({0, 1})) == ElemSet::of({1}));
  CHECK(chain2().maximal(ElemSet{}).empty());
  // V: x<y, x<z
  const Poset v = vposet();
  CHECK(v.maximal(ElemSet::of({0, 1, 2})).bits() == oracle::maximal(matrix_of(v), 0b111));
  CHECK(v.maximal(ElemSet::of({0, 1, 2})) == ElemSet::of({1, 2}));
}

TEST_CASE("downward closure") {
  CHECK(vposet().down(ElemSet{}).empty());
  CHECK(chain2().down(ElemSet::of({1})) == ElemSet::of({0, 1}));
  CHECK(vposet().down(ElemSet::of({1, 2})) == ElemSet::of({0, 1, 2}));
  CHECK(vposet().down(ElemSet::of({1, 2})).bits() == oracle::down(matrix_of(vposet()), 0b110));

  CHECK(chain2().is_downset(ElemSet{}));
  CHECK_FALSE(chain2().is_downset(ElemSet::of({1})));
  CHECK(vposet().is_downset(ElemSet::of({0, 1})));
}

TEST_CASE("all_downsets") {
  const Poset anti2 = Poset::from_covers(2, {});
  auto a = anti2.all_downsets();
  REQUIRE(a.size() == 4);
  CHECK(a[0].empty());
  CHECK(a[1] == ElemSet::of({0}));
  CHECK(a[2] == ElemSet::of({1}));
  CHECK(a[3] == ElemSet::of({0, 1}));

  auto c = chain2().all_downsets();
  REQUIRE(c.size() == 3);
  CHECK(c[1] == ElemSet::of({0}));

  CHECK(vposet().all_downsets().size() == oracle::downsets(matrix_of(vposet())).size());
  CHECK(vposet().all_downsets().size() == 5);

  auto e = Poset::from_covers(0, {}).all_downsets();
  REQUIRE(e.size() == 1);
  CHECK(e[0].empty());

  try {
    Poset::from_covers(30, {}).all_downsets(1000);
    FAIL("expected CapacityError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::Capacity);
  }
}

TEST_CASE("forest-like") {
  CHECK(chain2().is_forest_like());
  CHECK_FALSE(vposet().is_forest_like());
  CHECK(Poset::from_covers(2, {}).is_forest_like());
  // Inverted V (y<x, z<x): no common lower bound of y and z.
  CHECK(Poset::from_covers(3, std::vector<Cover>{{1, 0}, {2, 0}}).is_forest_like());
}

TEST_CASE("covers regenerate the order") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poset p = random_poset(1 + rng() % 8, rng);
    Poset q = Poset::from_covers(p.size(), p.covers());
    CHECK(p == q);
  }
}

TEST_CASE("set calculus properties on random posets") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const Poset p = random_poset(1 + rng() % 7, rng);
    const auto m = matrix_of(p);
    const std::uint64_t full = p.carrier().bits();
    const ElemSet x(rng() & full), y(rng() & full);

    CHECK(p.maximal(x).bits() == oracle::maximal(m, x.bits()));
    CHECK(p.down(x).bits() == oracle::down(m, x.bits()));
    CHECK(p.maximal(p.down(x)) == p.maximal(x));
    CHECK(p.down(p.maximal(x)) == p.down(x));
    CHECK((p.down(x) | p.down(y)) == p.down(x | y));
    CHECK(p.is_antichain(p.maximal(x)));
    CHECK(p.maximal(p.maximal(x)) == p.maximal(x));

    const auto ds = p.all_downsets();
    const auto expected = oracle::downsets(m);
    REQUIRE(ds.size() == expected.size());
    for (std::size_t k = 0; k < ds.size(); ++k) CHECK(ds[k].bits() == expected[k]);
    const ElemSet a = ds[rng() % ds.size()], b = ds[rng() % ds.size()];
    CHECK(p.is_downset(a & b));
    CHECK(p.is_downset(a | b));
  }
}
