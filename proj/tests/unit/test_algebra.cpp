#include "doctest.h"

#include <random>

#include "poslat/algebra.hpp"
#include "poslat/error.hpp"
#include "support/oracle.hpp"

using namespace poslat;

namespace {

FiniteAlgebra random_algebra(std::size_t n, std::size_t ops, std::mt19937_64& rng) {
  std::vector<Operation> v;
  for (std::size_t k = 0; k < ops; ++k)
    v.push_back(binary_operation("f", n, [&](Elem, Elem) { return static_cast<Elem>(rng() % n); }));
  return FiniteAlgebra(n, v);
}

// Operations with some structure so that nontrivial congruences show up.
FiniteAlgebra quotient_like_algebra(std::size_t n, std::mt19937_64& rng) {
  const std::size_t m = 1 + rng() % n;
  std::vector<Elem> proj(n), lift(m);
  for (auto& x : proj) x = static_cast<Elem>(rng() % m);
  for (auto& x : lift) x = static_cast<Elem>(rng() % n);
  std::vector<Elem> small(m * m);
  for (auto& x : small) x = static_cast<Elem>(rng() % m);
  auto op = binary_operation("g", n, [&](Elem a, Elem b) { return lift[small[proj[a] * m + proj[b]]]; });
  return FiniteAlgebra(n, {op});
}

oracle::BinaryTable table_of(const FiniteAlgebra& a, std::size_t op) {
  const std::size_t n = a.size();
  oracle::BinaryTable t(n, std::vector<std::uint32_t>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem args[2]{x, y};
      t[x][y] = a.apply(op, args);
    }
  return t;
}

std::vector<std::vector<std::uint32_t>> oracle_congruences(const FiniteAlgebra& a) {
  std::vector<oracle::BinaryTable> tables;
  for (std::size_t i = 0; i < a.operations().size(); ++i) tables.push_back(table_of(a, i));
  return oracle::congruences(static_cast<int>(a.size()), tables);
}

std::vector<std::vector<std::uint32_t>> ids_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& p : ps) out.push_back(p.ids());
  return out;
}

FiniteAlgebra chain_meet(std::size_t n) {
  return FiniteAlgebra(n, {binary_operation("meet", n, [](Elem a, Elem b) { return std::min(a, b); })});
}

FiniteAlgebra cyclic_successor(std::size_t n) {
  return FiniteAlgebra(
      n, {binary_operation("succ", n, [n](Elem a, Elem) { return static_cast<Elem>((a + 1) % n); })});
}

}  // namespace

TEST_CASE("partition basics") {
  const auto p = Partition::from_keys(std::vector<int>{7, 3, 7, 9});
  CHECK(p.ids() == std::vector<std::uint32_t>{0, 1, 0, 2});
  CHECK(p.block_count() == 3);
  CHECK(p.same_block(0, 2));
  CHECK(p.blocks() == std::vector<std::vector<Elem>>{{0, 2}, {1}, {3}});
  CHECK(Partition::from_blocks(4, {{3}, {0, 2}, {1}}) == p);
  CHECK(Partition::discrete(4).refines(p));
  CHECK(p.refines(Partition::indiscrete(4)));
  CHECK_FALSE(Partition::indiscrete(4).refines(p));
  CHECK(Partition::indiscrete(3) < Partition::discrete(3));
  CHECK(Partition::discrete(0).block_count() == 0);
}

TEST_CASE("partition meet and join") {
  const auto p = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  const auto q = Partition::from_blocks(4, {{1, 2}, {0}, {3}});
  CHECK(partition_join(p, q) == Partition::from_blocks(4, {{0, 1, 2}, {3}}));
  CHECK(partition_meet(p, q) == Partition::discrete(4));
  CHECK(partition_meet(p, partition_join(p, q)) == p);
  CHECK_THROWS_AS(partition_join(p, Partition::discrete(3)), Error);
}

TEST_CASE("algebra validation") {
  CHECK_THROWS_AS(FiniteAlgebra(2, {Operation{"bad", 2, {0, 1, 1}}}), Error);
  CHECK_THROWS_AS(FiniteAlgebra(2, {Operation{"bad", 2, {0, 1, 1, 2}}}), Error);
  CHECK_THROWS_AS(FiniteAlgebra(2, {Operation{"bad", 0, {0}}}), Error);
  const FiniteAlgebra unary(3, {Operation{"succ", 1, {1, 2, 0}}});
  const Elem arg[1]{2};
  CHECK(unary.apply(0, arg) == 0);
}

TEST_CASE("is_congruence") {
  const FiniteAlgebra m = chain_meet(3);
  CHECK(is_congruence(m, Partition::from_blocks(3, {{0, 1}, {2}})));
  CHECK(is_congruence(m, Partition::from_blocks(3, {{0}, {1, 2}})));
  CHECK_FALSE(is_congruence(m, Partition::from_blocks(3, {{0, 2}, {1}})));
  CHECK(is_congruence(m, Partition::discrete(3)));
  CHECK(is_congruence(m, Partition::indiscrete(3)));

  const FiniteAlgebra unary(4, {Operation{"succ", 1, {1, 2, 3, 0}}});
  CHECK(is_congruence(unary, Partition::from_keys(std::vector<int>{0, 1, 0, 1})));
  CHECK_FALSE(is_congruence(unary, Partition::from_blocks(4, {{0, 1}, {2}, {3}})));
}

TEST_CASE("principal congruences") {
  const FiniteAlgebra m = chain_meet(4);
  // Identifying 0 and 2 in a meet chain forces the interval [0, 2].
  CHECK(principal_congruence(m, 0, 2) == Partition::from_blocks(4, {{0, 1, 2}, {3}}));
  CHECK(principal_congruence(m, 1, 1) == Partition::discrete(4));
  CHECK(principal_congruence(cyclic_successor(5), 0, 1) == Partition::indiscrete(5));
}

TEST_CASE("congruence lattices of small algebras") {
  const FiniteAlgebra none(3, {});
  const auto con = congruence_lattice(none);
  CHECK(con.members.size() == 5);
  CHECK(con.top() == Partition::indiscrete(3));
  CHECK(con.bottom() == Partition::discrete(3));

  CHECK(congruence_lattice(chain_meet(3)).members.size() == 4);
  CHECK(congruence_lattice(cyclic_successor(3)).members.size() == 2);
  CHECK(congruence_lattice(cyclic_successor(4)).members.size() == 3);
  CHECK(congruence_lattice(cyclic_successor(6)).members.size() == 4);
  CHECK(congruence_lattice(FiniteAlgebra(1, {})).members.size() == 1);

  const auto l = con.to_lattice();
  REQUIRE(l.size() == 5);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b) CHECK(l.leq(a, b) == con.members[a].refines(con.members[b]));
  CHECK(con.find(Partition::from_blocks(3, {{0, 2}, {1}})) < 5);
  CHECK(congruence_lattice(chain_meet(3)).find(Partition::from_blocks(3, {{0, 2}, {1}})) == 4);
}

TEST_CASE("bruteforce limit") {
  CHECK(congruences_bruteforce(FiniteAlgebra(4, {})).size() == 15);
  try {
    congruences_bruteforce(FiniteAlgebra(11, {}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("engine agrees with the oracle on random algebras") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + rng() % 7;
    const FiniteAlgebra a = round % 2 ? random_algebra(n, 1 + rng() % 2, rng) : quotient_like_algebra(n, rng);
    const auto expected = oracle_congruences(a);
    CHECK(ids_of(congruence_lattice(a).members) == expected);
    CHECK(ids_of(congruences_bruteforce(a)) == expected);
  }
}

TEST_CASE("principal congruence is the least congruence containing the pair") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 5;
    const FiniteAlgebra a = quotient_like_algebra(n, rng);
    const auto all = oracle_congruences(a);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        const Partition p = principal_congruence(a, x, y);
        CHECK(p.same_block(x, y));
        CHECK(is_congruence(a, p));
        for (const auto& ids : all) {
          if (ids[x] != ids[y]) continue;
          CHECK(p.refines(Partition::from_keys(ids)));
        }
      }
  }
}

TEST_CASE("congruence lattice is closed under meet and join") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 40; ++round) {
    const FiniteAlgebra a = quotient_like_algebra(1 + rng() % 7, rng);
    const auto con = congruence_lattice(a);
    for (const auto& p : con.members)
      for (const auto& q : con.members) {
        CHECK(con.find(partition_join(p, q)) < con.members.size());
        CHECK(con.find(partition_meet(p, q)) < con.members.size());
      }
  }
}

TEST_CASE("bounded congruence enumeration") {
  const FiniteAlgebra none(5, {});
  const auto partial = congruences_up_to(none, 10);
  CHECK_FALSE(partial.complete);
  CHECK(partial.members.size() == 11);
  for (const auto& p : partial.members) CHECK(is_congruence(none, p));
  const auto full = congruences_up_to(none, 52);
  CHECK(full.complete);
  CHECK(full.members.size() == 52);
  try {
    congruence_lattice(FiniteAlgebra(10, {}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}
