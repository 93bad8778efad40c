#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "poslat/elem_set.hpp"
#include "poslat/lattice.hpp"

namespace poslat {

struct Operation {
  std::string name;
  unsigned arity = 2;
  /// Row-major over argument tuples: index = sum x_i * n^(arity-1-i).
  std::vector<Elem> table;
};

/// Carrier 0..n-1 with finitary operation tables.
class FiniteAlgebra {
public:
  FiniteAlgebra() = default;
  /// Throws Error(InvalidArgument) for arity 0, a table of the wrong size or
  /// an entry outside the carrier.
  FiniteAlgebra(std::size_t n, std::vector<Operation> ops);

  std::size_t size() const { return n_; }
  const std::vector<Operation>& operations() const { return ops_; }
  Elem apply(std::size_t op, std::span<const Elem> args) const;

private:
  std::size_t n_ = 0;
  std::vector<Operation> ops_;
};

/// Builds a binary operation table from f(a, b).
template <typename F>
Operation binary_operation(std::string name, std::size_t n, F&& f) {
  Operation op{std::move(name), 2, std::vector<Elem>(n * n)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) op.table[a * n + b] = f(a, b);
  return op;
}

/// A partition of 0..n-1 in canonical form: blocks are numbered by first
/// occurrence, so element 0 is in block 0 and ids only grow by one.
class Partition {
public:
  Partition() = default;
  /// Canonicalizes arbitrary block keys.
  template <typename Key>
  static Partition from_keys(const std::vector<Key>& keys);
  static Partition discrete(std::size_t n);
  static Partition indiscrete(std::size_t n);
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks);

  std::size_t size() const { return block_.size(); }
  std::size_t block_count() const { return blocks_; }
  std::uint32_t block_of(Elem e) const { return block_[e]; }
  bool same_block(Elem a, Elem b) const { return block_[a] == block_[b]; }
  const std::vector<std::uint32_t>& ids() const { return block_; }
  std::vector<std::vector<Elem>> blocks() const;

  /// Every block of *this lies inside a block of o.
  bool refines(const Partition& o) const;

  auto operator<=>(const Partition& o) const { return block_ <=> o.block_; }
  bool operator==(const Partition& o) const { return block_ == o.block_; }

private:
  std::vector<std::uint32_t> block_;
  std::size_t blocks_ = 0;
};

template <typename Key>
Partition Partition::from_keys(const std::vector<Key>& keys) {
  Partition p;
  p.block_.resize(keys.size());
  std::vector<Key> seen;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::size_t b = 0;
    while (b < seen.size() && !(seen[b] == keys[i])) ++b;
    if (b == seen.size()) seen.push_back(keys[i]);
    p.block_[i] = static_cast<std::uint32_t>(b);
  }
  p.blocks_ = seen.size();
  return p;
}

/// Intersection of equivalence relations. Throws Error(SizeMismatch).
Partition partition_meet(const Partition& p, const Partition& q);
/// Transitive closure of the union. Throws Error(SizeMismatch).
Partition partition_join(const Partition& p, const Partition& q);

bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Least congruence identifying x and y.
Partition principal_congruence(const FiniteAlgebra& a, Elem x, Elem y);

/// Con A: the partitions sorted lexicographically by block ids, so equal
/// congruence sets compare equal as lists.
struct CongruenceLattice {
  std::vector<Partition> members;
  /// False when enumeration stopped early; members is then a subset.
  bool complete = true;

  // Canonical block ids make the discrete partition lexicographically last
  // and the one-block partition first.
  const Partition& bottom() const { return members.back(); }
  const Partition& top() const { return members.front(); }
  /// Index of p in members, or members.size() when absent.
  std::size_t find(const Partition& p) const;
  /// Refinement order with partition meet and join as tables.
  Lattice to_lattice() const;
};

inline constexpr std::size_t kMaxCongruences = std::size_t{1} << 16;

/// Throws Error(TooLarge) once more than kMaxCongruences are found.
CongruenceLattice congruence_lattice(const FiniteAlgebra& a);
/// Stops as soon as more than `limit` congruences are known, returning an
/// incomplete result that holds at least limit + 1 of them.
CongruenceLattice congruences_up_to(const FiniteAlgebra& a, std::size_t limit);

/// Every partition passing is_congruence, in canonical order. Throws
/// Error(TooLarge) for carriers above kBruteforceLimit.
inline constexpr std::size_t kBruteforceLimit = 10;
std::vector<Partition> congruences_bruteforce(const FiniteAlgebra& a);

}  // namespace poslat
