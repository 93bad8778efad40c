#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "poslat/poset.hpp"

namespace poslat {

/// Largest carrier for which dense tables are materialized.
inline constexpr std::size_t kMaxLatticeSize = std::size_t{1} << 12;

/// A finite lattice with materialized order, meet and join tables.
///
/// Unlike Poset, the carrier is not capped at 64 elements: congruence
/// lattices and powerset lattices outgrow a single word quickly.
class Lattice {
public:
  Lattice() = default;

  /// glb/lub search over the poset. Throws Error(NotALattice) naming the
  /// first pair without a meet or a join (or when the poset is empty).
  static Lattice from_poset(const Poset& p);

  /// Same search over an arbitrary order predicate on 0..n-1. Cubic; meant
  /// for small carriers.
  static Lattice from_order(std::size_t n, const std::function<bool(Elem, Elem)>& leq);

  /// Trusted construction from complete tables; only shapes are checked.
  static Lattice from_tables(std::size_t n, std::vector<char> leq, std::vector<Elem> meet,
                             std::vector<Elem> join);

  std::size_t size() const { return n_; }
  bool leq(Elem a, Elem b) const { return leq_[index(a, b)] != 0; }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Fold of join; the join of nothing is the bottom.
  Elem join_of(std::span<const Elem> s) const;
  /// Fold of meet; the meet of nothing is the top.
  Elem meet_of(std::span<const Elem> s) const;

  /// Hasse diagram edges (lo, hi), sorted.
  std::vector<Cover> covers() const;
  /// Longest chain from the bottom.
  std::vector<std::size_t> heights() const;

  /// Order restricted to 0..n-1 as a Poset; requires n <= 64.
  Poset to_poset() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem e) const;
  Lattice with_labels(std::vector<std::string> labels) const;

private:
  std::size_t index(Elem a, Elem b) const;

  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::string> labels_;
};

/// The join-irreducibles of a lattice as a poset under the restricted order.
struct JPoset {
  Poset order;
  /// to_parent[j] is the lattice element for index j of `order`.
  std::vector<Elem> to_parent;
};

/// O(P) with meet = intersection and join = union, carrier in all_downsets order.
struct SetLattice {
  Lattice lattice;
  std::vector<ElemSet> members;
  std::unordered_map<std::uint64_t, Elem> index_of;

  Elem find(ElemSet s) const;
};

/// Throws Error(Capacity) past kMaxLatticeSize downsets.
SetLattice downset_lattice(const Poset& p);

bool is_distributive(const Lattice& l);
bool is_boolean(const Lattice& l);

/// Elements x != bottom such that x = a v b implies x in {a, b}. Ascending.
std::vector<Elem> join_irreducible_elements(const Lattice& l);
/// Throws Error(Capacity) past 64 join-irreducibles.
JPoset join_irreducibles(const Lattice& l);
/// Elements covering the bottom. Ascending.
std::vector<Elem> atoms(const Lattice& l);

/// D ~ O(J(D)) with X -> join of X, verified to be an isomorphism.
struct BirkhoffMap {
  JPoset j;
  SetLattice downsets;          // O(J(D))
  std::vector<Elem> to_lattice;  // downset index -> element of D
  std::vector<Elem> from_lattice;  // element of D -> downset index
};

/// Throws Error(NotDistributive).
BirkhoffMap birkhoff(const Lattice& l);

/// First meet- and join-preserving bijection a -> b in a deterministic
/// backtracking order, or nullopt.
std::optional<std::vector<Elem>> lattice_isomorphic(const Lattice& a, const Lattice& b);

}  // namespace poslat
