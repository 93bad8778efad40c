#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poslat/elem_set.hpp"

namespace poslat {

using Cover = std::pair<Elem, Elem>;  // (lo, hi)

/// A finite partial order on the dense carrier 0..n-1 (n <= 64).
///
/// Stored as principal downsets and upsets, so `leq(a, b)` is a bit test and
/// the set calculus (maximal elements, downward closure) is word-parallel.
class Poset {
public:
  Poset() = default;

  /// Reflexive-transitive closure of `covers`. Throws Error(Cycle) if the
  /// closure is not antisymmetric and Error(Index) on out-of-range indices.
  static Poset from_covers(std::size_t n, std::span<const Cover> covers);

  /// From a full relation matrix, row-major `leq[a * n + b]`. The matrix must
  /// already be a partial order; throws Error(InvalidArgument) otherwise.
  static Poset from_relation(std::size_t n, const std::vector<bool>& leq);

  std::size_t size() const { return down_.size(); }
  ElemSet carrier() const { return ElemSet::first(static_cast<Elem>(size())); }

  bool leq(Elem a, Elem b) const;
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool incomparable(Elem a, Elem b) const { return !leq(a, b) && !leq(b, a); }

  /// {x : x <= e}
  ElemSet principal_down(Elem e) const;
  /// {x : e <= x}
  ElemSet principal_up(Elem e) const;

  /// S^M: members of S with nothing in S strictly above them.
  ElemSet maximal(ElemSet s) const;
  ElemSet minimal(ElemSet s) const;
  /// Least downset containing S. down(empty) is empty.
  ElemSet down(ElemSet s) const;
  ElemSet up(ElemSet s) const;
  bool is_downset(ElemSet s) const { return down(s) == s; }
  bool is_antichain(ElemSet s) const { return maximal(s) == s; }

  /// Hasse diagram edges, sorted by (lo, hi).
  std::vector<Cover> covers() const;

  /// Longest chain length from a minimal element up to e (minimal elements have height 0).
  std::vector<std::size_t> heights() const;

  /// Carrier of O(P): every downset, ascending by cardinality, ties broken by
  /// the numeric value of the membership word. Throws Error(Capacity) once more
  /// than `limit` downsets would be produced.
  std::vector<ElemSet> all_downsets(std::size_t limit = std::size_t{1} << 22) const;

  /// No x, y, z with y || z and x below both. `below_meet(x, y, z)`, when
  /// given, replaces the common-lower-bound test "x <= y and x <= z" (used to
  /// read "x <= y ^ z" through an enclosing lattice's meet).
  bool is_forest_like(const std::function<bool(Elem, Elem, Elem)>& below_meet = {}) const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of e, or its decimal index when unlabeled.
  std::string label(Elem e) const;
  Poset with_labels(std::vector<std::string> labels) const;

  bool operator==(const Poset& o) const { return down_ == o.down_; }

private:
  void check_index(Elem e) const;

  std::vector<ElemSet> down_;
  std::vector<ElemSet> up_;
  std::vector<std::string> labels_;
};

}  // namespace poslat
