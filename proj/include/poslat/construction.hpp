#pragma once

#include <vector>

#include "poslat/algebra.hpp"
#include "poslat/lattice.hpp"
#include "poslat/poset.hpp"

namespace poslat {

// Set-level operations over the poset J of join-irreducibles.

/// X (#) Y = X^M & Y^M
ElemSet sharp_sets(const Poset& j, ElemSet x, ElemSet y);
/// X ($) Y = (X^M & down(Y)) | (down(X) & Y^M)
ElemSet dollar_sets(const Poset& j, ElemSet x, ElemSet y);

// Downset-level operations; both throw Error(NotADownset) on bad input.

/// A # B = down(A (#) B)
ElemSet sharp_down(const Poset& j, ElemSet a, ElemSet b);
/// A $ B = down(A ($) B)
ElemSet dollar_down(const Poset& j, ElemSet a, ElemSet b);

/// The two algebras representing a finite distributive lattice D.
///
/// E lives on O(J(D)) (carrier order: Poset::all_downsets), E' on all subsets
/// of J(D) (carrier index = membership word). Operation order in both is
/// sharp, dollar, join.
struct RepresentationPair {
  static constexpr std::size_t kSharp = 0;
  static constexpr std::size_t kDollar = 1;
  static constexpr std::size_t kJoin = 2;

  Lattice d;
  JPoset j;
  std::vector<ElemSet> e_carrier;
  FiniteAlgebra e;
  FiniteAlgebra eprime;
  std::vector<Elem> e_to_d;
  std::vector<Elem> d_to_e;

  const Poset& jorder() const { return j.order; }
  std::size_t eprime_size() const { return eprime.size(); }
  /// Index of a downset in E's carrier; throws Error(NotADownset).
  Elem e_index(ElemSet downset) const;
  static ElemSet eprime_set(Elem index) { return ElemSet(index); }
  static Elem eprime_index(ElemSet s) { return static_cast<Elem>(s.bits()); }
};

/// Throws Error(NotDistributive), or Error(Capacity) when 2^|J(D)| exceeds
/// kMaxPrimeCarrier.
inline constexpr std::size_t kMaxPrimeCarrier = std::size_t{1} << 16;
RepresentationPair build_pair(const Lattice& d);

/// build_pair(O(P)) with D's elements labeled by their downsets ("{x,y}")
/// and each join-irreducible down(p) labeled like p.
RepresentationPair build_pair_from_poset(const Poset& p);

/// f(X) = down(X), from E' onto E.
ElemSet hom_f(const RepresentationPair& pair, ElemSet x);
/// hom_f on carrier indices.
Elem hom_f_index(const RepresentationPair& pair, Elem eprime_index);

/// X == Y iff X^M ^ Y^M lies inside `ideal` (a downset of J).
Partition phi_partition(const Poset& j, const std::vector<ElemSet>& carrier, ElemSet ideal);

/// theta_a on E, with ideal {j in J(D) : j <= a}.
Partition theta_congruence(const RepresentationPair& pair, Elem a);
/// theta'_A on E'; A must be a downset of J (Error(NotADownset)).
Partition theta_prime_congruence(const RepresentationPair& pair, ElemSet a);

/// One theta per element of D, indexed like D.
std::vector<Partition> theta_family(const RepresentationPair& pair);
/// One theta' per downset of J, indexed like E's carrier.
std::vector<Partition> prime_family(const RepresentationPair& pair);

}  // namespace poslat
