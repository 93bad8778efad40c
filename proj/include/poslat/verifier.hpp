#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "poslat/construction.hpp"

namespace poslat {

using Value = std::variant<bool, std::int64_t, std::string>;
/// Ordered key/value pairs; order is preserved into reports.
using Facts = std::vector<std::pair<std::string, Value>>;

struct ClauseResult {
  std::string id;  // "T1.1".."T1.5", "T2.ineq", "T2.forest", "T2.boolean"
  std::string description;
  bool passed = true;
  Facts facts;
  /// Non-empty whenever passed is false.
  Facts witness;
};

struct InstanceDescriptor {
  std::string name;
  std::size_t poset_size = 0;  // |J(D)|
  std::vector<std::pair<std::string, std::string>> covers;  // Hasse edges of J(D), labeled
  std::size_t lattice_size = 0;  // |D|
};

struct VerificationReport {
  InstanceDescriptor instance;
  std::vector<ClauseResult> clauses;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const;
  /// nullptr when absent.
  const ClauseResult* clause(std::string_view id) const;
};

/// Outcome of one independently computed condition.
struct Check {
  bool holds = true;
  Facts witness;
};

/// Rendering helpers shared with the report layer.
std::string format_set(const Poset& p, ElemSet s);
std::string format_partition(const Partition& p, const std::vector<std::string>& element_labels);
/// Labels of E's carrier (downsets of J) and E''s (all subsets of J).
std::vector<std::string> e_labels(const RepresentationPair& pair);
std::vector<std::string> eprime_labels(const RepresentationPair& pair);

InstanceDescriptor describe(const RepresentationPair& pair, std::string name);

/// D ~ Con E ~ Con E', the explicit congruence families, the onto
/// homomorphism E' -> E and the algebraic identities. Throws
/// Error(NotDistributive) through build_pair.
VerificationReport verify_theorem1(const RepresentationPair& pair, std::string name = "D");
VerificationReport verify_theorem1(const Lattice& d);

/// Inequality chains and the two four-way equivalence blocks.
VerificationReport verify_theorem2(const RepresentationPair& pair, std::string name = "D");
VerificationReport verify_theorem2(const Lattice& d);

/// The conditions behind the T2 clauses. Each one is computed on its
/// own; none consults another.
namespace conditions {

/// X (#) Y <= X ($) Y <= X u Y and X (#) Y <= X n Y, over all subsets of J.
Check prime_inequalities(const RepresentationPair& pair);
/// A # B <= A $ B <= A ^ B <= A v B in D, over all elements.
Check downset_inequalities(const RepresentationPair& pair);

// Forest-like block.
Check meet_below_dollar_prime(const RepresentationPair& pair);
Check dollar_associative(const RepresentationPair& pair);
Check dollar_is_meet(const RepresentationPair& pair);
Check j_forest_like(const RepresentationPair& pair);
/// Forest-likeness read through D's meet: no x, y, z in J with y || z and x <= y ^ z.
Check j_forest_like_via_meet(const RepresentationPair& pair);
/// (A n B n C)^M = (A^M n B n C) u (A n B^M n C) u (A n B n C^M) on downsets.
Check maximal_of_intersection(const RepresentationPair& pair);

// Boolean block.
Check dollar_below_meet_prime(const RepresentationPair& pair);
Check prime_ops_idempotent(const RepresentationPair& pair);
Check dollar_is_sharp(const RepresentationPair& pair);
Check d_is_boolean(const RepresentationPair& pair);

}  // namespace conditions

}  // namespace poslat
