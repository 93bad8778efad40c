#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poslat/construction.hpp"
#include "poslat/instances.hpp"
#include "poslat/verifier.hpp"

namespace poslat {

enum class Which { E, Eprime };
enum class DotKind { Poset, Lattice, Congruences };

/// What a command works on: D with its two algebras, plus P when the input
/// described P (D = O(P)) rather than D itself.
struct Workspace {
  std::optional<Poset> source;
  RepresentationPair pair;

  static Workspace from_poset(const Poset& p);
  /// The poset is D's own order; throws Error(NotALattice) or
  /// Error(NotDistributive).
  static Workspace from_lattice_order(const Poset& d);
};

// JSON documents, two-space indented with a trailing newline. Key order is
// fixed and nothing time-dependent is included unless asked for.

std::string analyze_report(const Workspace& ws);
std::string construct_report(const Workspace& ws, Which which);
std::string congruences_report(const Workspace& ws, Which which);
std::string verify_report(const Workspace& ws, bool& passed);
std::string sweep_report(const InstanceFamily& family, const std::vector<VerificationReport>& reports,
                         bool& passed);
std::string report_json(const VerificationReport& report, bool include_timing = false);

std::string dot_for(const Workspace& ws, DotKind kind, Which which);

}  // namespace poslat
