#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poslat/lattice.hpp"
#include "poslat/poset.hpp"

namespace poslat {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// A poset file as written:
///
///     # comment
///     elements: x y z
///     covers: x<y x < z
///
/// `covers:` may repeat, and chains such as `a<b<c` expand to consecutive
/// pairs.
struct PosetDocument {
  std::vector<std::string> labels;
  std::vector<SourceLocation> label_locations;
  std::vector<std::pair<std::string, std::string>> covers;  // (lo, hi)
  std::vector<SourceLocation> cover_locations;

  /// Throws InputError(Cycle) located at the cover that closes a cycle.
  Poset to_poset() const;
};

/// Throws InputError with code Parse, DuplicateLabel or UnknownLabel.
PosetDocument parse_poset(std::string_view text);

/// Hasse diagram with covers drawn downward (upper -> lower) and elements of
/// equal height on one rank.
std::string poset_dot(const Poset& p, std::string_view graph_name = "poset");
std::string lattice_dot(const Lattice& l, std::string_view graph_name = "lattice");

}  // namespace poslat
