#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "poslat/poset.hpp"
#include "poslat/verifier.hpp"

namespace poslat {

inline constexpr std::size_t kMaxExhaustiveSize = 5;
inline constexpr std::size_t kMaxRandomSize = 10;

struct InstanceFamily {
  enum class Kind { Exhaustive, Random, Fixture };

  Kind kind = Kind::Fixture;
  std::size_t k = 0;      // exhaustive: poset size
  std::size_t count = 0;  // random: number of posets
  std::size_t size = 0;   // random: maximum poset size (each draw is 1..size)
  std::uint64_t seed = 0;
  std::string fixture;

  static InstanceFamily exhaustive(std::size_t k);
  static InstanceFamily random(std::size_t count, std::size_t size, std::uint64_t seed);
  static InstanceFamily named(std::string fixture);

  std::string describe() const;
};

/// Every labeled poset on k elements exactly once, in a fixed order.
std::vector<Poset> labeled_posets(std::size_t k);

/// Random strict upper-triangular relation under a random relabeling, closed
/// transitively. Edge density is itself drawn per poset.
Poset random_poset(std::size_t n, std::mt19937_64& rng);

/// "chain2", "chain3", "vposet", "antichain2", "antichain3", "antichain<n>",
/// "empty". Elements carry letter labels. Throws Error(InvalidArgument).
Poset fixture_poset(std::string_view name);

/// Throws Error(Capacity) past kMaxExhaustiveSize / kMaxRandomSize.
std::vector<Poset> generate(const InstanceFamily& family);

struct SweepOptions {
  bool theorem1 = true;
  bool theorem2 = true;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// One report per generated P with D = O(P), in generation order.
std::vector<VerificationReport> sweep(const InstanceFamily& family, const SweepOptions& options = {});

/// Verification of both theorems for one P, merged into a single report.
VerificationReport verify_poset(const Poset& p, std::string name, const SweepOptions& options = {});

}  // namespace poslat
