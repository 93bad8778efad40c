#include "poslat/instances.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "poslat/error.hpp"

namespace poslat {

namespace {

std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  return out;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

InstanceFamily InstanceFamily::exhaustive(std::size_t k) {
  InstanceFamily f;
  f.kind = Kind::Exhaustive;
  f.k = k;
  return f;
}

InstanceFamily InstanceFamily::random(std::size_t count, std::size_t size, std::uint64_t seed) {
  InstanceFamily f;
  f.kind = Kind::Random;
  f.count = count;
  f.size = size;
  f.seed = seed;
  return f;
}

InstanceFamily InstanceFamily::named(std::string fixture) {
  InstanceFamily f;
  f.kind = Kind::Fixture;
  f.fixture = std::move(fixture);
  return f;
}

std::string InstanceFamily::describe() const {
  switch (kind) {
    case Kind::Exhaustive: return "exhaustive(k=" + std::to_string(k) + ")";
    case Kind::Random:
      return "random(count=" + std::to_string(count) + ", size=" + std::to_string(size) +
             ", seed=" + std::to_string(seed) + ")";
    case Kind::Fixture: return "fixture(" + fixture + ")";
  }
  return {};
}

std::vector<Poset> labeled_posets(std::size_t k) {
  if (k > kMaxExhaustiveSize) {
    throw Error(ErrorCode::Capacity, "exhaustive enumeration is limited to " +
                                         std::to_string(kMaxExhaustiveSize) + " elements");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < k; ++a)
    for (Elem b = a + 1; b < k; ++b) pairs.emplace_back(a, b);

  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;

  std::vector<Poset> out;
  std::vector<ElemSet> up(k);
  // Each unordered pair is unrelated, below, or above: 3^(k choose 2)
  // candidates, kept when transitive. Antisymmetry holds by construction.
  for (std::size_t code = 0; code < total; ++code) {
    for (Elem e = 0; e < k; ++e) up[e] = ElemSet::single(e);
    std::size_t c = code;
    for (auto [a, b] : pairs) {
      switch (c % 3) {
        case 1: up[a].insert(b); break;
        case 2: up[b].insert(a); break;
        default: break;
      }
      c /= 3;
    }
    bool transitive = true;
    for (Elem e = 0; e < k && transitive; ++e) {
      ElemSet reach;
      up[e].for_each([&](Elem f) { reach |= up[f]; });
      transitive = reach == up[e];
    }
    if (!transitive) continue;
    std::vector<bool> rel(k * k);
    for (Elem a = 0; a < k; ++a) up[a].for_each([&](Elem b) { rel[a * k + b] = true; });
    out.push_back(Poset::from_relation(k, rel).with_labels(letter_labels(k)));
  }
  return out;
}

Poset random_poset(std::size_t n, std::mt19937_64& rng) {
  if (n > ElemSet::kCapacity) throw Error(ErrorCode::Capacity, "random poset too large");
  const double density = unit(rng);
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  std::vector<Cover> edges;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (unit(rng) < density) edges.emplace_back(perm[i], perm[j]);
  return Poset::from_covers(n, edges).with_labels(letter_labels(n));
}

Poset fixture_poset(std::string_view name) {
  auto chain = [](std::size_t n) {
    std::vector<Cover> c;
    for (Elem i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
    return Poset::from_covers(n, c).with_labels(letter_labels(n));
  };
  if (name == "empty") return Poset::from_covers(0, {});
  if (name == "chain2") return chain(2).with_labels({"x", "y"});
  if (name == "chain3") return chain(3);
  if (name == "vposet") {
    std::vector<Cover> c{{0, 1}, {0, 2}};
    return Poset::from_covers(3, c).with_labels({"x", "y", "z"});
  }
  if (name.starts_with("antichain")) {
    const std::string digits(name.substr(9));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      const std::size_t n = std::stoul(digits);
      if (n <= ElemSet::kCapacity) return Poset::from_covers(n, {}).with_labels(letter_labels(n));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

std::vector<Poset> generate(const InstanceFamily& family) {
  switch (family.kind) {
    case InstanceFamily::Kind::Exhaustive: return labeled_posets(family.k);
    case InstanceFamily::Kind::Random: {
      if (family.size > kMaxRandomSize) {
        throw Error(ErrorCode::Capacity, "random posets are limited to " + std::to_string(kMaxRandomSize) +
                                             " elements");
      }
      if (family.size == 0) throw Error(ErrorCode::InvalidArgument, "random poset size must be positive");
      std::mt19937_64 rng(family.seed);
      std::vector<Poset> out;
      for (std::size_t i = 0; i < family.count; ++i) {
        const std::size_t n = 1 + rng() % family.size;
        out.push_back(random_poset(n, rng));
      }
      return out;
    }
    case InstanceFamily::Kind::Fixture: return {fixture_poset(family.fixture)};
  }
  return {};
}

VerificationReport verify_poset(const Poset& p, std::string name, const SweepOptions& options) {
  const RepresentationPair pair = build_pair_from_poset(p);
  VerificationReport report;
  report.instance = describe(pair, name);
  if (options.theorem1) {
    auto r = verify_theorem1(pair, name);
    report.elapsed += r.elapsed;
    for (auto& c : r.clauses) report.clauses.push_back(std::move(c));
  }
  if (options.theorem2) {
    auto r = verify_theorem2(pair, name);
    report.elapsed += r.elapsed;
    for (auto& c : r.clauses) report.clauses.push_back(std::move(c));
  }
  return report;
}

std::vector<VerificationReport> sweep(const InstanceFamily& family, const SweepOptions& options) {
  const std::vector<Poset> posets = generate(family);
  std::vector<VerificationReport> reports(posets.size());
  const std::string base = family.describe();

  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(posets.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < posets.size(); i = next++) {
      try {
        reports[i] = verify_poset(posets[i], base + "#" + std::to_string(i), options);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
  return reports;
}

}  // namespace poslat
