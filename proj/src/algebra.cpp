#include "poslat/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "poslat/error.hpp"

namespace poslat {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Elem{0}); }

  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// True when x and y were in different classes.
  bool unite(Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

  Partition partition() {
    std::vector<Elem> roots(parent_.size());
    for (Elem i = 0; i < roots.size(); ++i) roots[i] = find(i);
    return Partition::from_keys(roots);
  }

private:
  std::vector<Elem> parent_;
};

std::size_t power(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void check_same_size(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::SizeMismatch, "partitions are over different carriers");
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::size_t n, std::vector<Operation> ops) : n_(n), ops_(std::move(ops)) {
  for (const auto& op : ops_) {
    if (op.arity == 0) throw Error(ErrorCode::InvalidArgument, "operation '" + op.name + "' has arity 0");
    if (op.table.size() != power(n_, op.arity)) {
      throw Error(ErrorCode::InvalidArgument, "operation '" + op.name + "' has a table of the wrong size");
    }
    for (Elem v : op.table) {
      if (v >= n_) throw Error(ErrorCode::InvalidArgument, "operation '" + op.name + "' leaves the carrier");
    }
  }
}

Elem FiniteAlgebra::apply(std::size_t op, std::span<const Elem> args) const {
  const Operation& o = ops_.at(op);
  if (args.size() != o.arity) throw Error(ErrorCode::SizeMismatch, "wrong number of arguments");
  std::size_t idx = 0;
  for (Elem x : args) {
    if (x >= n_) throw Error(ErrorCode::Index, "argument outside the carrier");
    idx = idx * n_ + x;
  }
  return o.table[idx];
}

Partition Partition::discrete(std::size_t n) {
  Partition p;
  p.block_.resize(n);
  std::iota(p.block_.begin(), p.block_.end(), std::uint32_t{0});
  p.blocks_ = n;
  return p;
}

Partition Partition::indiscrete(std::size_t n) {
  Partition p;
  p.block_.assign(n, 0);
  p.blocks_ = n == 0 ? 0 : 1;
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
  std::vector<std::size_t> key(n, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Elem e : blocks[b]) {
      if (e >= n) throw Error(ErrorCode::Index, "block member out of range");
      if (key[e] != blocks.size()) throw Error(ErrorCode::InvalidArgument, "blocks overlap");
      key[e] = b;
    }
  }
  if (std::find(key.begin(), key.end(), blocks.size()) != key.end()) {
    throw Error(ErrorCode::InvalidArgument, "blocks do not cover the carrier");
  }
  return from_keys(key);
}

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out(blocks_);
  for (Elem e = 0; e < block_.size(); ++e) out[block_[e]].push_back(e);
  return out;
}

bool Partition::refines(const Partition& o) const {
  check_same_size(*this, o);
  // Map each of our blocks to the o-block of its first element.
  std::vector<std::uint32_t> target(blocks_, UINT32_MAX);
  for (Elem e = 0; e < block_.size(); ++e) {
    auto& t = target[block_[e]];
    if (t == UINT32_MAX) t = o.block_[e];
    else if (t != o.block_[e]) return false;
  }
  return true;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  check_same_size(p, q);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(p.size());
  for (Elem e = 0; e < p.size(); ++e) keys[e] = {p.block_of(e), q.block_of(e)};
  return Partition::from_keys(keys);
}

Partition partition_join(const Partition& p, const Partition& q) {
  check_same_size(p, q);
  UnionFind uf(p.size());
  std::vector<Elem> first_p(p.block_count(), UINT32_MAX), first_q(q.block_count(), UINT32_MAX);
  for (Elem e = 0; e < p.size(); ++e) {
    auto& fp = first_p[p.block_of(e)];
    if (fp == UINT32_MAX) fp = e; else uf.unite(fp, e);
    auto& fq = first_q[q.block_of(e)];
    if (fq == UINT32_MAX) fq = e; else uf.unite(fq, e);
  }
  return uf.partition();
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  const std::size_t n = a.size();
  if (p.size() != n) throw Error(ErrorCode::SizeMismatch, "partition and algebra carriers differ");
  std::vector<Elem> rep(p.block_count(), UINT32_MAX);
  for (Elem e = 0; e < n; ++e)
    if (rep[p.block_of(e)] == UINT32_MAX) rep[p.block_of(e)] = e;

  // One coordinate at a time: f(.., x, ..) must land with f(.., rep(x), ..).
  for (const auto& op : a.operations()) {
    const std::size_t total = op.table.size();
    for (unsigned pos = 0; pos < op.arity; ++pos) {
      const std::size_t stride = power(n, op.arity - 1 - pos);
      for (std::size_t t = 0; t < total; ++t) {
        const Elem x = static_cast<Elem>((t / stride) % n);
        const Elem r = rep[p.block_of(x)];
        if (r == x) continue;
        const std::size_t u = t - x * stride + r * stride;
        if (!p.same_block(op.table[t], op.table[u])) return false;
      }
    }
  }
  return true;
}

Partition principal_congruence(const FiniteAlgebra& a, Elem x, Elem y) {
  const std::size_t n = a.size();
  if (x >= n || y >= n) throw Error(ErrorCode::Index, "element outside the carrier");
  UnionFind uf(n);
  std::vector<std::pair<Elem, Elem>> work;
  if (uf.unite(x, y)) work.emplace_back(x, y);
  // Each merged pair is pushed through every unary translation
  // z -> f(c1, .., z, .., ck); the merged pairs span the relation, so their
  // images generate the closure.
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    for (const auto& op : a.operations()) {
      const std::size_t total = op.table.size();
      for (unsigned pos = 0; pos < op.arity; ++pos) {
        const std::size_t stride = power(n, op.arity - 1 - pos);
        for (std::size_t hi = 0; hi < total; hi += stride * n) {
          for (std::size_t t = hi; t < hi + stride; ++t) {
            const Elem fu = op.table[t + u * stride];
            const Elem fv = op.table[t + v * stride];
            if (uf.unite(fu, fv)) work.emplace_back(fu, fv);
          }
        }
      }
    }
  }
  return uf.partition();
}

std::size_t CongruenceLattice::find(const Partition& p) const {
  auto it = std::lower_bound(members.begin(), members.end(), p);
  if (it == members.end() || *it != p) return members.size();
  return static_cast<std::size_t>(it - members.begin());
}

Lattice CongruenceLattice::to_lattice() const {
  const std::size_t n = members.size();
  std::vector<char> leq(n * n);
  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      leq[a * n + b] = members[a].refines(members[b]) ? 1 : 0;
      if (b < a) {
        meet[a * n + b] = meet[b * n + a];
        join[a * n + b] = join[b * n + a];
        continue;
      }
      auto m = find(partition_meet(members[a], members[b]));
      auto j = find(partition_join(members[a], members[b]));
      if (m == n || j == n) throw Error(ErrorCode::Internal, "congruence set is not closed");
      meet[a * n + b] = static_cast<Elem>(m);
      join[a * n + b] = static_cast<Elem>(j);
    }
  }
  return Lattice::from_tables(n, std::move(leq), std::move(meet), std::move(join));
}

CongruenceLattice congruences_up_to(const FiniteAlgebra& a, std::size_t limit) {
  const std::size_t n = a.size();
  // Distinct principal congruences, each with a generating pair.
  std::set<Partition> seen;
  std::vector<std::pair<Partition, std::pair<Elem, Elem>>> principals;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      Partition p = principal_congruence(a, x, y);
      if (seen.insert(p).second) principals.push_back({std::move(p), {x, y}});
    }

  // Every congruence is a join of principal ones, so joining principals onto
  // discovered congruences until nothing new appears reaches all of Con A.
  std::set<Partition> found{Partition::discrete(n)};
  std::vector<Partition> work{Partition::discrete(n)};
  while (!work.empty()) {
    Partition cur = std::move(work.back());
    work.pop_back();
    for (const auto& [pr, gen] : principals) {
      if (cur.same_block(gen.first, gen.second)) continue;
      Partition next = partition_join(cur, pr);
      if (!found.insert(next).second) continue;
      if (found.size() > limit) return CongruenceLattice{{found.begin(), found.end()}, false};
      work.push_back(std::move(next));
    }
  }
  return CongruenceLattice{{found.begin(), found.end()}, true};
}

CongruenceLattice congruence_lattice(const FiniteAlgebra& a) {
  CongruenceLattice con = congruences_up_to(a, kMaxCongruences);
  if (!con.complete) {
    throw Error(ErrorCode::TooLarge, "algebra has more than " + std::to_string(kMaxCongruences) + " congruences");
  }
  return con;
}

std::vector<Partition> congruences_bruteforce(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  if (n > kBruteforceLimit) {
    throw Error(ErrorCode::TooLarge, "brute-force enumeration is limited to carriers of " +
                                         std::to_string(kBruteforceLimit) + " elements");
  }
  std::vector<Partition> out;
  // Restricted growth strings enumerate each partition once, in
  // lexicographic order.
  std::vector<std::uint32_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t next_block) -> void {
    if (i == n) {
      Partition p = Partition::from_keys(rgs);
      if (is_congruence(a, p)) out.push_back(std::move(p));
      return;
    }
    for (std::uint32_t b = 0; b <= next_block; ++b) {
      rgs[i] = b;
      self(self, i + 1, b == next_block ? next_block + 1 : next_block);
    }
  };
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  rgs[0] = 0;
  rec(rec, 1, 1);
  return out;
}

}  // namespace poslat
