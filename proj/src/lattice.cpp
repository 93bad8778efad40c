#include "poslat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "poslat/error.hpp"

namespace poslat {

namespace {

std::string pair_text(Elem a, Elem b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Bottom and top from a filled leq table; both exist once all pairwise meets
// and joins do and the carrier is nonempty.
std::pair<Elem, Elem> bounds(std::size_t n, const std::vector<char>& leq) {
  Elem bottom = 0;
  Elem top = 0;
  for (Elem x = 0; x < n; ++x) {
    if (leq[x * n + bottom] != 0) bottom = x;
    if (leq[top * n + x] != 0) top = x;
  }
  return {bottom, top};
}

void check_table_size(std::size_t n) {
  if (n > kMaxLatticeSize) {
    throw Error(ErrorCode::Capacity, "lattice has " + std::to_string(n) + " elements, limit is " +
                                         std::to_string(kMaxLatticeSize));
  }
}

}  // namespace


std::size_t Lattice::index(Elem a, Elem b) const {
  if (a >= n_ || b >= n_) {
    throw Error(ErrorCode::Index, "lattice element out of range: " + pair_text(a, b));
  }
  return static_cast<std::size_t>(a) * n_ + b;
}

Lattice Lattice::from_tables(std::size_t n, std::vector<char> leq, std::vector<Elem> meet,
                             std::vector<Elem> join) {
  if (n == 0) throw Error(ErrorCode::NotALattice, "a lattice needs at least one element");
  check_table_size(n);
  if (leq.size() != n * n || meet.size() != n * n || join.size() != n * n) {
    throw Error(ErrorCode::SizeMismatch, "lattice tables must be n*n");
  }
  Lattice l;
  l.n_ = n;
  l.leq_ = std::move(leq);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  std::tie(l.bottom_, l.top_) = bounds(n, l.leq_);
  return l;
}

Lattice Lattice::from_order(std::size_t n, const std::function<bool(Elem, Elem)>& leq) {
  if (n == 0) throw Error(ErrorCode::NotALattice, "a lattice needs at least one element");
  check_table_size(n);
  std::vector<char> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table[a * n + b] = leq(a, b) ? 1 : 0;

  auto le = [&](Elem a, Elem b) { return table[a * n + b] != 0; };
  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      std::optional<Elem> glb, lub;
      for (Elem c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b) && (!glb || le(*glb, c))) glb = c;
        if (le(a, c) && le(b, c) && (!lub || le(c, *lub))) lub = c;
      }
      // The candidates found above are maximal/minimal only if every other
      // bound sits below/above them.
      for (Elem c = 0; c < n && glb; ++c)
        if (le(c, a) && le(c, b) && !le(c, *glb)) glb.reset();
      for (Elem c = 0; c < n && lub; ++c)
        if (le(a, c) && le(b, c) && !le(*lub, c)) lub.reset();
      if (!glb) throw Error(ErrorCode::NotALattice, "no greatest lower bound for " + pair_text(a, b));
      if (!lub) throw Error(ErrorCode::NotALattice, "no least upper bound for " + pair_text(a, b));
      meet[a * n + b] = meet[b * n + a] = *glb;
      join[a * n + b] = join[b * n + a] = *lub;
    }
  }
  return from_tables(n, std::move(table), std::move(meet), std::move(join));
}

Lattice Lattice::from_poset(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorCode::NotALattice, "a lattice needs at least one element");
  check_table_size(n);
  std::vector<char> table(n * n);
  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[a * n + b] = p.leq(a, b) ? 1 : 0;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      ElemSet lower = p.principal_down(a) & p.principal_down(b);
      ElemSet upper = p.principal_up(a) & p.principal_up(b);
      ElemSet glb = p.maximal(lower);
      ElemSet lub = p.minimal(upper);
      if (glb.size() != 1) throw Error(ErrorCode::NotALattice, "no greatest lower bound for " + pair_text(a, b));
      if (lub.size() != 1) throw Error(ErrorCode::NotALattice, "no least upper bound for " + pair_text(a, b));
      meet[a * n + b] = meet[b * n + a] = glb.min();
      join[a * n + b] = join[b * n + a] = lub.min();
    }
  }
  Lattice l = from_tables(n, std::move(table), std::move(meet), std::move(join));
  l.labels_ = p.labels();
  return l;
}

Elem Lattice::join_of(std::span<const Elem> s) const {
  Elem acc = bottom_;
  for (Elem e : s) acc = join(acc, e);
  return acc;
}

Elem Lattice::meet_of(std::span<const Elem> s) const {
  Elem acc = top_;
  for (Elem e : s) acc = meet(acc, e);
  return acc;
}

std::vector<Cover> Lattice::covers() const {
  std::vector<Cover> out;
  for (Elem b = 0; b < n_; ++b) {
    for (Elem a = 0; a < n_; ++a) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n_ && cover; ++c) {
        if (less(a, c) && less(c, b)) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Lattice::heights() const {
  std::vector<std::size_t> below(n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (leq(a, b)) ++below[b];
  std::vector<Elem> order(n_);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return below[a] < below[b]; });
  std::vector<std::size_t> h(n_, 0);
  auto cov = covers();
  std::vector<std::vector<Elem>> lower(n_);
  for (auto [lo, hi] : cov) lower[hi].push_back(lo);
  for (Elem e : order) {
    for (Elem d : lower[e]) h[e] = std::max(h[e], h[d] + 1);
  }
  return h;
}

Poset Lattice::to_poset() const {
  std::vector<bool> rel(n_ * n_);
  for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = leq_[i] != 0;
  Poset p = Poset::from_relation(n_, rel);
  return labels_.empty() ? p : p.with_labels(labels_);
}

std::string Lattice::label(Elem e) const {
  if (e >= n_) throw Error(ErrorCode::Index, "lattice element " + std::to_string(e) + " out of range");
  if (e < labels_.size()) return labels_[e];
  return std::to_string(e);
}

Lattice Lattice::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != n_) throw Error(ErrorCode::SizeMismatch, "label count does not match lattice size");
  Lattice l = *this;
  l.labels_ = std::move(labels);
  return l;
}

Elem SetLattice::find(ElemSet s) const {
  auto it = index_of.find(s.bits());
  if (it == index_of.end()) throw Error(ErrorCode::NotADownset, "set is not a member of the lattice");
  return it->second;
}

SetLattice downset_lattice(const Poset& p) {
  SetLattice out;
  out.members = p.all_downsets(kMaxLatticeSize);
  const std::size_t n = out.members.size();
  for (Elem i = 0; i < n; ++i) out.index_of.emplace(out.members[i].bits(), i);
  std::vector<char> leq(n * n);
  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      leq[a * n + b] = out.members[a].subset_of(out.members[b]) ? 1 : 0;
      meet[a * n + b] = out.find(out.members[a] & out.members[b]);
      join[a * n + b] = out.find(out.members[a] | out.members[b]);
    }
  }
  out.lattice = Lattice::from_tables(n, std::move(leq), std::move(meet), std::move(join));
  return out;
}

bool is_distributive(const Lattice& l) {
  const Elem n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), l.join(a, c))) return false;
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
      }
  return true;
}

bool is_boolean(const Lattice& l) {
  if (!is_distributive(l)) return false;
  const Elem n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x) {
    bool complemented = false;
    for (Elem y = 0; y < n && !complemented; ++y) {
      complemented = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    }
    if (!complemented) return false;
  }
  return true;
}

std::vector<Elem> join_irreducible_elements(const Lattice& l) {
  const Elem n = static_cast<Elem>(l.size());
  std::vector<char> reducible(n, 0);
  reducible[l.bottom()] = 1;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      Elem j = l.join(a, b);
      if (j != a && j != b) reducible[j] = 1;
    }
  std::vector<Elem> out;
  for (Elem x = 0; x < n; ++x)
    if (reducible[x] == 0) out.push_back(x);
  return out;
}

JPoset join_irreducibles(const Lattice& l) {
  JPoset jp;
  jp.to_parent = join_irreducible_elements(l);
  const std::size_t k = jp.to_parent.size();
  if (k > ElemSet::kCapacity) {
    throw Error(ErrorCode::Capacity, "lattice has " + std::to_string(k) +
                                         " join-irreducibles; at most 64 are supported");
  }
  std::vector<bool> rel(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) rel[a * k + b] = l.leq(jp.to_parent[a], jp.to_parent[b]);
  jp.order = Poset::from_relation(k, rel);
  if (!l.labels().empty()) {
    std::vector<std::string> labels;
    for (Elem e : jp.to_parent) labels.push_back(l.label(e));
    jp.order = jp.order.with_labels(std::move(labels));
  }
  return jp;
}

std::vector<Elem> atoms(const Lattice& l) {
  std::vector<Elem> out;
  for (auto [lo, hi] : l.covers())
    if (lo == l.bottom()) out.push_back(hi);
  std::sort(out.begin(), out.end());
  return out;
}

BirkhoffMap birkhoff(const Lattice& l) {
  if (!is_distributive(l)) throw Error(ErrorCode::NotDistributive, "lattice is not distributive");
  BirkhoffMap m;
  m.j = join_irreducibles(l);
  m.downsets = downset_lattice(m.j.order);
  const std::size_t n = m.downsets.members.size();
  if (n != l.size()) {
    throw Error(ErrorCode::Internal, "downset count does not match lattice size");
  }
  m.to_lattice.resize(n);
  for (Elem i = 0; i < n; ++i) {
    std::vector<Elem> parents;
    m.downsets.members[i].for_each([&](Elem j) { parents.push_back(m.j.to_parent[j]); });
    m.to_lattice[i] = l.join_of(parents);
  }
  m.from_lattice.resize(l.size());
  for (Elem d = 0; d < l.size(); ++d) {
    ElemSet below;
    for (Elem j = 0; j < m.j.to_parent.size(); ++j)
      if (l.leq(m.j.to_parent[j], d)) below.insert(j);
    m.from_lattice[d] = m.downsets.find(below);
  }
  const Lattice& o = m.downsets.lattice;
  for (Elem a = 0; a < n; ++a) {
    if (m.from_lattice[m.to_lattice[a]] != a) throw Error(ErrorCode::Internal, "Birkhoff map is not bijective");
    for (Elem b = 0; b < n; ++b) {
      if (m.to_lattice[o.meet(a, b)] != l.meet(m.to_lattice[a], m.to_lattice[b]) ||
          m.to_lattice[o.join(a, b)] != l.join(m.to_lattice[a], m.to_lattice[b])) {
        throw Error(ErrorCode::Internal, "Birkhoff map does not preserve meet and join");
      }
    }
  }
  return m;
}

namespace {

struct Fingerprint {
  std::size_t height;
  std::size_t upper_covers;
  std::size_t lower_covers;
  bool join_irreducible;
  auto operator<=>(const Fingerprint&) const = default;
};

std::vector<Fingerprint> fingerprints(const Lattice& l) {
  std::vector<Fingerprint> fp(l.size());
  auto h = l.heights();
  for (Elem e = 0; e < l.size(); ++e) fp[e].height = h[e];
  for (auto [lo, hi] : l.covers()) {
    ++fp[lo].upper_covers;
    ++fp[hi].lower_covers;
  }
  for (Elem e : join_irreducible_elements(l)) fp[e].join_irreducible = true;
  return fp;
}

}  // namespace

std::optional<std::vector<Elem>> lattice_isomorphic(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto fa = fingerprints(a);
  auto fb = fingerprints(b);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Assign in order of height so comparabilities with already-mapped
  // elements prune early.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) { return fa[x].height < fa[y].height; });

  std::vector<Elem> map(n, 0);
  std::vector<char> used(n, 0);
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const Elem x = order[i];
    for (Elem y = 0; y < n; ++y) {
      if (used[y] != 0 || fa[x] != fb[y]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k) {
        const Elem w = order[k];
        consistent = a.leq(w, x) == b.leq(map[w], y) && a.leq(x, w) == b.leq(y, map[w]);
      }
      if (!consistent) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, i + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (map[a.meet(x, y)] != b.meet(map[x], map[y]) || map[a.join(x, y)] != b.join(map[x], map[y]))
        return std::nullopt;
  return map;
}

}  // namespace poslat
