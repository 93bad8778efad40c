#include "poslat/poset.hpp"

#include <algorithm>
#include <numeric>

#include "poslat/error.hpp"

namespace poslat {

namespace {

void check_size(std::size_t n) {
  if (n > ElemSet::kCapacity) {
    throw Error(ErrorCode::Capacity,
                "poset has " + std::to_string(n) + " elements; at most 64 are supported");
  }
}

}  // namespace

Poset Poset::from_covers(std::size_t n, std::span<const Cover> covers) {
  check_size(n);
  Poset p;
  p.down_.resize(n);
  for (Elem e = 0; e < n; ++e) p.down_[e] = ElemSet::single(e);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw Error(ErrorCode::Index, "cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                                        ") out of range for " + std::to_string(n) + " elements");
    }
    if (lo == hi) {
      throw Error(ErrorCode::Cycle, "element " + std::to_string(lo) + " cannot cover itself");
    }
    p.down_[hi].insert(lo);
  }
  // Warshall on bitsets.
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (p.down_[i].contains(k)) p.down_[i] |= p.down_[k];
    }
  }
  p.up_.assign(n, ElemSet{});
  for (Elem b = 0; b < n; ++b) {
    p.down_[b].for_each([&](Elem a) { p.up_[a].insert(b); });
  }
  for (Elem a = 0; a < n; ++a) {
    ElemSet both = (p.down_[a] & p.up_[a]) - ElemSet::single(a);
    if (!both.empty()) {
      throw Error(ErrorCode::Cycle, "covers induce a cycle through elements " +
                                        std::to_string(a) + " and " + std::to_string(both.min()));
    }
  }
  return p;
}

Poset Poset::from_relation(std::size_t n, const std::vector<bool>& leq) {
  check_size(n);
  if (leq.size() != n * n) throw Error(ErrorCode::SizeMismatch, "relation matrix must be n*n");
  Poset p;
  p.down_.assign(n, ElemSet{});
  p.up_.assign(n, ElemSet{});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (leq[a * n + b]) {
        p.down_[b].insert(a);
        p.up_[a].insert(b);
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (!p.down_[a].contains(a)) {
      throw Error(ErrorCode::InvalidArgument, "relation is not reflexive at " + std::to_string(a));
    }
    if ((p.down_[a] & p.up_[a]) != ElemSet::single(a)) {
      throw Error(ErrorCode::InvalidArgument, "relation is not antisymmetric at " + std::to_string(a));
    }
    ElemSet closed;
    p.down_[a].for_each([&](Elem b) { closed |= p.down_[b]; });
    if (closed != p.down_[a]) {
      throw Error(ErrorCode::InvalidArgument, "relation is not transitive below " + std::to_string(a));
    }
  }
  return p;
}

void Poset::check_index(Elem e) const {
  if (e >= size()) {
    throw Error(ErrorCode::Index, "element " + std::to_string(e) + " out of range for poset of size " +
                                      std::to_string(size()));
  }
}

bool Poset::leq(Elem a, Elem b) const {
  check_index(a);
  check_index(b);
  return down_[b].contains(a);
}

ElemSet Poset::principal_down(Elem e) const {
  check_index(e);
  return down_[e];
}

ElemSet Poset::principal_up(Elem e) const {
  check_index(e);
  return up_[e];
}

ElemSet Poset::maximal(ElemSet s) const {
  if (!s.subset_of(carrier())) throw Error(ErrorCode::Index, "set is not contained in the carrier");
  ElemSet out;
  s.for_each([&](Elem e) {
    if (!(up_[e] - ElemSet::single(e)).intersects(s)) out.insert(e);
  });
  return out;
}

ElemSet Poset::minimal(ElemSet s) const {
  if (!s.subset_of(carrier())) throw Error(ErrorCode::Index, "set is not contained in the carrier");
  ElemSet out;
  s.for_each([&](Elem e) {
    if (!(down_[e] - ElemSet::single(e)).intersects(s)) out.insert(e);
  });
  return out;
}

ElemSet Poset::down(ElemSet s) const {
  if (!s.subset_of(carrier())) throw Error(ErrorCode::Index, "set is not contained in the carrier");
  ElemSet out;
  s.for_each([&](Elem e) { out |= down_[e]; });
  return out;
}

ElemSet Poset::up(ElemSet s) const {
  if (!s.subset_of(carrier())) throw Error(ErrorCode::Index, "set is not contained in the carrier");
  ElemSet out;
  s.for_each([&](Elem e) { out |= up_[e]; });
  return out;
}

std::vector<Cover> Poset::covers() const {
  std::vector<Cover> out;
  for (Elem hi = 0; hi < size(); ++hi) {
    ElemSet below = down_[hi] - ElemSet::single(hi);
    maximal(below).for_each([&](Elem lo) { out.emplace_back(lo, hi); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Poset::heights() const {
  const std::size_t n = size();
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  // Fewer elements below means earlier in some linear extension.
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down_[a].size() < down_[b].size(); });
  std::vector<std::size_t> h(n, 0);
  for (Elem e : order) {
    (down_[e] - ElemSet::single(e)).for_each([&](Elem d) { h[e] = std::max(h[e], h[d] + 1); });
  }
  return h;
}

std::vector<ElemSet> Poset::all_downsets(std::size_t limit) const {
  const std::size_t n = size();
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down_[a].size() < down_[b].size(); });

  std::vector<ElemSet> out;
  // Walk a linear extension; an element may join only if everything strictly
  // below it already has.
  auto walk = [&](auto&& self, std::size_t i, ElemSet cur) -> void {
    if (i == n) {
      if (out.size() >= limit) {
        throw Error(ErrorCode::Capacity,
                    "poset has more than " + std::to_string(limit) + " downsets");
      }
      out.push_back(cur);
      return;
    }
    const Elem e = order[i];
    self(self, i + 1, cur);
    if ((down_[e] - ElemSet::single(e)).subset_of(cur)) {
      cur.insert(e);
      self(self, i + 1, cur);
    }
  };
  walk(walk, 0, ElemSet{});
  std::sort(out.begin(), out.end(), [](ElemSet a, ElemSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  return out;
}

bool Poset::is_forest_like(const std::function<bool(Elem, Elem, Elem)>& below_meet) const {
  const Elem n = static_cast<Elem>(size());
  for (Elem y = 0; y < n; ++y) {
    for (Elem z = y + 1; z < n; ++z) {
      if (!incomparable(y, z)) continue;
      for (Elem x = 0; x < n; ++x) {
        bool below = below_meet ? below_meet(x, y, z) : (leq(x, y) && leq(x, z));
        if (below) return false;
      }
    }
  }
  return true;
}

std::string Poset::label(Elem e) const {
  check_index(e);
  if (e < labels_.size()) return labels_[e];
  return std::to_string(e);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size()) {
    throw Error(ErrorCode::SizeMismatch, "label count does not match poset size");
  }
  Poset p = *this;
  p.labels_ = std::move(labels);
  return p;
}

}  // namespace poslat
