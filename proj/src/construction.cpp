#include "poslat/construction.hpp"

#include <algorithm>

#include "poslat/error.hpp"

namespace poslat {

namespace {

void require_downset(const Poset& j, ElemSet s) {
  if (!j.is_downset(s)) throw Error(ErrorCode::NotADownset, "argument is not a downset of J");
}

}  // namespace

ElemSet sharp_sets(const Poset& j, ElemSet x, ElemSet y) {
  return j.maximal(x) & j.maximal(y);
}

ElemSet dollar_sets(const Poset& j, ElemSet x, ElemSet y) {
  return (j.maximal(x) & j.down(y)) | (j.down(x) & j.maximal(y));
}

ElemSet sharp_down(const Poset& j, ElemSet a, ElemSet b) {
  require_downset(j, a);
  require_downset(j, b);
  return j.down(sharp_sets(j, a, b));
}

ElemSet dollar_down(const Poset& j, ElemSet a, ElemSet b) {
  require_downset(j, a);
  require_downset(j, b);
  return j.down(dollar_sets(j, a, b));
}

Elem RepresentationPair::e_index(ElemSet downset) const {
  auto it = std::lower_bound(e_carrier.begin(), e_carrier.end(), downset, [](ElemSet a, ElemSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  if (it == e_carrier.end() || *it != downset) {
    throw Error(ErrorCode::NotADownset, "set is not in E's carrier");
  }
  return static_cast<Elem>(it - e_carrier.begin());
}

RepresentationPair build_pair(const Lattice& d) {
  if (!is_distributive(d)) throw Error(ErrorCode::NotDistributive, "lattice is not distributive");
  RepresentationPair pair;
  pair.d = d;
  BirkhoffMap bm = birkhoff(d);
  pair.j = std::move(bm.j);
  pair.e_carrier = std::move(bm.downsets.members);
  pair.e_to_d = std::move(bm.to_lattice);
  pair.d_to_e = std::move(bm.from_lattice);

  const Poset& j = pair.j.order;
  const std::size_t k = j.size();
  if (k >= 17 || (std::size_t{1} << k) > kMaxPrimeCarrier) {
    throw Error(ErrorCode::Capacity, "E' would need 2^" + std::to_string(k) + " elements");
  }
  const std::size_t ne = pair.e_carrier.size();
  const std::size_t np = std::size_t{1} << k;

  auto on_e = [&](auto&& op) {
    return [&, op](Elem a, Elem b) { return pair.e_index(op(pair.e_carrier[a], pair.e_carrier[b])); };
  };
  pair.e = FiniteAlgebra(
      ne, {binary_operation("sharp", ne, on_e([&](ElemSet a, ElemSet b) { return sharp_down(j, a, b); })),
           binary_operation("dollar", ne, on_e([&](ElemSet a, ElemSet b) { return dollar_down(j, a, b); })),
           binary_operation("join", ne, on_e([](ElemSet a, ElemSet b) { return a | b; }))});

  auto on_prime = [](auto&& op) {
    return [op](Elem a, Elem b) {
      return RepresentationPair::eprime_index(op(RepresentationPair::eprime_set(a), RepresentationPair::eprime_set(b)));
    };
  };
  pair.eprime = FiniteAlgebra(
      np, {binary_operation("sharp", np, on_prime([&](ElemSet a, ElemSet b) { return sharp_sets(j, a, b); })),
           binary_operation("dollar", np, on_prime([&](ElemSet a, ElemSet b) { return dollar_sets(j, a, b); })),
           binary_operation("join", np, on_prime([](ElemSet a, ElemSet b) { return a | b; }))});
  return pair;
}

RepresentationPair build_pair_from_poset(const Poset& p) {
  SetLattice o = downset_lattice(p);
  std::vector<std::string> labels;
  for (ElemSet s : o.members) {
    std::string text = "{";
    bool first = true;
    s.for_each([&](Elem e) {
      if (!first) text += ",";
      text += p.label(e);
      first = false;
    });
    labels.push_back(text + "}");
  }
  RepresentationPair pair = build_pair(o.lattice.with_labels(std::move(labels)));
  std::vector<std::string> jl;
  for (Elem parent : pair.j.to_parent) {
    ElemSet top = p.maximal(o.members[parent]);
    if (top.size() != 1) throw Error(ErrorCode::Internal, "join-irreducible downset is not principal");
    jl.push_back(p.label(top.min()));
  }
  pair.j.order = pair.j.order.with_labels(std::move(jl));
  return pair;
}

ElemSet hom_f(const RepresentationPair& pair, ElemSet x) {
  return pair.jorder().down(x);
}

Elem hom_f_index(const RepresentationPair& pair, Elem eprime_index) {
  return pair.e_index(hom_f(pair, RepresentationPair::eprime_set(eprime_index)));
}

Partition phi_partition(const Poset& j, const std::vector<ElemSet>& carrier, ElemSet ideal) {
  // X^M ^ Y^M inside the ideal  <=>  X^M and Y^M agree outside it.
  std::vector<std::uint64_t> keys;
  keys.reserve(carrier.size());
  for (ElemSet x : carrier) keys.push_back((j.maximal(x) - ideal).bits());
  return Partition::from_keys(keys);
}

Partition theta_congruence(const RepresentationPair& pair, Elem a) {
  if (a >= pair.d.size()) throw Error(ErrorCode::Index, "element outside D");
  return phi_partition(pair.jorder(), pair.e_carrier, pair.e_carrier[pair.d_to_e[a]]);
}

Partition theta_prime_congruence(const RepresentationPair& pair, ElemSet a) {
  if (!pair.jorder().is_downset(a)) throw Error(ErrorCode::NotADownset, "index set is not a downset of J");
  std::vector<ElemSet> carrier(pair.eprime_size());
  for (Elem i = 0; i < carrier.size(); ++i) carrier[i] = RepresentationPair::eprime_set(i);
  return phi_partition(pair.jorder(), carrier, a);
}

std::vector<Partition> theta_family(const RepresentationPair& pair) {
  std::vector<Partition> out;
  for (Elem a = 0; a < pair.d.size(); ++a) out.push_back(theta_congruence(pair, a));
  return out;
}

std::vector<Partition> prime_family(const RepresentationPair& pair) {
  std::vector<Partition> out;
  for (ElemSet a : pair.e_carrier) out.push_back(theta_prime_congruence(pair, a));
  return out;
}

}  // namespace poslat
