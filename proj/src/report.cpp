#include "poslat/report.hpp"

#include <map>

#include "json.hpp"

#include "poslat/document.hpp"
#include "poslat/error.hpp"

namespace poslat {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

Json to_json(const Facts& facts) {
  Json out = Json::object();
  for (const auto& [k, v] : facts) out[k] = to_json(v);
  return out;
}

Json clause_json(const ClauseResult& c) {
  Json out;
  out["id"] = c.id;
  out["description"] = c.description;
  out["passed"] = c.passed;
  out["facts"] = to_json(c.facts);
  if (!c.witness.empty()) out["witness"] = to_json(c.witness);
  return out;
}

Json instance_json(const InstanceDescriptor& d) {
  Json out;
  out["name"] = d.name;
  out["join_irreducibles"] = d.poset_size;
  out["lattice_size"] = d.lattice_size;
  Json covers = Json::array();
  for (const auto& [lo, hi] : d.covers) covers.push_back(lo + "<" + hi);
  out["covers"] = covers;
  return out;
}

Json report_object(const VerificationReport& r, bool include_timing) {
  Json out;
  out["instance"] = instance_json(r.instance);
  out["passed"] = r.passed();
  Json clauses = Json::array();
  for (const auto& c : r.clauses) clauses.push_back(clause_json(c));
  out["clauses"] = clauses;
  if (include_timing) out["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return out;
}

Json labels_of(const Poset& p) {
  Json out = Json::array();
  for (Elem e = 0; e < p.size(); ++e) out.push_back(p.label(e));
  return out;
}

Json labels_of(const Lattice& l, const std::vector<Elem>& elems) {
  Json out = Json::array();
  for (Elem e : elems) out.push_back(l.label(e));
  return out;
}

Json covers_of(const Poset& p) {
  Json out = Json::array();
  for (auto [lo, hi] : p.covers()) out.push_back(p.label(lo) + "<" + p.label(hi));
  return out;
}

const char* which_name(Which w) { return w == Which::E ? "E" : "Eprime"; }

const FiniteAlgebra& algebra(const Workspace& ws, Which w) {
  return w == Which::E ? ws.pair.e : ws.pair.eprime;
}

std::vector<std::string> carrier_labels(const Workspace& ws, Which w) {
  return w == Which::E ? e_labels(ws.pair) : eprime_labels(ws.pair);
}

}  // namespace

Workspace Workspace::from_poset(const Poset& p) {
  Workspace ws;
  ws.source = p;
  ws.pair = build_pair_from_poset(p);
  return ws;
}

Workspace Workspace::from_lattice_order(const Poset& d) {
  Workspace ws;
  ws.pair = build_pair(Lattice::from_poset(d));
  return ws;
}

std::string analyze_report(const Workspace& ws) {
  const RepresentationPair& pair = ws.pair;
  const Lattice& d = pair.d;
  Json out;
  out["command"] = "analyze";
  Json input;
  if (ws.source) {
    input["kind"] = "poset";
    input["elements"] = labels_of(*ws.source);
    input["covers"] = covers_of(*ws.source);
    input["forest_like"] = ws.source->is_forest_like();
  } else {
    input["kind"] = "lattice";
  }
  out["input"] = input;

  Json lat;
  lat["size"] = d.size();
  std::vector<Elem> all(d.size());
  for (Elem e = 0; e < d.size(); ++e) all[e] = e;
  lat["elements"] = labels_of(d, all);
  Json covers = Json::array();
  for (auto [lo, hi] : d.covers()) covers.push_back(d.label(lo) + "<" + d.label(hi));
  lat["covers"] = covers;
  lat["bottom"] = d.label(d.bottom());
  lat["top"] = d.label(d.top());
  lat["distributive"] = is_distributive(d);
  lat["boolean"] = is_boolean(d);
  lat["join_irreducibles"] = labels_of(d, pair.j.to_parent);
  lat["atoms"] = labels_of(d, atoms(d));
  out["lattice"] = lat;

  Json jp;
  jp["size"] = pair.jorder().size();
  jp["elements"] = labels_of(pair.jorder());
  jp["covers"] = covers_of(pair.jorder());
  jp["forest_like"] = pair.jorder().is_forest_like();
  out["join_irreducible_poset"] = jp;

  out["algebras"] = {{"E", {{"size", pair.e.size()}}}, {"Eprime", {{"size", pair.eprime.size()}}}};
  return dump(out);
}

std::string construct_report(const Workspace& ws, Which which) {
  const FiniteAlgebra& a = algebra(ws, which);
  const auto labels = carrier_labels(ws, which);
  static const char* plain[] = {"#", "$", "v"};
  static const char* primed[] = {"(#)", "($)", "u"};
  Json out;
  out["command"] = "construct";
  out["algebra"] = which_name(which);
  out["size"] = a.size();
  out["elements"] = labels;
  Json ops = Json::array();
  for (std::size_t i = 0; i < a.operations().size(); ++i) {
    const Operation& op = a.operations()[i];
    Json table = Json::array();
    for (Elem x = 0; x < a.size(); ++x) {
      Json row = Json::array();
      for (Elem y = 0; y < a.size(); ++y) row.push_back(op.table[x * a.size() + y]);
      table.push_back(row);
    }
    ops.push_back({{"name", op.name}, {"symbol", which == Which::E ? plain[i] : primed[i]}, {"table", table}});
  }
  out["operations"] = ops;
  return dump(out);
}

std::string congruences_report(const Workspace& ws, Which which) {
  const RepresentationPair& pair = ws.pair;
  const FiniteAlgebra& a = algebra(ws, which);
  const auto labels = carrier_labels(ws, which);
  const CongruenceLattice con = congruence_lattice(a);

  // Family member index: D element (for E) or downset of J (for E').
  std::map<Partition, std::string> family;
  if (which == Which::E) {
    auto fam = theta_family(pair);
    for (Elem d = 0; d < fam.size(); ++d) family.emplace(fam[d], pair.d.label(d));
  } else {
    auto fam = prime_family(pair);
    for (std::size_t i = 0; i < fam.size(); ++i) family.emplace(fam[i], format_set(pair.jorder(), pair.e_carrier[i]));
  }

  Json out;
  out["command"] = "congruences";
  out["algebra"] = which_name(which);
  out["carrier"] = labels;
  out["count"] = con.members.size();
  out["lattice_size"] = pair.d.size();
  out["isomorphic_to_lattice"] = lattice_isomorphic(con.to_lattice(), pair.d).has_value();
  Json list = Json::array();
  for (const auto& p : con.members) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks()) {
      Json block = Json::array();
      for (Elem e : b) block.push_back(labels[e]);
      blocks.push_back(block);
    }
    Json entry;
    entry["blocks"] = blocks;
    auto it = family.find(p);
    entry["theta"] = it == family.end() ? Json(nullptr) : Json(it->second);
    list.push_back(entry);
  }
  out["congruences"] = list;
  return dump(out);
}

std::string report_json(const VerificationReport& report, bool include_timing) {
  return dump(report_object(report, include_timing));
}

std::string verify_report(const Workspace& ws, bool& passed) {
  const VerificationReport t1 = verify_theorem1(ws.pair, "input");
  const VerificationReport t2 = verify_theorem2(ws.pair, "input");
  passed = t1.passed() && t2.passed();
  Json out;
  out["command"] = "verify";
  out["passed"] = passed;
  out["theorem1"] = report_object(t1, false);
  out["theorem2"] = report_object(t2, false);
  return dump(out);
}

std::string sweep_report(const InstanceFamily& family, const std::vector<VerificationReport>& reports,
                         bool& passed) {
  std::size_t ok = 0;
  Json failures = Json::object();
  Json examples = Json::array();
  for (const auto& r : reports) {
    if (r.passed()) {
      ++ok;
      continue;
    }
    for (const auto& c : r.clauses) {
      if (c.passed) continue;
      failures[c.id] = failures.value(c.id, 0) + 1;
    }
    if (examples.size() < 5) {
      Json e;
      e["instance"] = instance_json(r.instance);
      Json failed = Json::array();
      for (const auto& c : r.clauses)
        if (!c.passed) failed.push_back(clause_json(c));
      e["failed_clauses"] = failed;
      examples.push_back(e);
    }
  }
  passed = ok == reports.size();
  Json out;
  out["command"] = "sweep";
  out["family"] = family.describe();
  out["instances"] = reports.size();
  out["passed_instances"] = ok;
  out["failed_instances"] = reports.size() - ok;
  out["passed"] = passed;
  out["clause_failures"] = failures;
  out["first_failures"] = examples;
  return dump(out);
}

std::string dot_for(const Workspace& ws, DotKind kind, Which which) {
  switch (kind) {
    case DotKind::Poset:
      return ws.source ? poset_dot(*ws.source) : poset_dot(ws.pair.d.to_poset());
    case DotKind::Lattice: return lattice_dot(ws.pair.d);
    case DotKind::Congruences: {
      const auto labels = carrier_labels(ws, which);
      const CongruenceLattice con = congruence_lattice(algebra(ws, which));
      std::vector<std::string> names;
      for (const auto& p : con.members) names.push_back(format_partition(p, labels));
      return lattice_dot(con.to_lattice().with_labels(std::move(names)), "congruences");
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown DOT kind");
}

}  // namespace poslat
