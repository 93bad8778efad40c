#include "doctest.h"

#include <random>

#include "poslat/document.hpp"
#include "poslat/error.hpp"
#include "poslat/instances.hpp"
#include "poslat/report.hpp"
#include "support/dot.hpp"

using namespace poslat;

namespace {

struct Failure {
  ErrorCode code;
  std::size_t line;
  std::size_t column;
};

Failure parse_failure(std::string_view text) {
  try {
    parse_poset(text).to_poset();
  } catch (const InputError& e) {
    return {e.code(), e.line(), e.column()};
  }
  FAIL("expected InputError for: " << text);
  return {ErrorCode::Internal, 0, 0};
}

Poset from_dot(const dot::Graph& g) {
  std::vector<Cover> covers;
  auto index = [&](const std::string& s) {
    return static_cast<Elem>(std::find(g.nodes.begin(), g.nodes.end(), s) - g.nodes.begin());
  };
  for (const auto& [hi, lo] : g.edges) covers.emplace_back(index(lo), index(hi));
  return Poset::from_covers(g.nodes.size(), covers).with_labels(g.nodes);
}

// Same labels and the same order between them.
bool same_order(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> to_b(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    Elem y = 0;
    while (y < b.size() && b.label(y) != a.label(x)) ++y;
    if (y == b.size()) return false;
    to_b[x] = y;
  }
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(to_b[x], to_b[y])) return false;
  return true;
}

}  // namespace

TEST_CASE("parse_poset") {
  const Poset chain = parse_poset("elements: x y\ncovers: x<y").to_poset();
  CHECK(chain.size() == 2);
  CHECK(chain.leq(0, 1));
  CHECK(chain.label(1) == "y");

  const Poset v = parse_poset("elements: x y z\ncovers: x<y x<z\n").to_poset();
  CHECK(v.incomparable(1, 2));
  CHECK(v.covers().size() == 2);

  const auto doc = parse_poset("# a chain\n\nelements: a b c d   # four\ncovers: a<b<c\ncovers: a < d\n");
  CHECK(doc.labels == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(doc.covers.size() == 3);
  CHECK(doc.cover_locations[2].line == 5);
  const Poset p = doc.to_poset();
  CHECK(p.leq(0, 2));
  CHECK(p.incomparable(2, 3));

  CHECK(parse_poset("elements:\n").to_poset().size() == 0);
  CHECK(parse_poset("").to_poset().size() == 0);
}

TEST_CASE("parse errors carry locations") {
  auto f = parse_failure("elements: x x");
  CHECK(f.code == ErrorCode::DuplicateLabel);
  CHECK(f.line == 1);
  CHECK(f.column == 13);

  f = parse_failure("elements: x y\ncovers: x<q\n");
  CHECK(f.code == ErrorCode::UnknownLabel);
  CHECK(f.line == 2);
  CHECK(f.column == 11);

  f = parse_failure("elements: x y\ncovers: x<y y<x\n");
  CHECK(f.code == ErrorCode::Cycle);
  CHECK(f.line == 2);
  CHECK(f.column == 13);

  CHECK(parse_failure("elements: x y\nelements: z\n").code == ErrorCode::Parse);
  CHECK(parse_failure("elements: x y\nfoo: bar\n").code == ErrorCode::Parse);
  CHECK(parse_failure("elements: x y\ncovers: x<\n").code == ErrorCode::Parse);
  CHECK(parse_failure("elements: x y\ncovers: x<x\n").code == ErrorCode::Cycle);
  CHECK(parse_failure("covers: x<y\n").code == ErrorCode::UnknownLabel);
}

TEST_CASE("DOT output") {
  const Poset chain = fixture_poset("chain2");
  CHECK(poset_dot(chain) ==
        "digraph poset {\n"
        "  node [shape=plaintext];\n"
        "  { rank=same; \"y\"; }\n"
        "  { rank=same; \"x\"; }\n"
        "  \"y\" -> \"x\";\n"
        "}\n");
  const auto g = dot::parse(poset_dot(fixture_poset("vposet")));
  CHECK(g.name == "poset");
  CHECK(g.edges.size() == 2);
  CHECK(g.ranks.size() == 2);
  CHECK(g.ranks[0] == std::vector<std::string>{"y", "z"});
}

TEST_CASE("DOT round trip preserves the order") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 80; ++round) {
    Poset p = random_poset(1 + rng() % 7, rng);
    std::vector<std::string> labels;
    for (Elem e = 0; e < p.size(); ++e) labels.push_back("n" + std::to_string(e));
    p = p.with_labels(labels);
    CHECK(same_order(p, from_dot(dot::parse(poset_dot(p)))));

    const SetLattice o = downset_lattice(p);
    if (o.members.size() > ElemSet::kCapacity) continue;
    std::vector<std::string> names;
    for (ElemSet s : o.members) names.push_back(std::to_string(s.bits()));
    const Lattice l = o.lattice.with_labels(names);
    CHECK(same_order(l.to_poset(), from_dot(dot::parse(lattice_dot(l)))));
  }
}

TEST_CASE("reports are deterministic") {
  const auto ws = Workspace::from_poset(fixture_poset("vposet"));
  CHECK(analyze_report(ws) == analyze_report(Workspace::from_poset(fixture_poset("vposet"))));
  bool passed_a = false, passed_b = true;
  const std::string a = verify_report(ws, passed_a);
  const std::string b = verify_report(ws, passed_b);
  CHECK(a == b);
  CHECK(passed_a == passed_b);
  CHECK(a.back() == '\n');
  CHECK(a.find("elapsed") == std::string::npos);
  CHECK(construct_report(ws, Which::E) == construct_report(ws, Which::E));

  const auto report = verify_poset(fixture_poset("chain2"), "chain2");
  CHECK(report_json(report).find("elapsed") == std::string::npos);
  CHECK(report_json(report, true).find("elapsed") != std::string::npos);
}

TEST_CASE("workspace from a lattice order") {
  const Poset d = parse_poset("elements: 0 a b 1\ncovers: 0<a<1 0<b<1").to_poset();
  const auto ws = Workspace::from_lattice_order(d);
  CHECK_FALSE(ws.source.has_value());
  CHECK(ws.pair.d.size() == 4);
  CHECK(ws.pair.jorder().size() == 2);

  const Poset m3 = parse_poset("elements: 0 a b c 1\ncovers: 0<a<1 0<b<1 0<c<1").to_poset();
  try {
    Workspace::from_lattice_order(m3);
    FAIL("expected NotDistributive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDistributive);
  }
  CHECK_THROWS_AS(Workspace::from_lattice_order(fixture_poset("antichain2")), Error);
}

TEST_CASE("congruence DOT is a Hasse diagram of Con") {
  const auto ws = Workspace::from_poset(fixture_poset("chain2"));
  const auto g = dot::parse(dot_for(ws, DotKind::Congruences, Which::E));
  CHECK(g.name == "congruences");
  CHECK(g.nodes.size() == 3);
  CHECK(g.edges.size() == 2);
}
