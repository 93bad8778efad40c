#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <string>

#include "poslat/poslat.h"

namespace {

struct PosetDeleter {
  void operator()(poslat_poset* p) const { poslat_poset_free(p); }
};
struct WorkspaceDeleter {
  void operator()(poslat_workspace* w) const { poslat_workspace_free(w); }
};
using PosetPtr = std::unique_ptr<poslat_poset, PosetDeleter>;
using WorkspacePtr = std::unique_ptr<poslat_workspace, WorkspaceDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  poslat_string_free(s);
  return out;
}

PosetPtr fixture(const char* name) {
  poslat_poset* p = nullptr;
  REQUIRE(poslat_poset_fixture(name, &p) == POSLAT_OK);
  return PosetPtr(p);
}

WorkspacePtr workspace(const poslat_poset* p) {
  poslat_workspace* w = nullptr;
  REQUIRE(poslat_workspace_from_poset(p, &w) == POSLAT_OK);
  return WorkspacePtr(w);
}

}  // namespace

TEST_CASE("posets through the C API") {
  const uint32_t covers[] = {0, 1, 0, 2};
  poslat_poset* raw = nullptr;
  REQUIRE(poslat_poset_from_covers(3, covers, 2, &raw) == POSLAT_OK);
  PosetPtr v(raw);
  CHECK(poslat_poset_size(v.get()) == 3);
  CHECK(poslat_poset_leq(v.get(), 0, 2) == 1);
  CHECK(poslat_poset_leq(v.get(), 1, 2) == 0);
  CHECK(poslat_poset_leq(v.get(), 1, 7) == -1);
  size_t downsets = 0;
  CHECK(poslat_poset_downset_count(v.get(), &downsets) == POSLAT_OK);
  CHECK(downsets == 5);

  const uint32_t cyc[] = {0, 1, 1, 2, 2, 0};
  poslat_poset* bad = nullptr;
  CHECK(poslat_poset_from_covers(3, cyc, 3, &bad) == POSLAT_ERR_CYCLE);
  CHECK(bad == nullptr);
  CHECK(std::string(poslat_status_name(POSLAT_ERR_CYCLE)) == "CycleError");
  CHECK(std::string(poslat_last_error()).size() > 0);

  const uint32_t out_of_range[] = {0, 5};
  CHECK(poslat_poset_from_covers(3, out_of_range, 1, &bad) == POSLAT_ERR_INDEX);
  CHECK(poslat_poset_from_covers(3, covers, 2, nullptr) == POSLAT_ERR_INVALID_ARGUMENT);
  CHECK(poslat_poset_fixture("nonsense", &bad) == POSLAT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parse errors report their location") {
  poslat_poset* p = nullptr;
  CHECK(poslat_poset_parse("elements: x y\ncovers: x<q\n", &p) == POSLAT_ERR_UNKNOWN_LABEL);
  CHECK(poslat_last_error_line() == 2);
  CHECK(poslat_last_error_column() == 11);
  CHECK(poslat_poset_parse("elements: x x\n", &p) == POSLAT_ERR_DUPLICATE_LABEL);
  REQUIRE(poslat_poset_parse("elements: x y\ncovers: x<y\n", &p) == POSLAT_OK);
  PosetPtr chain(p);
  CHECK(poslat_last_error_line() == 0);
  CHECK(poslat_poset_size(chain.get()) == 2);
}

TEST_CASE("workspaces and reports") {
  auto chain = fixture("chain2");
  auto ws = workspace(chain.get());
  CHECK(poslat_workspace_lattice_size(ws.get()) == 3);
  CHECK(poslat_workspace_algebra_size(ws.get(), POSLAT_ALGEBRA_E) == 3);
  CHECK(poslat_workspace_algebra_size(ws.get(), POSLAT_ALGEBRA_EPRIME) == 4);
  size_t count = 0;
  CHECK(poslat_workspace_congruence_count(ws.get(), POSLAT_ALGEBRA_E, &count) == POSLAT_OK);
  CHECK(count == 3);
  CHECK(poslat_workspace_congruence_count(ws.get(), POSLAT_ALGEBRA_EPRIME, &count) == POSLAT_OK);
  CHECK(count == 4);

  char* json = nullptr;
  REQUIRE(poslat_analyze(ws.get(), &json) == POSLAT_OK);
  CHECK(take(json).find("\"command\": \"analyze\"") != std::string::npos);
  REQUIRE(poslat_construct(ws.get(), POSLAT_ALGEBRA_EPRIME, &json) == POSLAT_OK);
  CHECK(take(json).find("\"command\": \"construct\"") != std::string::npos);
  REQUIRE(poslat_congruences(ws.get(), POSLAT_ALGEBRA_E, &json) == POSLAT_OK);
  CHECK(take(json).find("\"count\": 3") != std::string::npos);

  int passed = -1;
  REQUIRE(poslat_verify(ws.get(), &passed, &json) == POSLAT_OK);
  const std::string first = take(json);
  CHECK(passed == 0);
  REQUIRE(poslat_verify(ws.get(), nullptr, &json) == POSLAT_OK);
  CHECK(take(json) == first);

  REQUIRE(poslat_dot(ws.get(), POSLAT_DOT_POSET, POSLAT_ALGEBRA_E, &json) == POSLAT_OK);
  CHECK(take(json).find("\"y\" -> \"x\";") != std::string::npos);
}

TEST_CASE("lattice workspaces") {
  poslat_poset* p = nullptr;
  REQUIRE(poslat_poset_parse("elements: 0 a b c 1\ncovers: 0<a<1 0<b<1 0<c<1\n", &p) == POSLAT_OK);
  PosetPtr m3(p);
  poslat_workspace* w = nullptr;
  CHECK(poslat_workspace_from_lattice(m3.get(), &w) == POSLAT_ERR_NOT_DISTRIBUTIVE);
  CHECK(w == nullptr);

  auto anti = fixture("antichain2");
  CHECK(poslat_workspace_from_lattice(anti.get(), &w) == POSLAT_ERR_NOT_A_LATTICE);

  REQUIRE(poslat_poset_parse("elements: 0 a 1\ncovers: 0<a<1\n", &p) == POSLAT_OK);
  PosetPtr chain3(p);
  REQUIRE(poslat_workspace_from_lattice(chain3.get(), &w) == POSLAT_OK);
  WorkspacePtr ws(w);
  CHECK(poslat_workspace_lattice_size(ws.get()) == 3);
}

TEST_CASE("sweeps through the C API") {
  char* json = nullptr;
  int passed = -1;
  REQUIRE(poslat_sweep_exhaustive(0, &passed, &json) == POSLAT_OK);
  CHECK(passed == 1);
  CHECK(take(json).find("\"instances\": 1") != std::string::npos);
  CHECK(poslat_sweep_exhaustive(6, &passed, &json) == POSLAT_ERR_CAPACITY);
  CHECK(poslat_sweep_random(3, 11, 1, &passed, &json) == POSLAT_ERR_CAPACITY);
  REQUIRE(poslat_sweep_random(5, 3, 7, &passed, &json) == POSLAT_OK);
  const std::string a = take(json);
  REQUIRE(poslat_sweep_random(5, 3, 7, &passed, &json) == POSLAT_OK);
  CHECK(take(json) == a);
}
