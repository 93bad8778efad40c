#include "poslat/poslat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "poslat/document.hpp"
#include "poslat/error.hpp"
#include "poslat/instances.hpp"
#include "poslat/report.hpp"

struct poslat_poset {
  poslat::Poset value;
};

struct poslat_workspace {
  poslat::Workspace value;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

poslat_status status_of(poslat::ErrorCode code) {
  using poslat::ErrorCode;
  switch (code) {
    case ErrorCode::Index: return POSLAT_ERR_INDEX;
    case ErrorCode::Cycle: return POSLAT_ERR_CYCLE;
    case ErrorCode::Capacity: return POSLAT_ERR_CAPACITY;
    case ErrorCode::NotALattice: return POSLAT_ERR_NOT_A_LATTICE;
    case ErrorCode::NotDistributive: return POSLAT_ERR_NOT_DISTRIBUTIVE;
    case ErrorCode::SizeMismatch: return POSLAT_ERR_SIZE_MISMATCH;
    case ErrorCode::TooLarge: return POSLAT_ERR_TOO_LARGE;
    case ErrorCode::NotADownset: return POSLAT_ERR_NOT_A_DOWNSET;
    case ErrorCode::Parse: return POSLAT_ERR_PARSE;
    case ErrorCode::DuplicateLabel: return POSLAT_ERR_DUPLICATE_LABEL;
    case ErrorCode::UnknownLabel: return POSLAT_ERR_UNKNOWN_LABEL;
    case ErrorCode::InvalidArgument: return POSLAT_ERR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return POSLAT_ERR_INTERNAL;
  }
  return POSLAT_ERR_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <typename F>
poslat_status guarded(F&& f) {
  last_error = {};
  try {
    f();
    return POSLAT_OK;
  } catch (const poslat::InputError& e) {
    last_error = {e.what(), e.line(), e.column()};
    return status_of(e.code());
  } catch (const poslat::Error& e) {
    last_error = {e.what(), 0, 0};
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = {"out of memory", 0, 0};
    return POSLAT_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = {e.what(), 0, 0};
    return POSLAT_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

poslat::Which which_of(poslat_algebra a) {
  return a == POSLAT_ALGEBRA_EPRIME ? poslat::Which::Eprime : poslat::Which::E;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw poslat::Error(poslat::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* poslat_status_name(poslat_status status) {
  switch (status) {
    case POSLAT_OK: return "OK";
    case POSLAT_ERR_INDEX: return "IndexError";
    case POSLAT_ERR_CYCLE: return "CycleError";
    case POSLAT_ERR_CAPACITY: return "CapacityError";
    case POSLAT_ERR_NOT_A_LATTICE: return "NotALattice";
    case POSLAT_ERR_NOT_DISTRIBUTIVE: return "NotDistributive";
    case POSLAT_ERR_SIZE_MISMATCH: return "SizeMismatch";
    case POSLAT_ERR_TOO_LARGE: return "TooLarge";
    case POSLAT_ERR_NOT_A_DOWNSET: return "NotADownset";
    case POSLAT_ERR_PARSE: return "ParseError";
    case POSLAT_ERR_DUPLICATE_LABEL: return "DuplicateLabel";
    case POSLAT_ERR_UNKNOWN_LABEL: return "UnknownLabel";
    case POSLAT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case POSLAT_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* poslat_last_error(void) { return last_error.message.c_str(); }
size_t poslat_last_error_line(void) { return last_error.line; }
size_t poslat_last_error_column(void) { return last_error.column; }

void poslat_string_free(char* s) { std::free(s); }

poslat_status poslat_poset_from_covers(size_t n, const uint32_t* covers, size_t count, poslat_poset** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(covers, "covers");
    std::vector<poslat::Cover> edges;
    for (size_t i = 0; i < count; ++i) edges.emplace_back(covers[2 * i], covers[2 * i + 1]);
    *out = new poslat_poset{poslat::Poset::from_covers(n, edges)};
  });
}

poslat_status poslat_poset_parse(const char* text, poslat_poset** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new poslat_poset{poslat::parse_poset(text).to_poset()};
  });
}

poslat_status poslat_poset_fixture(const char* name, poslat_poset** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new poslat_poset{poslat::fixture_poset(name)};
  });
}

void poslat_poset_free(poslat_poset* p) { delete p; }

size_t poslat_poset_size(const poslat_poset* p) { return p == nullptr ? 0 : p->value.size(); }

int poslat_poset_leq(const poslat_poset* p, uint32_t a, uint32_t b) {
  if (p == nullptr || a >= p->value.size() || b >= p->value.size()) return -1;
  return p->value.leq(a, b) ? 1 : 0;
}

poslat_status poslat_poset_downset_count(const poslat_poset* p, size_t* out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = p->value.all_downsets().size();
  });
}

poslat_status poslat_workspace_from_poset(const poslat_poset* p, poslat_workspace** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = new poslat_workspace{poslat::Workspace::from_poset(p->value)};
  });
}

poslat_status poslat_workspace_from_lattice(const poslat_poset* d, poslat_workspace** out) {
  return guarded([&] {
    require(d, "poset");
    require(out, "out");
    *out = new poslat_workspace{poslat::Workspace::from_lattice_order(d->value)};
  });
}

void poslat_workspace_free(poslat_workspace* ws) { delete ws; }

size_t poslat_workspace_lattice_size(const poslat_workspace* ws) {
  return ws == nullptr ? 0 : ws->value.pair.d.size();
}

size_t poslat_workspace_algebra_size(const poslat_workspace* ws, poslat_algebra which) {
  if (ws == nullptr) return 0;
  return which == POSLAT_ALGEBRA_EPRIME ? ws->value.pair.eprime.size() : ws->value.pair.e.size();
}

poslat_status poslat_workspace_congruence_count(const poslat_workspace* ws, poslat_algebra which, size_t* out) {
  return guarded([&] {
    require(ws, "workspace");
    require(out, "out");
    const auto& a = which == POSLAT_ALGEBRA_EPRIME ? ws->value.pair.eprime : ws->value.pair.e;
    *out = poslat::congruence_lattice(a).members.size();
  });
}

poslat_status poslat_analyze(const poslat_workspace* ws, char** json) {
  return guarded([&] {
    require(ws, "workspace");
    require(json, "json");
    *json = copy_out(poslat::analyze_report(ws->value));
  });
}

poslat_status poslat_construct(const poslat_workspace* ws, poslat_algebra which, char** json) {
  return guarded([&] {
    require(ws, "workspace");
    require(json, "json");
    *json = copy_out(poslat::construct_report(ws->value, which_of(which)));
  });
}

poslat_status poslat_congruences(const poslat_workspace* ws, poslat_algebra which, char** json) {
  return guarded([&] {
    require(ws, "workspace");
    require(json, "json");
    *json = copy_out(poslat::congruences_report(ws->value, which_of(which)));
  });
}

poslat_status poslat_verify(const poslat_workspace* ws, int* passed, char** json) {
  return guarded([&] {
    require(ws, "workspace");
    require(json, "json");
    bool ok = false;
    *json = copy_out(poslat::verify_report(ws->value, ok));
    if (passed != nullptr) *passed = ok ? 1 : 0;
  });
}

namespace {

poslat_status run_sweep(const poslat::InstanceFamily& family, int* passed, char** json) {
  return guarded([&] {
    require(json, "json");
    const auto reports = poslat::sweep(family);
    bool ok = false;
    *json = copy_out(poslat::sweep_report(family, reports, ok));
    if (passed != nullptr) *passed = ok ? 1 : 0;
  });
}

}  // namespace

poslat_status poslat_sweep_exhaustive(size_t k, int* passed, char** json) {
  return run_sweep(poslat::InstanceFamily::exhaustive(k), passed, json);
}

poslat_status poslat_sweep_random(size_t count, size_t size, uint64_t seed, int* passed, char** json) {
  return run_sweep(poslat::InstanceFamily::random(count, size, seed), passed, json);
}

poslat_status poslat_dot(const poslat_workspace* ws, poslat_dot_kind kind, poslat_algebra which, char** dot) {
  return guarded([&] {
    require(ws, "workspace");
    require(dot, "dot");
    poslat::DotKind k = poslat::DotKind::Poset;
    if (kind == POSLAT_DOT_LATTICE) k = poslat::DotKind::Lattice;
    else if (kind == POSLAT_DOT_CONGRUENCES) k = poslat::DotKind::Congruences;
    else if (kind != POSLAT_DOT_POSET) throw poslat::Error(poslat::ErrorCode::InvalidArgument, "unknown DOT kind");
    *dot = copy_out(poslat::dot_for(ws->value, k, which_of(which)));
  });
}

}  // extern "C"
