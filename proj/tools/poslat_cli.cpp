// poslat command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "poslat/poslat.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct PosetDeleter {
  void operator()(poslat_poset* p) const { poslat_poset_free(p); }
};
struct WorkspaceDeleter {
  void operator()(poslat_workspace* w) const { poslat_workspace_free(w); }
};
struct StringDeleter {
  void operator()(char* s) const { poslat_string_free(s); }
};
using PosetPtr = std::unique_ptr<poslat_poset, PosetDeleter>;
using WorkspacePtr = std::unique_ptr<poslat_workspace, WorkspaceDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Failure {
  int code;
};

[[noreturn]] void fail_status(poslat_status status, const std::string& where) {
  std::cerr << "error: " << where;
  if (poslat_last_error_line() != 0) {
    std::cerr << ":" << poslat_last_error_line() << ":" << poslat_last_error_column();
  }
  std::cerr << ": " << poslat_status_name(status) << ": " << poslat_last_error() << "\n";
  throw Failure{kExitInput};
}

void check(poslat_status status, const std::string& where) {
  if (status != POSLAT_OK) fail_status(status, where);
}

struct Options {
  std::string input;
  std::string which = "E";
  std::string what = "poset";
  bool lattice = false;
  std::optional<std::size_t> k;
  std::size_t count = 100;
  std::size_t size = 6;
  std::uint64_t seed = 0;
  std::string out;
};

WorkspacePtr load(const Options& opt) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) {
    std::cerr << "error: " << opt.input << ": cannot open input file\n";
    throw Failure{kExitInput};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  poslat_poset* raw = nullptr;
  check(poslat_poset_parse(buf.str().c_str(), &raw), opt.input);
  PosetPtr poset(raw);
  poslat_workspace* ws = nullptr;
  if (opt.lattice) check(poslat_workspace_from_lattice(poset.get(), &ws), opt.input);
  else check(poslat_workspace_from_poset(poset.get(), &ws), opt.input);
  return WorkspacePtr(ws);
}

poslat_algebra algebra_of(const Options& opt) {
  return opt.which == "Eprime" ? POSLAT_ALGEBRA_EPRIME : POSLAT_ALGEBRA_E;
}

void emit(const Options& opt, const char* text) {
  if (opt.out.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: " << opt.out << ": cannot write output file\n";
    throw Failure{kExitInput};
  }
}

int run(const std::string& command, const Options& opt) {
  char* raw = nullptr;
  int passed = 1;
  if (command == "sweep") {
    if (opt.k) {
      check(poslat_sweep_exhaustive(*opt.k, &passed, &raw), "sweep");
    } else {
      check(poslat_sweep_random(opt.count, opt.size, opt.seed, &passed, &raw), "sweep");
    }
  } else {
    WorkspacePtr ws = load(opt);
    const std::string& where = opt.input;
    if (command == "analyze") {
      check(poslat_analyze(ws.get(), &raw), where);
    } else if (command == "construct") {
      check(poslat_construct(ws.get(), algebra_of(opt), &raw), where);
    } else if (command == "congruences") {
      check(poslat_congruences(ws.get(), algebra_of(opt), &raw), where);
    } else if (command == "verify") {
      check(poslat_verify(ws.get(), &passed, &raw), where);
    } else if (command == "dot") {
      poslat_dot_kind kind = POSLAT_DOT_POSET;
      if (opt.what == "lattice") kind = POSLAT_DOT_LATTICE;
      else if (opt.what == "con") kind = POSLAT_DOT_CONGRUENCES;
      check(poslat_dot(ws.get(), kind, algebra_of(opt), &raw), where);
    }
  }
  StringPtr text(raw);
  emit(opt, text.get());
  return passed != 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite distributive lattices, their representing algebras E and E', and congruence lattices"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Poset file (elements:/covers:)")->required();
    sub->add_flag("--lattice", opt.lattice, "Input lists the covers of D itself instead of P with D = O(P)");
    sub->add_option("--out", opt.out, "Write output to FILE instead of stdout");
  };
  auto add_which = [&](CLI::App* sub) {
    sub->add_option("--which", opt.which, "Algebra: E or Eprime")->check(CLI::IsMember({"E", "Eprime"}));
  };

  add_input(app.add_subcommand("analyze", "Describe P, D = O(P), J(D) and the algebra sizes"));
  auto* construct = app.add_subcommand("construct", "Print the operation tables of E or E'");
  add_input(construct);
  add_which(construct);
  auto* congruences = app.add_subcommand("congruences", "List the congruences of E or E'");
  add_input(congruences);
  add_which(congruences);
  add_input(app.add_subcommand("verify", "Check both theorems on one input"));
  auto* sweep = app.add_subcommand("sweep", "Check both theorems over a family of posets");
  sweep->add_option("--k", opt.k, "Every labeled poset on K elements")->check(CLI::Range(0, 5));
  auto* count = sweep->add_option("--count", opt.count, "Number of random posets");
  auto* size = sweep->add_option("--size", opt.size, "Maximum random poset size")->check(CLI::Range(1, 10));
  auto* seed = sweep->add_option("--seed", opt.seed, "Random seed");
  sweep->add_option("--out", opt.out, "Write output to FILE instead of stdout");
  for (auto* o : {count, size, seed}) o->excludes("--k");
  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  add_input(dot);
  add_which(dot);
  dot->add_option("--what", opt.what, "poset, lattice or con")->check(CLI::IsMember({"poset", "lattice", "con"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const Failure& f) {
    return f.code;
  }
}
