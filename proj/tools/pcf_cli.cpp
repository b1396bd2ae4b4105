// Command line front end. Talks to the toolkit only through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pcf/pcf.h"

namespace {

constexpr std::uint64_t kDefaultMaxSteps = 10000;
constexpr std::uint64_t kDefaultFuel = 32;

struct ProgramHandle {
  pcf_program* ptr = nullptr;
  ~ProgramHandle() { pcf_program_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { pcf_string_free(ptr); }
};

int report(pcf_status status) {
  std::cerr << "pcf: " << pcf_status_name(status) << ": " << pcf_last_error() << "\n";
  return static_cast<int>(status);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Reads FILE; a `.sexp` extension selects the combinatory S-expression form.
pcf_status load(const std::string& path, ProgramHandle& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pcf: cannot read '" << path << "'\n";
    return PCF_INVALID_ARGUMENT;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const pcf_status st = ends_with(path, ".sexp") ? pcf_program_from_sexpr(text.c_str(), &out.ptr)
                                                 : pcf_program_from_source(text.c_str(), &out.ptr);
  if (st != PCF_OK) {
    std::cerr << path << ": ";
    return static_cast<pcf_status>(report(st));
  }
  return PCF_OK;
}

int cmd_check(const std::string& file) {
  ProgramHandle p;
  if (auto st = load(file, p); st != PCF_OK) return st;
  OwnedString type;
  if (auto st = pcf_program_type(p.ptr, &type.ptr); st != PCF_OK) return report(st);
  std::cout << type.ptr << "\n";
  return 0;
}

int cmd_compile(const std::string& file) {
  ProgramHandle p;
  if (auto st = load(file, p); st != PCF_OK) return st;
  OwnedString s;
  if (auto st = pcf_program_sexpr(p.ptr, &s.ptr); st != PCF_OK) return report(st);
  std::cout << s.ptr << "\n";
  return 0;
}

int cmd_step(const std::string& file, std::uint64_t max) {
  ProgramHandle p;
  if (auto st = load(file, p); st != PCF_OK) return st;
  int exhausted = 0;
  auto print = [](const char* rule, const char* sexpr, void*) { std::cout << rule << " ⇝ " << sexpr << "\n"; };
  if (auto st = pcf_program_trace(p.ptr, max, print, nullptr, &exhausted); st != PCF_OK) return report(st);
  std::cout << (exhausted ? "step-budget-exhausted" : "normal-form") << "\n";
  return 0;
}

int cmd_run(const std::string& file, std::uint64_t max_steps) {
  ProgramHandle p;
  if (auto st = load(file, p); st != PCF_OK) return st;
  std::uint64_t n = 0;
  const pcf_status st = pcf_program_run(p.ptr, max_steps, &n);
  if (st == PCF_OK) {
    std::cout << n << "\n";
    return 0;
  }
  if (st == PCF_NEGATIVE) {
    std::cout << "no-numeral\n";
    return 1;
  }
  return report(st);
}

int cmd_denote(const std::string& file, std::uint64_t fuel) {
  ProgramHandle p;
  if (auto st = load(file, p); st != PCF_OK) return st;
  std::uint64_t n = 0;
  const pcf_status st = pcf_program_denote(p.ptr, fuel, &n);
  if (st == PCF_OK) {
    std::cout << "eta " << n << "\n";
    return 0;
  }
  if (st == PCF_NEGATIVE) {
    std::cout << "bot\n";
    return 1;
  }
  return report(st);
}

using Check = pcf_status (*)(const pcf_program*, std::uint64_t, std::uint64_t, pcf_verdict*);

int cmd_verdict(Check check, const std::string& file, std::uint64_t fuel, std::uint64_t max_steps) {
  ProgramHandle p;
  if (auto st = load(file, p); st != PCF_OK) return st;
  pcf_verdict v{};
  const pcf_status st = check(p.ptr, fuel, max_steps, &v);
  if (st != PCF_OK && st != PCF_VIOLATION) return report(st);
  switch (v.kind) {
    case PCF_VERDICT_OK:
      std::cout << "ok";
      if (v.has_value) std::cout << " n=" << v.value;
      std::cout << "\n";
      break;
    case PCF_VERDICT_VACUOUS: std::cout << "vacuous\n"; break;
    case PCF_VERDICT_INCONCLUSIVE: std::cout << "inconclusive " << v.detail << "\n"; break;
    case PCF_VERDICT_VIOLATION: std::cout << "VIOLATION " << v.detail << "\n"; break;
  }
  pcf_verdict_clear(&v);
  return st;
}

int cmd_eq(const std::string& a, const std::string& b) {
  ProgramHandle p;
  ProgramHandle q;
  if (auto st = load(a, p); st != PCF_OK) return st;
  if (auto st = load(b, q); st != PCF_OK) return st;
  const pcf_status st = pcf_programs_equal(p.ptr, q.ptr);
  if (st == PCF_OK) {
    std::cout << "equal\n";
    return 0;
  }
  if (st == PCF_NEGATIVE) {
    std::cout << "distinct\n";
    return 1;
  }
  return report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PCF toolkit: combinatory PCF, small-step reduction and a fuel-indexed Scott model"};
  app.require_subcommand(1);

  std::string file;
  std::string other;
  std::uint64_t max_steps = kDefaultMaxSteps;
  std::uint64_t fuel = kDefaultFuel;
  int code = 0;

  auto* check = app.add_subcommand("check", "print the type of a program");
  check->add_option("FILE", file)->required();
  check->callback([&] { code = cmd_check(file); });

  auto* compile = app.add_subcommand("compile", "print the compiled combinatory term");
  compile->add_option("FILE", file)->required();
  compile->callback([&] { code = cmd_compile(file); });

  auto* step = app.add_subcommand("step", "print the reduction trace");
  step->add_option("FILE", file)->required();
  step->add_option("--max", max_steps, "step budget")->capture_default_str();
  step->callback([&] { code = cmd_step(file, max_steps); });

  auto* run = app.add_subcommand("run", "reduce to a numeral");
  run->add_option("FILE", file)->required();
  run->add_option("--max-steps", max_steps, "step budget")->capture_default_str();
  run->callback([&] { code = cmd_run(file, max_steps); });

  auto* denote = app.add_subcommand("denote", "evaluate the denotation at a fuel level");
  denote->add_option("FILE", file)->required();
  denote->add_option("--fuel", fuel, "fixed-point iterations")->capture_default_str();
  denote->callback([&] { code = cmd_denote(file, fuel); });

  auto* adequacy = app.add_subcommand("adequacy", "check that a defined denotation is reached by reduction");
  adequacy->add_option("FILE", file)->required();
  adequacy->add_option("--fuel", fuel)->capture_default_str();
  adequacy->add_option("--max-steps", max_steps)->capture_default_str();
  adequacy->callback([&] { code = cmd_verdict(pcf_check_adequacy, file, fuel, max_steps); });

  auto* sound = app.add_subcommand("sound", "check that reduction preserves the denotation");
  sound->add_option("FILE", file)->required();
  sound->add_option("--fuel", fuel)->capture_default_str();
  sound->add_option("--max-steps", max_steps)->capture_default_str();
  sound->callback([&] { code = cmd_verdict(pcf_check_soundness, file, fuel, max_steps); });

  auto* eq = app.add_subcommand("eq", "decide syntactic equality of two programs");
  eq->add_option("FILE1", file)->required();
  eq->add_option("FILE2", other)->required();
  eq->callback([&] { code = cmd_eq(file, other); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : PCF_INVALID_ARGUMENT;
  }
  return code;
}
