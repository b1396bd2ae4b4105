#include "pcf/pcf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pcf/frontend.hpp"
#include "pcf/opsem.hpp"
#include "pcf/scott.hpp"
#include "pcf/wtypes.hpp"

struct pcf_program {
  pcf::Term term;
  pcf::PcfType type;
};

namespace {

thread_local std::string last_error;

pcf_status fail(pcf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
pcf_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const pcf::ParseError& e) {
    return fail(PCF_PARSE_ERROR, e.what());
  } catch (const pcf::TypeError& e) {
    return fail(PCF_TYPE_ERROR, e.what());
  } catch (const pcf::WrongType& e) {
    return fail(PCF_TYPE_ERROR, e.what());
  } catch (const pcf::Error& e) {
    return fail(PCF_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PCF_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PCF_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(PCF_INTERNAL_ERROR, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pcf_status missing(const char* what) { return fail(PCF_INVALID_ARGUMENT, std::string(what) + " is NULL"); }

void require_nat(const pcf_program* p) {
  if (!p->type.is_iota()) {
    throw pcf::WrongType("program has type " + pcf::frontend::to_surface(p->type) + ", expected nat");
  }
}

pcf_status fill_verdict(const pcf::Verdict& v, pcf_verdict* out) {
  out->has_value = v.value.has_value() ? 1 : 0;
  out->value = v.value.value_or(0);
  out->detail = duplicate(v.detail);
  switch (v.kind) {
    case pcf::Verdict::Kind::Ok: out->kind = PCF_VERDICT_OK; break;
    case pcf::Verdict::Kind::Vacuous: out->kind = PCF_VERDICT_VACUOUS; break;
    case pcf::Verdict::Kind::Inconclusive: out->kind = PCF_VERDICT_INCONCLUSIVE; break;
    case pcf::Verdict::Kind::Violation:
      out->kind = PCF_VERDICT_VIOLATION;
      return fail(PCF_VIOLATION, v.detail);
  }
  return PCF_OK;
}

}  // namespace

extern "C" {

const char* pcf_last_error(void) { return last_error.c_str(); }

const char* pcf_status_name(pcf_status status) {
  switch (status) {
    case PCF_OK: return "ok";
    case PCF_NEGATIVE: return "negative";
    case PCF_TYPE_ERROR: return "type error";
    case PCF_PARSE_ERROR: return "parse error";
    case PCF_VIOLATION: return "violation";
    case PCF_INVALID_ARGUMENT: return "invalid argument";
    case PCF_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void pcf_string_free(char* s) { std::free(s); }

pcf_status pcf_program_from_source(const char* text, pcf_program** out) {
  if (text == nullptr) return missing("text");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    auto program = pcf::frontend::compile_program(text);
    *out = new pcf_program{std::move(program.term), std::move(program.type)};
    return PCF_OK;
  });
}

pcf_status pcf_program_from_sexpr(const char* text, pcf_program** out) {
  if (text == nullptr) return missing("text");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    pcf::Term term = pcf::parse_term_sexpr(text);
    pcf::PcfType type = pcf::type_of(term);
    *out = new pcf_program{std::move(term), std::move(type)};
    return PCF_OK;
  });
}

void pcf_program_free(pcf_program* program) { delete program; }

pcf_status pcf_program_type(const pcf_program* program, char** out) {
  if (program == nullptr) return missing("program");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    *out = duplicate(pcf::frontend::to_surface(program->type));
    return PCF_OK;
  });
}

pcf_status pcf_program_sexpr(const pcf_program* program, char** out) {
  if (program == nullptr) return missing("program");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    *out = duplicate(pcf::to_sexpr(program->term));
    return PCF_OK;
  });
}

pcf_status pcf_program_trace(const pcf_program* program, uint64_t max_steps, pcf_step_callback callback, void* user,
                             int* exhausted) {
  if (program == nullptr) return missing("program");
  return guarded([&] {
    pcf::Term current = program->term;
    int ran_out = 0;
    uint64_t taken = 0;
    while (auto s = pcf::step(current)) {
      if (taken == max_steps) {
        ran_out = 1;
        break;
      }
      current = std::move(s->next);
      ++taken;
      if (callback != nullptr) {
        const std::string rule(pcf::rule_name(s->rule));
        callback(rule.c_str(), pcf::to_sexpr(current).c_str(), user);
      }
    }
    if (exhausted != nullptr) *exhausted = ran_out;
    return PCF_OK;
  });
}

pcf_status pcf_program_run(const pcf_program* program, uint64_t max_steps, uint64_t* value) {
  if (program == nullptr) return missing("program");
  return guarded([&] {
    require_nat(program);
    const auto n = pcf::reaches_numeral(program->term, max_steps);
    if (!n) return fail(PCF_NEGATIVE, "no numeral within " + std::to_string(max_steps) + " steps");
    if (value != nullptr) *value = *n;
    return PCF_OK;
  });
}

pcf_status pcf_program_denote(const pcf_program* program, uint64_t fuel, uint64_t* value) {
  if (program == nullptr) return missing("program");
  return guarded([&] {
    require_nat(program);
    const pcf::PartialNat d = pcf::denote_base(program->term, pcf::Fuel{fuel});
    if (!d.is_defined()) return fail(PCF_NEGATIVE, "denotation is bot at fuel " + std::to_string(fuel));
    if (value != nullptr) *value = d.value();
    return PCF_OK;
  });
}

void pcf_verdict_clear(pcf_verdict* verdict) {
  if (verdict == nullptr) return;
  std::free(verdict->detail);
  verdict->detail = nullptr;
}

pcf_status pcf_check_soundness(const pcf_program* program, uint64_t fuel, uint64_t max_steps, pcf_verdict* out) {
  if (program == nullptr) return missing("program");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    require_nat(program);
    return fill_verdict(pcf::check_soundness(program->term, max_steps, pcf::Fuel{fuel}), out);
  });
}

pcf_status pcf_check_adequacy(const pcf_program* program, uint64_t fuel, uint64_t max_steps, pcf_verdict* out) {
  if (program == nullptr) return missing("program");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    require_nat(program);
    return fill_verdict(pcf::check_adequacy(program->term, pcf::Fuel{fuel}, max_steps), out);
  });
}

pcf_status pcf_check_semidecidability(const pcf_program* program, uint64_t fuel, uint64_t max_steps,
                                      pcf_verdict* out) {
  if (program == nullptr) return missing("program");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    require_nat(program);
    return fill_verdict(pcf::check_semidecidability(program->term, pcf::Fuel{fuel}, max_steps), out);
  });
}

pcf_status pcf_programs_equal(const pcf_program* a, const pcf_program* b) {
  if (a == nullptr || b == nullptr) return missing("program");
  return guarded([&] {
    const auto& spec = pcf::w::term_spec();
    const auto u = pcf::w::encode_term(a->term);
    const auto v = pcf::w::encode_term(b->term);
    try {
      if (pcf::w::w_equal(spec, u, v)) return PCF_OK;
    } catch (const pcf::IndexMismatch&) {
      return fail(PCF_NEGATIVE, "terms have different types");
    }
    return fail(PCF_NEGATIVE, "terms differ");
  });
}

}  // extern "C"
