/*
 * C interface to the PCF toolkit.
 *
 * Programs are opaque handles created from surface source or from the
 * canonical S-expression form. Every call returns a pcf_status; the numeric
 * values double as the exit codes of the `pcf` command line tool. Strings
 * returned through char** are heap-allocated and owned by the caller, who
 * releases them with pcf_string_free.
 */
#ifndef PCF_PCF_H
#define PCF_PCF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PCF_BUILDING_LIBRARY)
#    define PCF_API __declspec(dllexport)
#  else
#    define PCF_API __declspec(dllimport)
#  endif
#else
#  define PCF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcf_status {
  PCF_OK = 0,
  PCF_NEGATIVE = 1,          /* undefined, no numeral, or distinct */
  PCF_TYPE_ERROR = 2,
  PCF_PARSE_ERROR = 3,
  PCF_VIOLATION = 4,         /* a soundness or adequacy check failed */
  PCF_INVALID_ARGUMENT = 5,
  PCF_INTERNAL_ERROR = 6
} pcf_status;

typedef struct pcf_program pcf_program;

/* Message describing the most recent non-OK status on the calling thread.
 * Never NULL; empty when there is nothing to report. */
PCF_API const char* pcf_last_error(void);
PCF_API const char* pcf_status_name(pcf_status status);
PCF_API void pcf_string_free(char* s);

/* Surface syntax (lambda terms). */
PCF_API pcf_status pcf_program_from_source(const char* text, pcf_program** out);
/* Canonical S-expression form of a combinatory term. */
PCF_API pcf_status pcf_program_from_sexpr(const char* text, pcf_program** out);
PCF_API void pcf_program_free(pcf_program* program);

/* Type in surface notation, e.g. "nat -> nat". */
PCF_API pcf_status pcf_program_type(const pcf_program* program, char** out);
/* Compiled combinatory term as an S-expression. */
PCF_API pcf_status pcf_program_sexpr(const pcf_program* program, char** out);

/* Called once per reduction step with the rule name and the new term. */
typedef void (*pcf_step_callback)(const char* rule, const char* sexpr, void* user);

/* Runs at most max_steps steps, reporting each one. *exhausted is set to 1 if
 * the budget ran out while the term could still step, 0 at a normal form. */
PCF_API pcf_status pcf_program_trace(const pcf_program* program, uint64_t max_steps, pcf_step_callback callback,
                                     void* user, int* exhausted);

/* PCF_OK with *value set when the program reaches a numeral within max_steps,
 * PCF_NEGATIVE otherwise. Requires type nat. */
PCF_API pcf_status pcf_program_run(const pcf_program* program, uint64_t max_steps, uint64_t* value);

/* PCF_OK with *value set when the denotation at the given fuel is defined,
 * PCF_NEGATIVE when it is bot. Requires type nat. */
PCF_API pcf_status pcf_program_denote(const pcf_program* program, uint64_t fuel, uint64_t* value);

typedef enum pcf_verdict_kind {
  PCF_VERDICT_OK = 0,
  PCF_VERDICT_VACUOUS = 1,
  PCF_VERDICT_INCONCLUSIVE = 2,
  PCF_VERDICT_VIOLATION = 3
} pcf_verdict_kind;

typedef struct pcf_verdict {
  pcf_verdict_kind kind;
  int has_value;
  uint64_t value;
  char* detail; /* release with pcf_verdict_clear */
} pcf_verdict;

PCF_API void pcf_verdict_clear(pcf_verdict* verdict);

/* Each returns PCF_OK when the check holds, PCF_VIOLATION when it fails, and
 * fills *out in both cases. Requires type nat. */
PCF_API pcf_status pcf_check_soundness(const pcf_program* program, uint64_t fuel, uint64_t max_steps,
                                       pcf_verdict* out);
PCF_API pcf_status pcf_check_adequacy(const pcf_program* program, uint64_t fuel, uint64_t max_steps,
                                      pcf_verdict* out);
PCF_API pcf_status pcf_check_semidecidability(const pcf_program* program, uint64_t fuel, uint64_t max_steps,
                                              pcf_verdict* out);

/* Decides equality of the compiled terms through their W-tree encodings.
 * PCF_OK when equal, PCF_NEGATIVE when distinct (including different types). */
PCF_API pcf_status pcf_programs_equal(const pcf_program* a, const pcf_program* b);

#ifdef __cplusplus
}
#endif

#endif /* PCF_PCF_H */
