/* Batch checker for type theory with sizes and parametric quantifiers. */
#ifndef SMLTT_H
#define SMLTT_H

#include <stddef.h>
#include <stdint.h>

#if defined(SMLTT_BUILDING)
#define SMLTT_API __attribute__((visibility("default")))
#else
#define SMLTT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smltt_status {
  SMLTT_OK = 0,
  SMLTT_CHECK_FAILED = 1, /* type error, unknown name, failed law */
  SMLTT_PARSE_ERROR = 2,
  SMLTT_IO_ERROR = 3,
  SMLTT_INVALID_ARGUMENT = 4,
  SMLTT_INTERNAL_ERROR = 5
} smltt_status;

typedef struct smltt_session smltt_session;

typedef struct smltt_diagnostic {
  const char* kind; /* e.g. "SmallnessViolation" */
  const char* message;
  const char* file;
  const char* decl;
  int line;
  int col;
} smltt_diagnostic;

/* prelude_path may be NULL: $SMLTT_PRELUDE, then the installed stdlib. */
SMLTT_API smltt_session* smltt_session_new(const char* prelude_path);
SMLTT_API void smltt_session_free(smltt_session* s);

/* A file, a directory (MANIFEST or every .smltt file) or a manifest. Replaces
   the session's diagnostics. */
SMLTT_API smltt_status smltt_check_path(smltt_session* s, const char* path, int allow_axioms);

SMLTT_API size_t smltt_diagnostic_count(const smltt_session* s);
/* Strings stay valid until the next call that changes the diagnostics. */
SMLTT_API smltt_status smltt_diagnostic_get(const smltt_session* s, size_t i, smltt_diagnostic* out);
/* [{"file","decl","kind","message","span":{"line","col"}}, ...] */
SMLTT_API smltt_status smltt_diagnostics_json(const smltt_session* s, char** out);
/* One line per checked file. */
SMLTT_API smltt_status smltt_check_summary(const smltt_session* s, char** out);

/* `name` or `stem.name`; a stem that is not loaded yet is looked up as
   <stdlib>/<stem>.smltt. */
SMLTT_API smltt_status smltt_query_type(smltt_session* s, const char* name, int unfold, char** out);
/* A global name (its body) or an expression; evaluated without type checking. */
SMLTT_API smltt_status smltt_normalize(smltt_session* s, const char* text, int unfold, char** out);
/* Axioms the declaration depends on, one per line, sorted. */
SMLTT_API smltt_status smltt_axioms(smltt_session* s, const char* name, char** out);

/* Runs a vector file. fuel < 0 keeps each line's own fuel. The report has one
   pass/fail line per check. */
SMLTT_API smltt_status smltt_model_test(const char* path, int64_t fuel, char** report);

SMLTT_API void smltt_string_free(char* p);
SMLTT_API const char* smltt_last_error(const smltt_session* s);
SMLTT_API const char* smltt_status_name(smltt_status st);

#ifdef __cplusplus
}
#endif

#endif
