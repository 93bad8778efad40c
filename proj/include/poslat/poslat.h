/*
 * C interface to the poslat library.
 *
 * Every object is an opaque handle released with its matching *_free call.
 * Calls that can fail return a poslat_status; on failure the message (and,
 * for input errors, the 1-based line and column) of the calling thread's
 * last error is available through poslat_last_error*. Strings returned
 * through char** are heap-allocated and released with poslat_string_free.
 */
#ifndef POSLAT_POSLAT_H
#define POSLAT_POSLAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(POSLAT_BUILDING)
#    define POSLAT_API __declspec(dllexport)
#  else
#    define POSLAT_API __declspec(dllimport)
#  endif
#else
#  define POSLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum poslat_status {
  POSLAT_OK = 0,
  POSLAT_ERR_INDEX = 1,
  POSLAT_ERR_CYCLE = 2,
  POSLAT_ERR_CAPACITY = 3,
  POSLAT_ERR_NOT_A_LATTICE = 4,
  POSLAT_ERR_NOT_DISTRIBUTIVE = 5,
  POSLAT_ERR_SIZE_MISMATCH = 6,
  POSLAT_ERR_TOO_LARGE = 7,
  POSLAT_ERR_NOT_A_DOWNSET = 8,
  POSLAT_ERR_PARSE = 9,
  POSLAT_ERR_DUPLICATE_LABEL = 10,
  POSLAT_ERR_UNKNOWN_LABEL = 11,
  POSLAT_ERR_INVALID_ARGUMENT = 12,
  POSLAT_ERR_INTERNAL = 13
} poslat_status;

typedef enum poslat_algebra {
  POSLAT_ALGEBRA_E = 0,
  POSLAT_ALGEBRA_EPRIME = 1
} poslat_algebra;

typedef enum poslat_dot_kind {
  POSLAT_DOT_POSET = 0,
  POSLAT_DOT_LATTICE = 1,
  POSLAT_DOT_CONGRUENCES = 2
} poslat_dot_kind;

typedef struct poslat_poset poslat_poset;
typedef struct poslat_workspace poslat_workspace;

/* Errors */
POSLAT_API const char* poslat_status_name(poslat_status status);
POSLAT_API const char* poslat_last_error(void);
/* 0 when the last error carries no input location. */
POSLAT_API size_t poslat_last_error_line(void);
POSLAT_API size_t poslat_last_error_column(void);

POSLAT_API void poslat_string_free(char* s);

/* Posets. `covers` holds `count` (lo, hi) pairs as 2*count indices. */
POSLAT_API poslat_status poslat_poset_from_covers(size_t n, const uint32_t* covers, size_t count,
                                                  poslat_poset** out);
/* Parses the line-oriented poset format (elements:/covers:). */
POSLAT_API poslat_status poslat_poset_parse(const char* text, poslat_poset** out);
/* Named fixtures such as "chain2", "vposet", "antichain3". */
POSLAT_API poslat_status poslat_poset_fixture(const char* name, poslat_poset** out);
POSLAT_API void poslat_poset_free(poslat_poset* p);
POSLAT_API size_t poslat_poset_size(const poslat_poset* p);
/* 1 if a <= b, 0 if not, -1 on bad indices. */
POSLAT_API int poslat_poset_leq(const poslat_poset* p, uint32_t a, uint32_t b);
POSLAT_API poslat_status poslat_poset_downset_count(const poslat_poset* p, size_t* out);

/* Workspaces: D with its algebras E and E'. */
/* D = O(P). */
POSLAT_API poslat_status poslat_workspace_from_poset(const poslat_poset* p, poslat_workspace** out);
/* The poset is D's own order; it must be a distributive lattice. */
POSLAT_API poslat_status poslat_workspace_from_lattice(const poslat_poset* d, poslat_workspace** out);
POSLAT_API void poslat_workspace_free(poslat_workspace* ws);
POSLAT_API size_t poslat_workspace_lattice_size(const poslat_workspace* ws);
POSLAT_API size_t poslat_workspace_algebra_size(const poslat_workspace* ws, poslat_algebra which);
POSLAT_API poslat_status poslat_workspace_congruence_count(const poslat_workspace* ws, poslat_algebra which,
                                                           size_t* out);

/* JSON reports. `passed` (may be NULL) receives 1 when every clause holds. */
POSLAT_API poslat_status poslat_analyze(const poslat_workspace* ws, char** json);
POSLAT_API poslat_status poslat_construct(const poslat_workspace* ws, poslat_algebra which, char** json);
POSLAT_API poslat_status poslat_congruences(const poslat_workspace* ws, poslat_algebra which, char** json);
POSLAT_API poslat_status poslat_verify(const poslat_workspace* ws, int* passed, char** json);
POSLAT_API poslat_status poslat_sweep_exhaustive(size_t k, int* passed, char** json);
POSLAT_API poslat_status poslat_sweep_random(size_t count, size_t size, uint64_t seed, int* passed,
                                             char** json);
POSLAT_API poslat_status poslat_dot(const poslat_workspace* ws, poslat_dot_kind kind, poslat_algebra which,
                                    char** dot);

#ifdef __cplusplus
}
#endif

#endif /* POSLAT_POSLAT_H */
