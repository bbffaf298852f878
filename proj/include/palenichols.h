/*
 * palenichols: Nichols algebras of braided vector spaces built from
 * Jordan blocks, pale blocks and points.
 *
 * C interface to the computation engine. Every function returns a
 * pn_status; on failure pn_last_error() describes the problem (the text is
 * thread-local and valid until the next call on the same thread). Strings
 * returned through char** are owned by the caller and released with
 * pn_string_free.
 */
#ifndef PALENICHOLS_H
#define PALENICHOLS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PN_API __declspec(dllexport)
#else
#  define PN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    PN_OK = 0,
    PN_ERR_ARGUMENT = 1,   /* malformed family spec, expression or option */
    PN_ERR_DOMAIN = 2,     /* pole, singular matrix, invariant violated */
    PN_ERR_BUDGET = 3,     /* term budget exhausted */
    PN_ERR_INTERNAL = 4
} pn_status;

typedef enum { PN_MODE_EXACT = 0, PN_MODE_SPECIALIZED = 1 } pn_mode;

typedef enum { PN_FORMAT_TEXT = 0, PN_FORMAT_JSON = 1, PN_FORMAT_CSV = 2 } pn_format;

typedef struct {
    pn_mode mode;
    int max_deg;              /* Hilbert range and default degree bound */
    uint64_t seed;            /* specialized assignment */
    int screen_seeds;         /* screens for relations over budget */
    int max_block_degree;     /* largest degree the engine materializes */
    uint64_t budget_terms;    /* stored sparse entries, all blocks */
} pn_options;

/* Outcome of a verification call. */
typedef struct {
    int passed;
    int budget_exhausted;
} pn_outcome;

typedef struct pn_space pn_space;
typedef struct pn_session pn_session;

PN_API const char* pn_version(void);
PN_API const char* pn_last_error(void);
PN_API void pn_string_free(char* s);
PN_API void pn_options_default(pn_options* opt);

/* Newline-separated lists. */
PN_API pn_status pn_catalog_ids(char** out);
PN_API pn_status pn_known_families(char** out);

/* ---- spaces ---- */
PN_API pn_status pn_space_from_spec(const char* spec, pn_space** out);
PN_API pn_status pn_space_from_config(const char* document, pn_space** out);
/* Same space with every parameter replaced by a seeded small rational. */
PN_API pn_status pn_space_specialize(const pn_space* s, uint64_t seed, pn_space** out);
PN_API void pn_space_free(pn_space* s);

PN_API size_t pn_space_dim(const pn_space* s);
PN_API pn_status pn_space_name(const pn_space* s, char** out);
PN_API pn_status pn_space_describe(const pn_space* s, pn_format fmt, char** out);
PN_API pn_status pn_space_braid_equation(const pn_space* s, int* holds);
PN_API pn_status pn_space_ghost(const pn_space* s, char** out);
/* flag: comma-separated basis labels, or NULL for the diagonal diagram of a
 * diagonal space. */
PN_API pn_status pn_space_diagram(const pn_space* s, const char* flag, pn_format fmt,
                                  char** out, int* is_cycle);

/* ---- sessions: engine plus parser context of the matching presentation ---- */
PN_API pn_status pn_session_create(const pn_space* s, const pn_options* opt, pn_session** out);
PN_API void pn_session_free(pn_session* ss);
/* dims must hold N + 1 entries */
PN_API pn_status pn_session_hilbert(pn_session* ss, int N, size_t* dims);
PN_API pn_status pn_session_is_zero(pn_session* ss, const char* expr, int* is_zero);
PN_API pn_status pn_session_normal_form(pn_session* ss, const char* expr, char** out);
/* rank of the quantum symmetrizer in degree n, checked against the engine */
PN_API pn_status pn_session_symmetrizer(pn_session* ss, int n, size_t* rank, int* agrees);
/* W, U: comma-separated labels, or NULL for the presentation's data */
PN_API pn_status pn_session_kone(pn_session* ss, const char* W, const char* U, int max_depth,
                                 pn_format fmt, char** out, pn_outcome* outcome);

/* ---- reports ---- */
PN_API pn_status pn_verify_family(const char* spec, const pn_options* opt, pn_format fmt,
                                  char** out, pn_outcome* outcome);
PN_API pn_status pn_check_relations(const char* spec, const pn_options* opt, pn_format fmt,
                                    char** out, pn_outcome* outcome);
PN_API pn_status pn_wn_recursion(const char* spec, int N, const pn_options* opt, pn_format fmt,
                                 char** out, pn_outcome* outcome);
PN_API pn_status pn_growth(const char* spec, const pn_options* opt, pn_format fmt, char** out,
                           int* exceeds_window);

#ifdef __cplusplus
}
#endif

#endif
