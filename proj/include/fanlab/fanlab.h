/* C interface to the fan invariant library.
 *
 * Handles are opaque; every operation reports a fanlab_status and returns
 * its payload as a NUL-terminated heap string through an out parameter.
 * Strings produced by the library are released with fanlab_string_free,
 * fans with fanlab_fan_free. out_error may be NULL anywhere; when given,
 * it is written only on failure and also owns a heap string.
 */
#ifndef FANLAB_H
#define FANLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fanlab_status {
    FANLAB_OK = 0,
    FANLAB_ERR_INVALID_FAN = 1, /* file or description is not a valid fan */
    FANLAB_ERR_USAGE = 2,       /* malformed request or parameters */
    FANLAB_ERR_HYPOTHESIS = 3,  /* operation needs hypotheses this fan lacks */
    FANLAB_ERR_INTERNAL = 4
} fanlab_status;

typedef struct fanlab_fan fanlab_fan;

/* Library version; static storage, do not free. */
const char* fanlab_version(void);

void fanlab_string_free(char* s);
void fanlab_fan_free(fanlab_fan* fan);

/* Parses a fan file (strict JSON schema: ambient_rank, rays,
 * maximal_cones, name?). len == 0 means json is NUL-terminated. With
 * normalize == 0, non-primitive rays are rejected. */
fanlab_status fanlab_fan_from_json(const char* json, size_t len, int normalize,
                                   fanlab_fan** out_fan, char** out_error);

/* Canonical fan-file JSON for the handle. */
fanlab_status fanlab_fan_to_json(const fanlab_fan* fan, char** out_json, char** out_error);

/* Invariant report. as_json == 0 renders the aligned text table. */
fanlab_status fanlab_invariants(const fanlab_fan* fan, int as_json, char** out,
                                char** out_error);

/* Brauer-group data over a ground field. nu is a decimal string >= 2.
 * field is "acl", "real", or a JSON field descriptor object. */
fanlab_status fanlab_brauer(const fanlab_fan* fan, const char* nu, const char* field,
                            int as_json, char** out, char** out_error);

/* Greedy upper bound for kappa_0 with its walk trace. */
fanlab_status fanlab_bound(const fanlab_fan* fan, int exhaustive, int as_json, char** out,
                           char** out_error);

/* Neighborhood sampling. denominator_bound, radius_numerator and
 * radius_denominator are decimal strings. conjecture != 0 emits the
 * screening report instead of the raw sample. max_threads == 0 defers to
 * FANLAB_THREADS, then to the hardware; results never depend on the
 * thread count. */
fanlab_status fanlab_strata(const fanlab_fan* fan, uint64_t samples, uint64_t seed,
                            const char* denominator_bound, const char* radius_numerator,
                            const char* radius_denominator, int conjecture,
                            unsigned max_threads, int as_json, char** out, char** out_error);

/* Built-in example fans: the catalog (name + description, as JSON or an
 * aligned table) and individual entries as fan-file JSON. */
fanlab_status fanlab_fixture_list(int as_json, char** out, char** out_error);
fanlab_status fanlab_fixture(const char* name, char** out_json, char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* FANLAB_H */
