#ifndef RCRYSTAL_C_H
#define RCRYSTAL_C_H

/* C interface to the rigged configuration library.  All functions return a
 * status code: 0 success, 2 usage or domain error, 3 internal error.  Output
 * lands in an opaque result handle owning its strings. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rcr_result rcr_result;

/* last error message of the calling thread (valid until the next call) */
const char* rcr_last_error(void);

const char* rcr_result_str(const rcr_result* res);
/* for verification runs: 1 when every cell passed */
int rcr_result_ok(const rcr_result* res);
void rcr_result_free(rcr_result* res);

/* library version string */
const char* rcr_version(void);

/* checks a type string such as "D_5^1", "A_6^2+"; 0 when valid */
int rcr_type_check(const char* type);

/* highest weight rigged configurations of B = (x) B^{r_i,s_i}.
 * factors: comma/space separated "r,s" pairs, e.g. "2,1 1,2".
 * format: "text" or "json". */
int rcr_enumerate(const char* type, const char* factors, const char* format,
                  rcr_result** out);

/* filling of the highest weight element of B(lambda) inside B^{r,s};
 * lambda: comma separated varpi coefficients, e.g. "0,2,1,0".
 * format: "text" or "json"; the json carries the removed-diamond count. */
int rcr_fill(const char* type, int r, int s, const char* lambda, const char* format,
             rcr_result** out);

/* bijection image of the idx-th highest weight rigged configuration (or all
 * elements of its classical component when all_elements is nonzero);
 * includes the delta trace when with_trace is nonzero. */
int rcr_phi(const char* type, const char* factors, int idx, int with_trace,
            rcr_result** out);

/* crystal graph exports, format "dot" or "json":
 * seed = "hw:<idx>" for the idx-th highest weight rc of the factors, or
 * seed = "lambda:<coeffs>" for the KN tableau crystal B(lambda). */
int rcr_graph(const char* type, const char* factors, const char* seed,
              const char* format, rcr_result** out);

/* verification suites; returns 0 even when cells fail (inspect result_ok).
 * type may be NULL to run every non-exceptional type in range. */
int rcr_verify(const char* suite, const char* type, int rank_max, int s_max,
               int factors_max, int workers, unsigned seed, int allow_large,
               rcr_result** out);

#ifdef __cplusplus
}
#endif

#endif /* RCRYSTAL_C_H */
