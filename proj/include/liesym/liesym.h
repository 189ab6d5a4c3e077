#ifndef LIESYM_H
#define LIESYM_H

/*
 * C interface to the exact symmetry engine for evolution systems
 *
 *     u_y = F1(x,y,u) u_x + F2(x,y,u) u_x^2 + F3(x,y,u,u_x) u_x^3
 *     u_xxx = G(x,y,u,u_x)
 *
 * All computation is exact rational arithmetic. Inputs are the textual
 * .sys and .vf documents; outputs are rendered reports, either plain text
 * or a JSON document with a top-level `schema` field.
 */

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. The bundled command line tool uses them as exit codes. */
typedef enum liesym_status {
    LIESYM_OK = 0,
    LIESYM_EVERIFY = 1,     /* the run finished but a verification failed   */
    LIESYM_EPARSE = 2,      /* malformed input document                     */
    LIESYM_EDEGENERATE = 3, /* degenerate system or vanishing pivot         */
    LIESYM_EINVALID = 4,    /* null handle, bad degree, bad point, ...      */
    LIESYM_EINTERNAL = 5    /* engine invariant violated; please report     */
} liesym_status;

typedef struct liesym_system liesym_system; /* a parsed right-hand side set */
typedef struct liesym_vfield liesym_vfield; /* a parsed point vector field  */

/* Message for the most recent failing call on this thread; empty string
 * after a success. Owned by the library; do not free. */
const char* liesym_last_error(void);

const char* liesym_version(void);

/* Parse the four-line .sys document (F1/F2/F3/G). On success *out owns the
 * handle; release with liesym_system_free. */
liesym_status liesym_system_parse(const char* text, liesym_system** out);
void liesym_system_free(liesym_system* s);

/* Parse the three-line .vf document (xi/tau/phi over x, y, u). */
liesym_status liesym_vfield_parse(const char* text, liesym_vfield** out);
void liesym_vfield_free(liesym_vfield* v);

/* Release a string returned through an `out` parameter below. */
void liesym_string_free(char* s);

/*
 * Report functions. Each writes one malloc'd NUL-terminated report to *out
 * and returns LIESYM_OK, or LIESYM_EVERIFY when the report describes a
 * failed verification. On any other status *out is NULL and
 * liesym_last_error() carries the message. `source` labels the input in
 * the report (a file name, typically); NULL renders as "-". Nonzero
 * `as_json` selects the structured rendering.
 */

/* Determining equations, one per line with its stratum of origin. */
liesym_status liesym_report_detgen(const liesym_system* s, const char* source,
                                   int show_prolongation, int cross_check, int as_json,
                                   char** out);

/* Polynomial symmetry basis of total degree <= degree (degree >= 1), or,
 * with 1 <= sweep_min <= sweep_max, the dimension at each degree of the
 * range. Pass sweep_min = sweep_max = 0 for a single-degree run. */
liesym_status liesym_report_solve(const liesym_system* s, const char* source, int degree,
                                  int sweep_min, int sweep_max, int as_json, char** out);

/* Structure constants of the computed basis plus closure, antisymmetry and
 * Jacobi verdicts. */
liesym_status liesym_report_algebra(const liesym_system* s, const char* source, int degree,
                                    int as_json, char** out);

/* Reduction of every generator derivative of order <= 3 to the ten initial
 * coefficients. `check` (optional) is reconstructed pointwise at the
 * rational point (x, y, u), e.g. x = "1", y = "-2", u = "1/3". */
liesym_status liesym_report_closure(const liesym_system* s, const char* source,
                                    const liesym_vfield* check, const char* x, const char* y,
                                    const char* u, int as_json, char** out);

/* Symmetry test of one field; lists the violated equations on failure. */
liesym_status liesym_report_verify(const liesym_system* s, const char* source,
                                   const liesym_vfield* v, const char* field_source,
                                   int as_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LIESYM_H */
