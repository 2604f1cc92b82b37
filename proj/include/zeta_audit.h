#ifndef ZETA_AUDIT_H
#define ZETA_AUDIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZA_API __declspec(dllexport)
#else
#define ZA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum za_status {
  ZA_OK = 0,
  ZA_ERR_DOMAIN = 1,
  ZA_ERR_NUMERIC = 2,
  ZA_ERR_INVALID_ARGUMENT = 3,
  ZA_ERR_INTERNAL = 4
} za_status;

/* Library version string, static storage. */
ZA_API const char* za_version(void);

/* Message for the most recent failure on this thread, static storage. */
ZA_API const char* za_last_error(void);

/* Frees any char* returned by this API (other than the static ones
   above). Accepts NULL. */
ZA_API void za_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Number fields.                                                      */

typedef struct za_field za_field;

ZA_API za_status za_field_open(const char* label, za_field** out);
ZA_API void za_field_close(za_field* f);

/* JSON array describing every field in the catalogue. */
ZA_API char* za_catalogue_json(void);

/* ------------------------------------------------------------------ */
/* Scalar evaluations at s = re + i im.                                */

ZA_API za_status za_riemann_zeta(double re, double im, double* out_re,
                                 double* out_im);
ZA_API za_status za_completed_zeta(const za_field* f, double re, double im,
                                   double* out_re, double* out_im);
ZA_API za_status za_fe_residual(const za_field* f, double re, double im,
                                double* out);
ZA_API za_status za_dedekind_zeta(const za_field* f, double re, double im,
                                  double* out_re, double* out_im);
ZA_API za_status za_ideal_count_zeta(const za_field* f, double re, double im,
                                     long cutoff, double* out_re,
                                     double* out_im);

/* ------------------------------------------------------------------ */
/* Critical-line zero scan.                                            */

typedef struct za_zero_list za_zero_list;

ZA_API za_status za_scan_zeros(const za_field* f, double t_min, double t_max,
                               double step, za_zero_list** out);
ZA_API size_t za_zero_count(const za_zero_list* zl);
ZA_API za_status za_zero_get(const za_zero_list* zl, size_t index, double* t,
                             double* refined_to);
ZA_API void za_zero_list_free(za_zero_list* zl);

/* ------------------------------------------------------------------ */
/* Audit runs.                                                         */

typedef struct za_run za_run;

ZA_API za_status za_run_open(za_run** out);
ZA_API void za_run_close(za_run* r);

/* Recognized keys: field, t_min, t_max, grid_step, tolerance_scale,
   seed, mc_samples, threads. Unknown keys or unparsable values return
   ZA_ERR_INVALID_ARGUMENT with the key named in za_last_error. */
ZA_API za_status za_run_set(za_run* r, const char* key, const char* value);

/* Newline-joined canonical suite names, in execution order. */
ZA_API char* za_suite_names(void);

/* suite: a canonical suite name, or "all". */
ZA_API za_status za_run_execute(za_run* r, const char* suite);

/* Records of the last execute, as a JSON array sorted by claim id. */
ZA_API char* za_run_records_json(const za_run* r);

/* CSV of the records whose claim id starts with "<suite>.". NULL or ""
   selects every record. */
ZA_API char* za_run_records_csv(const za_run* r, const char* suite);

ZA_API void za_run_counts(const za_run* r, long* pass, long* fail,
                          long* report_only);

#ifdef __cplusplus
}
#endif

#endif /* ZETA_AUDIT_H */
