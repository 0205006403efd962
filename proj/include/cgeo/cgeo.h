#ifndef CGEO_H
#define CGEO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif

typedef enum {
    CG_OK = 0,
    CG_ERR_PARSE = 1,
    CG_ERR_INVALID = 2,
    CG_ERR_PRECONDITION = 3,
    CG_ERR_NOT_FOUND = 4,
    CG_ERR_INTERNAL = 5,
    CG_ERR_ARGUMENT = 6
} cg_status;

typedef enum { CG_FORMAT_TSV = 0, CG_FORMAT_JSON = 1 } cg_format;

typedef struct cg_spec cg_spec;

/* Message for the last failed call on this thread; empty after success. */
CG_API const char* cg_last_error(void);
CG_API const char* cg_version(void);
/* Releases strings returned through char** out-parameters. */
CG_API void cg_string_free(char* s);

CG_API cg_status cg_spec_from_json(const char* json, cg_spec** out);
CG_API void cg_spec_free(cg_spec* spec);
CG_API cg_status cg_spec_to_json(const cg_spec* spec, char** out);
CG_API cg_status cg_spec_index(const cg_spec* spec, int64_t m, int64_t* out);
CG_API cg_status cg_spec_nullity(const cg_spec* spec, int64_t m, int64_t* out);
/* Exact text such as "1/3 + (1/2)r{2}". */
CG_API cg_status cg_spec_mean_index(const cg_spec* spec, char** out);
CG_API cg_status cg_spec_period(const cg_spec* spec, int64_t* n0, int64_t* n);

CG_API cg_status cg_iterate(const cg_spec* spec, int64_t m_max, cg_format fmt, char** out);
CG_API cg_status cg_period_report(const cg_spec* spec, cg_format fmt, char** out);
CG_API cg_status cg_meanindex_report(const cg_spec* spec, cg_format fmt, char** out);

CG_API cg_status cg_betti_value(int d, int h, int q, int64_t* out);
CG_API cg_status cg_B_constant(int d, int h, char** out);
CG_API cg_status cg_betti(int d, int h, int q_max, int sums, cg_format fmt, char** out, int* violated);

/* eps is exact text; sigmas_json (nullable) overrides the spec's irrational turns. */
CG_API cg_status cg_vertices(const cg_spec* spec, const char* sigmas_json, const char* eps, int64_t m_max,
                             int64_t step, int witnesses, cg_format fmt, char** out);
/* Always JSON. The certificate is verified up to check_factor * T. */
CG_API cg_status cg_quasimono(const cg_spec* spec, const char* eps, int64_t m_max, int64_t check_factor, char** out,
                              int* violated);

/* reversible < 0 takes the flag from the models file. */
CG_API cg_status cg_morse(const char* models_json, int q_max, int reversible, cg_format fmt, char** out,
                          int* violated);
CG_API cg_status cg_identity(const char* models_json, int reversible, cg_format fmt, char** out, int* violated);
CG_API cg_status cg_kappa(int d, int h, int64_t i_cn, int64_t p_c, int64_t mu, int reversible, cg_format fmt,
                          char** out, int* violated);

/* samples_json may be NULL for the shipped samples. */
CG_API cg_status cg_audit_dim4(int reversible, const char* samples_json, cg_format fmt, char** out, int* violated);
CG_API cg_status cg_audit_rational(int d, int h, cg_format fmt, char** out, int* violated);
CG_API cg_status cg_audit_nondeg(int d, int h, const char* samples_json, int reversible, int64_t m_max,
                                 cg_format fmt, char** out, int* violated);
CG_API cg_status cg_audit_floor_split(int64_t p, int64_t q, const char* sigma1, int64_t m_max, cg_format fmt,
                                  char** out, int* violated);

#ifdef __cplusplus
}
#endif

#endif
