#ifndef CRLAB_H
#define CRLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CRLAB_API __declspec(dllexport)
#else
#define CRLAB_API __attribute__((visibility("default")))
#endif

/* Status codes double as CLI exit codes. */
typedef enum crlab_status {
  CRLAB_OK = 0,
  CRLAB_INTERNAL = 1,
  CRLAB_INPUT_ERROR = 2,
  CRLAB_RESOURCE_LIMIT = 3
} crlab_status;

typedef enum crlab_format { CRLAB_FORMAT_JSON = 0, CRLAB_FORMAT_TEXT = 1 } crlab_format;

typedef struct crlab_options crlab_options;
typedef struct crlab_report crlab_report;
typedef struct crlab_hypersurface crlab_hypersurface;

CRLAB_API const char* crlab_version(void);

/* Message of the last failing call on this thread; "" when none. */
CRLAB_API const char* crlab_last_error(void);

CRLAB_API crlab_options* crlab_options_new(void);
CRLAB_API void crlab_options_free(crlab_options* opt);
/* Integer keys: spair_budget, ell_max, codim_degree_max, bracket_max,
   witness_degree, jet_degree, order_cap, m_bound, steps, timings. */
CRLAB_API crlab_status crlab_options_set_int(crlab_options* opt, const char* key, long value);
/* String keys: field, h, t_end. */
CRLAB_API crlab_status crlab_options_set_string(crlab_options* opt, const char* key, const char* value);

/* On success *out owns a report; its status may still be CRLAB_RESOURCE_LIMIT.
   opt may be NULL for defaults. */
CRLAB_API crlab_status crlab_analyze_file(const char* path, const crlab_options* opt, crlab_report** out);
CRLAB_API crlab_status crlab_map_check_file(const char* path, const crlab_options* opt, crlab_report** out);
CRLAB_API crlab_status crlab_contact_file(const char* path, const crlab_options* opt, crlab_report** out);
CRLAB_API crlab_status crlab_flow_file(const char* path, const crlab_options* opt, crlab_report** out);
CRLAB_API crlab_status crlab_artin(const char* expression, const crlab_options* opt, crlab_report** out);
CRLAB_API crlab_status crlab_corpus(const char* const* paths, size_t count, unsigned jobs,
                                    const crlab_options* opt, crlab_report** out);

CRLAB_API crlab_status crlab_report_status(const crlab_report* report);
/* Rendered bytes, owned by the report and valid until it is freed. */
CRLAB_API const char* crlab_report_render(crlab_report* report, crlab_format format);
CRLAB_API void crlab_report_free(crlab_report* report);

/* rho over Z1..ZN and conj(Zk); point is "re,im,..." or NULL for the origin. */
CRLAB_API crlab_status crlab_hypersurface_new(size_t n, const char* rho, const char* point,
                                              crlab_hypersurface** out);
CRLAB_API void crlab_hypersurface_free(crlab_hypersurface* m);
/* *ell = 0 when the Levi type is not attained (holomorphically degenerate). */
CRLAB_API crlab_status crlab_hypersurface_levi_type(const crlab_hypersurface* m, unsigned* ell);
CRLAB_API crlab_status crlab_hypersurface_contains(const crlab_hypersurface* m, const char* point,
                                                   int* inside);

#ifdef __cplusplus
}
#endif

#endif
