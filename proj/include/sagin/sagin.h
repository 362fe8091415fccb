/* C interface to the SAGIN relay simulator.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a sagin_status;
 * sagin_last_error() describes the most recent failure on the calling thread.
 */
#ifndef SAGIN_SAGIN_H
#define SAGIN_SAGIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SAGIN_BUILDING_LIBRARY)
#    define SAGIN_API __declspec(dllexport)
#  else
#    define SAGIN_API __declspec(dllimport)
#  endif
#else
#  define SAGIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sagin_status {
  SAGIN_OK = 0,
  SAGIN_ERR_INVALID_ARGUMENT = 1, /* null handle, bad option, unknown name */
  SAGIN_ERR_CONFIG = 2,           /* malformed config text or failed validation */
  SAGIN_ERR_IO = 3,               /* file could not be read or written */
  SAGIN_ERR_RUNTIME = 4,          /* simulation failure */
  SAGIN_ERR_OUT_OF_RANGE = 5,     /* index past the end */
  SAGIN_ERR_BUFFER_TOO_SMALL = 6  /* *len holds the required size */
} sagin_status;

typedef enum sagin_framework {
  SAGIN_FRAMEWORK_CUD = 0,
  SAGIN_FRAMEWORK_EGC_SAGIN = 1,
  SAGIN_FRAMEWORK_LEO_GBS = 2,
  SAGIN_FRAMEWORK_GBS_ONLY = 3
} sagin_framework;

typedef enum sagin_metric {
  SAGIN_METRIC_CAPACITY_BPS = 0,
  SAGIN_METRIC_EE_BPS_PER_W = 1
} sagin_metric;

typedef struct sagin_config sagin_config;
typedef struct sagin_sweep sagin_sweep;

typedef struct sagin_sweep_options {
  const int* user_counts;
  size_t n_user_counts;
  const sagin_framework* frameworks; /* NULL selects all four */
  size_t n_frameworks;
  uint64_t n_trials;                 /* 0 uses the config's n_trials */
  uint64_t seed;
  int use_config_seed;               /* nonzero: ignore `seed`, use the config's */
  int n_workers;                     /* <= 0 means 1 */
} sagin_sweep_options;

/* Library and error reporting. */
SAGIN_API const char* sagin_version(void);
SAGIN_API const char* sagin_last_error(void);
SAGIN_API const char* sagin_status_string(sagin_status status);

/* Framework ids: "cud", "egc-sagin", "leo-gbs", "gbs-only". */
SAGIN_API const char* sagin_framework_name(sagin_framework framework);
SAGIN_API sagin_status sagin_framework_parse(const char* name, sagin_framework* out);

/* Configuration. */
SAGIN_API sagin_status sagin_config_create_default(sagin_config** out);
SAGIN_API sagin_status sagin_config_load(const char* path, sagin_config** out);
SAGIN_API sagin_status sagin_config_parse(const char* text, sagin_config** out);
SAGIN_API void sagin_config_destroy(sagin_config* config);
SAGIN_API sagin_status sagin_config_set(sagin_config* config, const char* key, const char* value);

/* Copies the value (NUL-terminated) into buf. When buf is NULL or too small,
 * *len receives the required size including the terminator. */
SAGIN_API sagin_status sagin_config_get(const sagin_config* config, const char* key, char* buf,
                                        size_t* len);
SAGIN_API sagin_status sagin_config_serialize(const sagin_config* config, char* buf,
                                              size_t* len);

/* Number of violated invariants in *n_violations; the first one is reported
 * through sagin_last_error(). Returns SAGIN_OK even when violations exist. */
SAGIN_API sagin_status sagin_config_validate(const sagin_config* config, size_t* n_violations);
SAGIN_API sagin_status sagin_config_violation(const sagin_config* config, size_t index,
                                              char* buf, size_t* len);

/* Monte Carlo sweep over user counts. */
SAGIN_API void sagin_sweep_options_init(sagin_sweep_options* options);
SAGIN_API sagin_status sagin_sweep_run(const sagin_config* config,
                                       const sagin_sweep_options* options, sagin_sweep** out);
SAGIN_API void sagin_sweep_destroy(sagin_sweep* sweep);

SAGIN_API size_t sagin_sweep_point_count(const sagin_sweep* sweep);
SAGIN_API uint64_t sagin_sweep_trials(const sagin_sweep* sweep);
SAGIN_API sagin_status sagin_sweep_point(const sagin_sweep* sweep, size_t index, int* users,
                                         sagin_framework* framework);
SAGIN_API sagin_status sagin_sweep_estimate(const sagin_sweep* sweep, size_t index,
                                            sagin_metric metric, double* mean, double* ci95);

/* Output files. */
SAGIN_API sagin_status sagin_sweep_write_csv(const sagin_sweep* sweep, const char* path);
SAGIN_API sagin_status sagin_sweep_write_svg(const sagin_sweep* sweep, const char* path_prefix);

#ifdef __cplusplus
}
#endif

#endif /* SAGIN_SAGIN_H */
