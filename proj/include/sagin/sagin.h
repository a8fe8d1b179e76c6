/*
   Copyright 2026 The sagin-outage authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the sagin-outage library.
 *
 * Handles are opaque; every call returns a sagin_status. On failure the
 * message of the last error on the calling thread is available through
 * sagin_last_error() until the next call on that thread.
 */
#ifndef SAGIN_SAGIN_H
#define SAGIN_SAGIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SAGIN_API __declspec(dllexport)
#else
#define SAGIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sagin_status {
    SAGIN_OK = 0,
    SAGIN_ERR_ARGUMENT = 1, /* null handle, bad enum, ... */
    SAGIN_ERR_CONFIG = 2,   /* invalid key/value/combination */
    SAGIN_ERR_NUMERIC = 3,  /* evaluation failed */
    SAGIN_ERR_IO = 4,
    SAGIN_ERR_INTERNAL = 5
} sagin_status;

typedef enum sagin_network { SAGIN_S2G = 0, SAGIN_A2A_IM = 1, SAGIN_A2A_P = 2 } sagin_network;
typedef enum sagin_method { SAGIN_MC = 0, SAGIN_CLOSED = 1, SAGIN_INTEGRAL = 2 } sagin_method;

typedef struct sagin_config sagin_config;
typedef struct sagin_result sagin_result;

SAGIN_API const char* sagin_version(void);
SAGIN_API const char* sagin_last_error(void);
/* Key the last config error refers to, "" if none. */
SAGIN_API const char* sagin_last_error_key(void);

/* preset may be NULL or "" for none. */
SAGIN_API sagin_status sagin_config_load(const char* path, const char* preset, sagin_config** out);
SAGIN_API sagin_status sagin_config_parse(const char* text, const char* preset, sagin_config** out);
SAGIN_API sagin_status sagin_config_set(sagin_config* cfg, const char* key, const char* value);
SAGIN_API size_t sagin_config_warning_count(const sagin_config* cfg);
SAGIN_API const char* sagin_config_warning(const sagin_config* cfg, size_t i);
SAGIN_API size_t sagin_config_grid_size(const sagin_config* cfg);
SAGIN_API const char* sagin_config_sweep_var(const sagin_config* cfg);
/* Resolved eta_s (dB) and SNR thresholds (linear) at the base point. */
SAGIN_API sagin_status sagin_config_summary(const sagin_config* cfg, double* eta_s_db, double* gamma_s,
                                            double* gamma_a);
SAGIN_API void sagin_config_free(sagin_config* cfg);

/* Single evaluation at sweep value x. std_error may be NULL (0 for analytic). */
SAGIN_API sagin_status sagin_outage(const sagin_config* cfg, double x, sagin_network net, sagin_method method,
                                    double* value, double* std_error);

/* Whole sweep; workers = 0 picks SAGIN_THREADS / hardware concurrency. */
SAGIN_API sagin_status sagin_run(const sagin_config* cfg, unsigned workers, sagin_result** out);
SAGIN_API size_t sagin_result_rows(const sagin_result* res);
/* NaN when not evaluated. */
SAGIN_API double sagin_result_value(const sagin_result* res, size_t row, sagin_network net, sagin_method method);
/* Nonzero if some point failed under every method. */
SAGIN_API int sagin_result_failed(const sagin_result* res);
SAGIN_API sagin_status sagin_result_write_csv(const sagin_result* res, const char* path);
SAGIN_API void sagin_result_free(sagin_result* res);

/* Special-function oracle suite. path NULL = built-in fixture location. */
SAGIN_API sagin_status sagin_oracle_check(const char* path, size_t* passed, size_t* total, double* max_rel_err);

#ifdef __cplusplus
}
#endif

#endif /* SAGIN_SAGIN_H */
