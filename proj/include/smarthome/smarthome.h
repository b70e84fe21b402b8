/*
 * Copyright 2026 The smarthome-benefits Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the smarthome-benefits engine.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a shb_status; on failure shb_last_error() describes
 * the problem (thread-local, valid until the next failing call on the same
 * thread). Strings returned through `char**` out-parameters are owned by the
 * caller and released with shb_free_string().
 *
 * JSON request and response bodies are the same as those of the HTTP service
 * (see `GET /api/v1/schema`).
 */
#ifndef SMARTHOME_SMARTHOME_H_
#define SMARTHOME_SMARTHOME_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SMARTHOME_BUILDING)
#    define SHB_API __declspec(dllexport)
#  else
#    define SHB_API __declspec(dllimport)
#  endif
#else
#  define SHB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shb_status {
  SHB_OK = 0,
  SHB_ERR_SCHEMA = 1,   /* malformed input, unknown names or fields */
  SHB_ERR_SEMANTIC = 2, /* well-formed input violating an invariant */
  SHB_ERR_IO = 3,       /* file could not be read or written */
  SHB_ERR_ARGUMENT = 4, /* NULL handle or out-pointer */
  SHB_ERR_INTERNAL = 5
} shb_status;

typedef struct shb_engine shb_engine;
typedef struct shb_run shb_run;

SHB_API const char* shb_version(void);
SHB_API const char* shb_last_error(void);
SHB_API void shb_free_string(char* s);

/* Engine: built-in defaults, optionally a config file, then a JSON patch
 * (RFC 7386) of overrides; either may be NULL. `allow_local_files` lets
 * requests name weather CSV files. */
SHB_API shb_status shb_engine_create(const char* config_path, const char* overrides_json, int allow_local_files,
                                     shb_engine** out);
SHB_API void shb_engine_destroy(shb_engine* engine);
SHB_API shb_status shb_engine_config(const shb_engine* engine, char** out_json);
SHB_API shb_status shb_default_config(char** out_json);

/* One simulated year. */
SHB_API shb_status shb_simulate(const shb_engine* engine, const char* request_json, int keep_trace, shb_run** out);
SHB_API void shb_run_destroy(shb_run* run);
SHB_API const char* shb_run_response(const shb_run* run); /* owned by the run */
SHB_API double shb_run_heating_kwh(const shb_run* run);
SHB_API double shb_run_cooling_kwh(const shb_run* run);
SHB_API double shb_run_lighting_kwh(const shb_run* run);
SHB_API size_t shb_run_trace_length(const shb_run* run);
/* `hour,temp_in_c,heat_wh,cool_wh,light_wh` */
SHB_API shb_status shb_run_write_trace_csv(const shb_run* run, const char* path);
/* Annual totals of several runs as CSV with a single header. */
SHB_API shb_status shb_runs_csv(const shb_run* const* runs, size_t count, char** out_csv);

/* Indicator report; `format` is "json" or "csv". */
SHB_API shb_status shb_indicators(const shb_engine* engine, const char* request_json, const char* format,
                                  char** out);
/* Long-format `city,scenario,indicator,value,unit`. */
SHB_API shb_status shb_compare(const shb_engine* engine, const char* request_json, char** out_csv);
/* Published reference cases against the pipeline; `format` is "table" or "json". */
SHB_API shb_status shb_reference_comparison(const shb_engine* engine, const char* format, char** out);
SHB_API shb_status shb_presets(const shb_engine* engine, char** out_json);

/* HTTP-shaped entry point used by the server. Always yields a status and a
 * body; the return value only reports argument errors. */
SHB_API shb_status shb_handle_request(const shb_engine* engine, const char* method, const char* path,
                                      const char* body, int* out_http_status, char** out_body,
                                      char** out_content_type);

/* Finance and tariff primitives. Flows are yearly, end-of-year. */
SHB_API shb_status shb_npv(double investment, const double* flows, size_t count, double rate, double* out);
SHB_API shb_status shb_adi(const double* flows, size_t count, double rate, double* out);
/* *out_defined is 0 when the NPV has no root in [-0.99, 1e4]. */
SHB_API shb_status shb_irr(double investment, const double* flows, size_t count, double* out, int* out_defined);
/* SHB_ERR_SEMANTIC for zero savings ("ZeroSavings") or negative savings
 * ("NeverPaysBack"; *out_years still receives the negative ratio). */
SHB_API shb_status shb_payback(double investment, double annual_saving, double* out_years);
SHB_API shb_status shb_block_cost(double consumption_kwh, double threshold_kwh, double low_rate, double high_rate,
                                  int periods_per_year, double* out_eur);

#ifdef __cplusplus
}
#endif

#endif /* SMARTHOME_SMARTHOME_H_ */
