/*
 Copyright 2026 The splitcourant Authors
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

#ifndef SPLITCOURANT_SPLITCOURANT_H
#define SPLITCOURANT_SPLITCOURANT_H

/* C interface to the splitcourant library. Objects are opaque handles owned
 * by the caller and released with the matching *_destroy function. Strings
 * returned through out-parameters are released with sc_string_free. Every
 * call that can fail returns an sc_status; sc_last_error describes the most
 * recent failure on the calling thread. */

#include <stdint.h>

#if defined(_WIN32)
#if defined(SPLITCOURANT_BUILDING_LIBRARY)
#define SC_API __declspec(dllexport)
#else
#define SC_API __declspec(dllimport)
#endif
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1,
  SC_ERR_PARSE = 2,
  SC_ERR_DIMENSION = 3,
  SC_ERR_DEGREE = 4,
  SC_ERR_PRECONDITION = 5,
  SC_ERR_IO = 6,
  SC_ERR_INTERNAL = 7
} sc_status;

typedef struct sc_function sc_function;
typedef struct sc_problem sc_problem;
typedef struct sc_report sc_report;

typedef struct sc_run_options {
  uint64_t seed;
  int tuples_degree;
  int max_order;
  uint64_t max_tuples;
  int timing; /* nonzero records per-check wall time */
} sc_run_options;

SC_API const char* sc_version(void);
SC_API const char* sc_last_error(void);
SC_API void sc_string_free(char* s);

/* Superfunctions over base dimension n and fiber dimension d. */
SC_API sc_status sc_function_parse(const char* src, int n, int d, sc_function** out);
SC_API sc_status sc_function_render(const sc_function* f, char** out);
SC_API void sc_function_destroy(sc_function* f);
SC_API sc_status sc_function_add(const sc_function* a, const sc_function* b, sc_function** out);
SC_API sc_status sc_function_multiply(const sc_function* a, const sc_function* b,
                                      sc_function** out);
SC_API sc_status sc_function_bracket(const sc_function* a, const sc_function* b,
                                     sc_function** out);
SC_API int sc_function_is_zero(const sc_function* f);
SC_API int sc_function_equal(const sc_function* a, const sc_function* b);

/* Sets *is_courant and, when defect is non-null, *defect = {theta, theta}. */
SC_API sc_status sc_check_courant(const sc_function* theta, int* is_courant, sc_function** defect);

/* Problem specifications. */
SC_API sc_status sc_problem_load(const char* path, sc_problem** out);
SC_API sc_status sc_problem_parse(const char* text, sc_problem** out);
SC_API void sc_problem_destroy(sc_problem* p);
SC_API int sc_problem_check_count(const sc_problem* p);

/* Names of the check commands; null past the end. */
SC_API const char* sc_command_name(int index);

SC_API void sc_run_options_default(sc_run_options* options);

/* Runs the checks of the problem, or the single request `command` (a check
 * line such as "verify-face --face twist-square") when it is non-null. */
SC_API sc_status sc_problem_run(const sc_problem* p, const sc_run_options* options,
                                const char* command, sc_report** out);

SC_API int sc_report_exit_code(const sc_report* r);
SC_API sc_status sc_report_json(const sc_report* r, char** out);
SC_API sc_status sc_report_text(const sc_report* r, char** out);
SC_API void sc_report_destroy(sc_report* r);

#ifdef __cplusplus
}
#endif

#endif
