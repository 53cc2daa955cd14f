/*
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

#ifndef LFD_H
#define LFD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LFD_BUILDING_DLL)
#    define LFD_API __declspec(dllexport)
#  else
#    define LFD_API __declspec(dllimport)
#  endif
#else
#  define LFD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Return codes. Every function returning int uses these. */
enum lfd_error_code {
  LFD_OK = 0,
  LFD_ERROR_INVALID_ARGUMENT = -1,
  LFD_ERROR_PARSE = -2,
  LFD_ERROR_DIMENSION = -3,
  LFD_ERROR_NOT_WQH = -4,
  LFD_ERROR_RESONANCE = -5,
  LFD_ERROR_NOT_CERTIFIED = -6,
  LFD_ERROR_INCONSISTENT = -7,
  LFD_ERROR_REFUSED = -8,
  LFD_ERROR_INSUFFICIENT_BUFFER = -9,
  LFD_ERROR_NULL_POINTER = -10,
  LFD_ERROR_UNKNOWN = -100
};

typedef struct lfd_ring_struct lfd_ring_t;       /* Q[x_1..x_n] with variable names */
typedef struct lfd_poly_struct lfd_poly_t;       /* polynomial bound to a ring */
typedef struct lfd_session_struct lfd_session_t; /* validated configuration */
typedef struct lfd_report_struct lfd_report_t;   /* result of one command */

LFD_API const char* lfd_version(void);
LFD_API const char* lfd_error_description(int code);
/* Message of the most recent failure on the calling thread, "" if none. */
LFD_API const char* lfd_last_error_message(void);

/*
 * Output strings follow one protocol: on entry *len is the capacity of buf.
 * If it is too small (or buf is NULL) *len receives the required size,
 * terminator included, and LFD_ERROR_INSUFFICIENT_BUFFER is returned.
 */

LFD_API int lfd_ring_create(lfd_ring_t** ring, const char* const* names, size_t count);
LFD_API int lfd_ring_nvars(const lfd_ring_t* ring, size_t* count);
LFD_API int lfd_ring_destroy(lfd_ring_t* ring);

/* error_offset, when non-NULL, receives the byte offset of a parse error. */
LFD_API int lfd_poly_parse(lfd_poly_t** poly, const lfd_ring_t* ring, const char* text,
                           size_t* error_offset);
LFD_API int lfd_poly_to_string(const lfd_poly_t* poly, char* buf, size_t* len);
/* 1 if equal, 0 otherwise. */
LFD_API int lfd_poly_equal(const lfd_poly_t* a, const lfd_poly_t* b, int* equal);
LFD_API int lfd_poly_destroy(lfd_poly_t* poly);

/* Weights are "p/q" strings, one per variable. */
LFD_API int lfd_poly_w_order(const lfd_poly_t* poly, const char* const* weights, size_t count,
                             char* buf, size_t* len);
/* h with (chi + c) h = psi. Resonance is reported as LFD_ERROR_RESONANCE. */
LFD_API int lfd_euler_solve(lfd_poly_t** h, const lfd_poly_t* psi, const char* c,
                            const char* const* weights, size_t count);

LFD_API int lfd_session_create(lfd_session_t** session, const char* config_json);
/* Replaces one config key with a JSON value, revalidating the result. */
LFD_API int lfd_session_set(lfd_session_t* session, const char* key, const char* value_json);
LFD_API int lfd_session_run(lfd_session_t* session, const char* command, lfd_report_t** report);
LFD_API int lfd_session_destroy(lfd_session_t* session);

/* 0 ok, 1 mathematical inconsistency, 2 input error. */
LFD_API int lfd_report_exit_status(const lfd_report_t* report, int* status);
/* format: "text", "json", or NULL for the session's configured format. */
LFD_API int lfd_report_render(const lfd_report_t* report, const char* format, char* buf, size_t* len);
LFD_API int lfd_report_destroy(lfd_report_t* report);

#ifdef __cplusplus
}
#endif

#endif
