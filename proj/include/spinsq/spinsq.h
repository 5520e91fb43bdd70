// Copyright 2026 The spinsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINSQ_SPINSQ_H
#define SPINSQ_SPINSQ_H

/*
 * C interface to the spinsq library: Kitagawa-Ueda spin squeezing of the
 * three-qubit GHZ/W superposition under local decoherence channels.
 *
 * Every function that can fail returns a spinsq_status. On failure a
 * message describing the error is available from spinsq_last_error() on the
 * calling thread until the next failing call on that thread. Handles are
 * opaque, owned by the caller, and released with the matching _destroy
 * function (NULL is accepted). A handle must not be used from two threads
 * at once; distinct handles are independent.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SPINSQ_BUILDING_LIBRARY)
#    define SPINSQ_API __declspec(dllexport)
#  else
#    define SPINSQ_API __declspec(dllimport)
#  endif
#else
#  define SPINSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SPINSQ_OK = 0,
    SPINSQ_ERROR_INVALID_ARGUMENT = -1, /* NULL pointer, unknown enum value */
    SPINSQ_ERROR_DOMAIN = -2,           /* value outside its physical domain */
    SPINSQ_ERROR_IO = -3,
    SPINSQ_ERROR_OUT_OF_RANGE = -4,     /* index past the end */
    SPINSQ_ERROR_NOT_READY = -5,        /* results requested before a run */
    SPINSQ_ERROR_BUFFER_TOO_SMALL = -6,
    SPINSQ_ERROR_UNKNOWN = -99
} spinsq_status;

typedef enum {
    SPINSQ_CHANNEL_AMPLITUDE_DAMPING = 0,
    SPINSQ_CHANNEL_PHASE_DAMPING = 1,
    SPINSQ_CHANNEL_DEPOLARIZING = 2,
    SPINSQ_CHANNEL_PAULI_DEPOLARIZING = 3
} spinsq_channel;

typedef enum {
    SPINSQ_DIRECTION_GIVEN = 0,
    SPINSQ_DIRECTION_MEAN = 1
} spinsq_direction_mode;

typedef enum {
    SPINSQ_FORMAT_CSV = 0,
    SPINSQ_FORMAT_JSON = 1
} spinsq_format;

typedef enum {
    SPINSQ_AXIS_ALPHA = 0,
    SPINSQ_AXIS_THETA = 1,
    SPINSQ_AXIS_PHI = 2,
    SPINSQ_AXIS_GAMMA_T = 3
} spinsq_axis;

/* One evaluated grid point. Angles in degrees, phi_star in radians.
 * In mean-direction mode theta_deg/phi_deg hold the mean spin direction;
 * with degenerate_mean set, epsilon, v_min, phi_star and the angles are NaN. */
typedef struct {
    spinsq_channel channel;
    double alpha;
    double theta_deg;
    double phi_deg;
    double gamma_t;
    double epsilon;
    double v_min;
    double phi_star_rad;
    double jx;
    double jy;
    double jz;
    int degenerate_mean;
} spinsq_record;

typedef struct {
    double theta_deg;
    double phi_deg;
    int flagged; /* no squeezing anywhere on the (alpha, gamma_t) grid */
    double min_epsilon;
} spinsq_verdict;

typedef struct {
    const char* name;   /* valid while the owning handle lives */
    const char* detail;
    int passed;
    double deviation;
    double threshold;
} spinsq_check_result;

SPINSQ_API const char* spinsq_version(void);
SPINSQ_API const char* spinsq_last_error(void);
SPINSQ_API const char* spinsq_status_string(int status);

/* Accepts amplitude, amplitude_damping, phase, phase_damping, depolarizing,
 * pauli-depolarizing / pauli_depolarizing. */
SPINSQ_API int spinsq_channel_parse(const char* name, spinsq_channel* out);
/* Canonical name, or NULL for an unknown value. */
SPINSQ_API const char* spinsq_channel_name(spinsq_channel channel);

/* Evaluates a single point: prepares sqrt(alpha)|GHZ> + sqrt(1-alpha)|W>,
 * applies the channel at gamma_t to each qubit and computes epsilon against
 * (theta_deg, phi_deg) or the mean spin direction. */
SPINSQ_API int spinsq_evaluate_point(spinsq_channel channel, double alpha, double theta_deg,
                                     double phi_deg, double gamma_t,
                                     spinsq_direction_mode mode, spinsq_record* out);

/* ---- sweeps ------------------------------------------------------------ */

typedef struct spinsq_sweep spinsq_sweep;

/* New sweep with the default grids: alpha 0:1:0.1, theta 0:90:30,
 * phi 0:180:30, gamma_t 0:5:0.05. */
SPINSQ_API int spinsq_sweep_create(spinsq_channel channel, spinsq_sweep** out);
SPINSQ_API void spinsq_sweep_destroy(spinsq_sweep* sweep);

SPINSQ_API int spinsq_sweep_set_grid(spinsq_sweep* sweep, spinsq_axis axis,
                                     const double* values, size_t count);
/* `start:stop:step` or a comma separated list. */
SPINSQ_API int spinsq_sweep_parse_grid(spinsq_sweep* sweep, spinsq_axis axis, const char* text);
SPINSQ_API int spinsq_sweep_set_direction_mode(spinsq_sweep* sweep, spinsq_direction_mode mode);
/* 0 = hardware concurrency. Results do not depend on the thread count. */
SPINSQ_API int spinsq_sweep_set_threads(spinsq_sweep* sweep, unsigned threads);

/* Checks the grids without running anything. */
SPINSQ_API int spinsq_sweep_validate(const spinsq_sweep* sweep);
SPINSQ_API int spinsq_sweep_run(spinsq_sweep* sweep);

SPINSQ_API int spinsq_sweep_record_count(const spinsq_sweep* sweep, size_t* out);
SPINSQ_API int spinsq_sweep_get_record(const spinsq_sweep* sweep, size_t index,
                                       spinsq_record* out);
/* Record with the smallest epsilon (first in sweep order on ties). */
SPINSQ_API int spinsq_sweep_min_record(const spinsq_sweep* sweep, spinsq_record* out);
SPINSQ_API int spinsq_sweep_write(const spinsq_sweep* sweep, spinsq_format format,
                                  const char* path);

/* ---- no-squeezing tables and reproduction report ------------------------ */

typedef struct spinsq_study spinsq_study;

/* Grids default as for sweeps; the channel of the template is ignored. */
SPINSQ_API int spinsq_study_create(spinsq_study** out);
SPINSQ_API void spinsq_study_destroy(spinsq_study* study);
SPINSQ_API int spinsq_study_parse_grid(spinsq_study* study, spinsq_axis axis, const char* text);
SPINSQ_API int spinsq_study_set_threads(spinsq_study* study, unsigned threads);
/* Runs the table detection, alpha scan and (depolarizing kinds) persistence
 * analysis for one channel. tol must be positive. */
SPINSQ_API int spinsq_study_add_channel(spinsq_study* study, spinsq_channel channel, double tol);

SPINSQ_API int spinsq_study_verdict_count(const spinsq_study* study, spinsq_channel channel,
                                          size_t* out);
SPINSQ_API int spinsq_study_get_verdict(const spinsq_study* study, spinsq_channel channel,
                                        size_t index, spinsq_verdict* out);
/* Copies the report (NUL terminated) into buffer. *needed receives the size
 * including the terminator; pass buffer = NULL, capacity = 0 to query it. */
SPINSQ_API int spinsq_study_report(const spinsq_study* study, char* buffer, size_t capacity,
                                   size_t* needed);
SPINSQ_API int spinsq_study_write_report(const spinsq_study* study, const char* path);

/* ---- self checks -------------------------------------------------------- */

#define SPINSQ_CHECK_INJECT_GROWING_AMPLITUDE_KRAUS 0x1u

typedef struct spinsq_checks spinsq_checks;

SPINSQ_API int spinsq_checks_run(unsigned flags, spinsq_checks** out);
SPINSQ_API void spinsq_checks_destroy(spinsq_checks* checks);
SPINSQ_API int spinsq_checks_count(const spinsq_checks* checks, size_t* out);
SPINSQ_API int spinsq_checks_get(const spinsq_checks* checks, size_t index,
                                 spinsq_check_result* out);
SPINSQ_API int spinsq_checks_all_passed(const spinsq_checks* checks, int* out);

#ifdef __cplusplus
}
#endif

#endif /* SPINSQ_SPINSQ_H */
