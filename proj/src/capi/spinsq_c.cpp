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

#include "spinsq/spinsq.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "spinsq/error.hpp"
#include "spinsq/grid.hpp"
#include "spinsq/report.hpp"
#include "spinsq/results_io.hpp"
#include "spinsq/self_check.hpp"
#include "spinsq/sweep.hpp"

struct spinsq_sweep {
    spinsq::SweepSpec spec;
    unsigned threads = 0;
    std::vector<spinsq::SweepRecord> records;
    bool ran = false;
};

struct spinsq_study {
    spinsq::SweepSpec base = spinsq::SweepSpec::defaults(spinsq::ChannelKind::AmplitudeDamping);
    unsigned threads = 0;
    std::vector<spinsq::ChannelFindings> findings;
};

struct spinsq_checks {
    std::vector<spinsq::CheckResult> results;
};

namespace {

thread_local std::string g_last_error;

int fail(int status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
int guard(Fn&& fn) {
    try {
        return fn();
    } catch (const spinsq::DomainError& e) {
        return fail(SPINSQ_ERROR_DOMAIN, e.what());
    } catch (const spinsq::IoError& e) {
        return fail(SPINSQ_ERROR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SPINSQ_ERROR_UNKNOWN, "out of memory");
    } catch (const std::exception& e) {
        return fail(SPINSQ_ERROR_UNKNOWN, e.what());
    } catch (...) {
        return fail(SPINSQ_ERROR_UNKNOWN, "unknown error");
    }
}

bool to_kind(spinsq_channel c, spinsq::ChannelKind* out) {
    switch (c) {
        case SPINSQ_CHANNEL_AMPLITUDE_DAMPING: *out = spinsq::ChannelKind::AmplitudeDamping; return true;
        case SPINSQ_CHANNEL_PHASE_DAMPING: *out = spinsq::ChannelKind::PhaseDamping; return true;
        case SPINSQ_CHANNEL_DEPOLARIZING: *out = spinsq::ChannelKind::Depolarizing; return true;
        case SPINSQ_CHANNEL_PAULI_DEPOLARIZING: *out = spinsq::ChannelKind::PauliDepolarizing; return true;
    }
    return false;
}

spinsq_channel to_c(spinsq::ChannelKind k) {
    switch (k) {
        case spinsq::ChannelKind::AmplitudeDamping: return SPINSQ_CHANNEL_AMPLITUDE_DAMPING;
        case spinsq::ChannelKind::PhaseDamping: return SPINSQ_CHANNEL_PHASE_DAMPING;
        case spinsq::ChannelKind::Depolarizing: return SPINSQ_CHANNEL_DEPOLARIZING;
        case spinsq::ChannelKind::PauliDepolarizing: return SPINSQ_CHANNEL_PAULI_DEPOLARIZING;
    }
    return SPINSQ_CHANNEL_AMPLITUDE_DAMPING;
}

bool to_mode(spinsq_direction_mode m, spinsq::DirectionMode* out) {
    switch (m) {
        case SPINSQ_DIRECTION_GIVEN: *out = spinsq::DirectionMode::Given; return true;
        case SPINSQ_DIRECTION_MEAN: *out = spinsq::DirectionMode::Mean; return true;
    }
    return false;
}

std::vector<double>* grid_for(spinsq::SweepSpec& spec, spinsq_axis axis) {
    switch (axis) {
        case SPINSQ_AXIS_ALPHA: return &spec.alpha_grid;
        case SPINSQ_AXIS_THETA: return &spec.theta_grid_deg;
        case SPINSQ_AXIS_PHI: return &spec.phi_grid_deg;
        case SPINSQ_AXIS_GAMMA_T: return &spec.gamma_t_grid;
    }
    return nullptr;
}

const char* axis_flag(spinsq_axis axis) {
    switch (axis) {
        case SPINSQ_AXIS_ALPHA: return "alpha";
        case SPINSQ_AXIS_THETA: return "theta";
        case SPINSQ_AXIS_PHI: return "phi";
        case SPINSQ_AXIS_GAMMA_T: return "gammat";
    }
    return "?";
}

void to_c(const spinsq::SweepRecord& r, spinsq_record* out) {
    *out = {to_c(r.channel), r.alpha, r.theta_deg, r.phi_deg, r.gamma_t, r.epsilon, r.v_min,
            r.phi_star_rad, r.jx, r.jy, r.jz, r.degenerate_mean ? 1 : 0};
}

int null_argument(const char* what) {
    return fail(SPINSQ_ERROR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

int set_grid_text(spinsq::SweepSpec& spec, spinsq_axis axis, const char* text) {
    auto* grid = grid_for(spec, axis);
    if (!grid) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown grid axis");
    if (!text) return null_argument("grid text");
    try {
        *grid = spinsq::parse_grid(text);
    } catch (const spinsq::DomainError& e) {
        return fail(SPINSQ_ERROR_DOMAIN, std::string("--") + axis_flag(axis) + ": " + e.what());
    }
    return SPINSQ_OK;
}

}  // namespace

extern "C" {

const char* spinsq_version(void) { return "1.0.0"; }

const char* spinsq_last_error(void) { return g_last_error.c_str(); }

const char* spinsq_status_string(int status) {
    switch (status) {
        case SPINSQ_OK: return "ok";
        case SPINSQ_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case SPINSQ_ERROR_DOMAIN: return "domain error";
        case SPINSQ_ERROR_IO: return "i/o error";
        case SPINSQ_ERROR_OUT_OF_RANGE: return "index out of range";
        case SPINSQ_ERROR_NOT_READY: return "results not available";
        case SPINSQ_ERROR_BUFFER_TOO_SMALL: return "buffer too small";
        default: return "unknown error";
    }
}

int spinsq_channel_parse(const char* name, spinsq_channel* out) {
    if (!name || !out) return null_argument("channel name and output");
    const auto kind = spinsq::parse_channel(name);
    if (!kind) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, std::string("unknown channel '") + name + "'");
    *out = to_c(*kind);
    return SPINSQ_OK;
}

const char* spinsq_channel_name(spinsq_channel channel) {
    spinsq::ChannelKind kind{};
    if (!to_kind(channel, &kind)) return nullptr;
    return spinsq::channel_name(kind).data();
}

int spinsq_evaluate_point(spinsq_channel channel, double alpha, double theta_deg, double phi_deg,
                          double gamma_t, spinsq_direction_mode mode, spinsq_record* out) {
    if (!out) return null_argument("output record");
    spinsq::ChannelKind kind{};
    spinsq::DirectionMode m;
    if (!to_kind(channel, &kind)) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown channel");
    if (!to_mode(mode, &m)) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown direction mode");
    return guard([&] {
        to_c(spinsq::evaluate_point(kind, alpha, theta_deg, phi_deg, gamma_t, m), out);
        return SPINSQ_OK;
    });
}

int spinsq_sweep_create(spinsq_channel channel, spinsq_sweep** out) {
    if (!out) return null_argument("output handle");
    spinsq::ChannelKind kind{};
    if (!to_kind(channel, &kind)) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown channel");
    return guard([&] {
        auto* s = new spinsq_sweep;
        s->spec = spinsq::SweepSpec::defaults(kind);
        *out = s;
        return SPINSQ_OK;
    });
}

void spinsq_sweep_destroy(spinsq_sweep* sweep) { delete sweep; }

int spinsq_sweep_set_grid(spinsq_sweep* sweep, spinsq_axis axis, const double* values,
                          size_t count) {
    if (!sweep) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null sweep handle");
    if (!values && count > 0) return null_argument("grid values");
    auto* grid = grid_for(sweep->spec, axis);
    if (!grid) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown grid axis");
    return guard([&] {
        grid->assign(values, values + count);
        sweep->ran = false;
        return SPINSQ_OK;
    });
}

int spinsq_sweep_parse_grid(spinsq_sweep* sweep, spinsq_axis axis, const char* text) {
    if (!sweep) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null sweep handle");
    sweep->ran = false;
    return guard([&] { return set_grid_text(sweep->spec, axis, text); });
}

int spinsq_sweep_set_direction_mode(spinsq_sweep* sweep, spinsq_direction_mode mode) {
    if (!sweep) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null sweep handle");
    if (!to_mode(mode, &sweep->spec.direction_mode)) {
        return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown direction mode");
    }
    sweep->ran = false;
    return SPINSQ_OK;
}

int spinsq_sweep_set_threads(spinsq_sweep* sweep, unsigned threads) {
    if (!sweep) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null sweep handle");
    sweep->threads = threads;
    return SPINSQ_OK;
}

int spinsq_sweep_validate(const spinsq_sweep* sweep) {
    if (!sweep) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null sweep handle");
    return guard([&] {
        spinsq::validate_sweep_spec(sweep->spec);
        return SPINSQ_OK;
    });
}

int spinsq_sweep_run(spinsq_sweep* sweep) {
    if (!sweep) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null sweep handle");
    return guard([&] {
        sweep->records = spinsq::run_sweep(sweep->spec, sweep->threads);
        sweep->ran = true;
        return SPINSQ_OK;
    });
}

int spinsq_sweep_record_count(const spinsq_sweep* sweep, size_t* out) {
    if (!sweep || !out) return null_argument("sweep handle and output");
    if (!sweep->ran) return fail(SPINSQ_ERROR_NOT_READY, "sweep has not been run");
    *out = sweep->records.size();
    return SPINSQ_OK;
}

int spinsq_sweep_get_record(const spinsq_sweep* sweep, size_t index, spinsq_record* out) {
    if (!sweep || !out) return null_argument("sweep handle and output");
    if (!sweep->ran) return fail(SPINSQ_ERROR_NOT_READY, "sweep has not been run");
    if (index >= sweep->records.size()) {
        return fail(SPINSQ_ERROR_OUT_OF_RANGE, "record index " + std::to_string(index) +
                                                   " out of range");
    }
    to_c(sweep->records[index], out);
    return SPINSQ_OK;
}

int spinsq_sweep_min_record(const spinsq_sweep* sweep, spinsq_record* out) {
    if (!sweep || !out) return null_argument("sweep handle and output");
    if (!sweep->ran) return fail(SPINSQ_ERROR_NOT_READY, "sweep has not been run");
    const spinsq::SweepRecord* best = nullptr;
    for (const auto& r : sweep->records) {
        if (r.degenerate_mean) continue;
        if (!best || r.epsilon < best->epsilon) best = &r;
    }
    if (!best) return fail(SPINSQ_ERROR_NOT_READY, "sweep has no non-degenerate records");
    to_c(*best, out);
    return SPINSQ_OK;
}

int spinsq_sweep_write(const spinsq_sweep* sweep, spinsq_format format, const char* path) {
    if (!sweep || !path) return null_argument("sweep handle and path");
    if (!sweep->ran) return fail(SPINSQ_ERROR_NOT_READY, "sweep has not been run");
    if (format != SPINSQ_FORMAT_CSV && format != SPINSQ_FORMAT_JSON) {
        return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown output format");
    }
    return guard([&] {
        spinsq::emit_results(sweep->records,
                             format == SPINSQ_FORMAT_CSV ? spinsq::OutputFormat::Csv
                                                         : spinsq::OutputFormat::Json,
                             path);
        return SPINSQ_OK;
    });
}

int spinsq_study_create(spinsq_study** out) {
    if (!out) return null_argument("output handle");
    return guard([&] {
        *out = new spinsq_study;
        return SPINSQ_OK;
    });
}

void spinsq_study_destroy(spinsq_study* study) { delete study; }

int spinsq_study_parse_grid(spinsq_study* study, spinsq_axis axis, const char* text) {
    if (!study) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null study handle");
    return guard([&] { return set_grid_text(study->base, axis, text); });
}

int spinsq_study_set_threads(spinsq_study* study, unsigned threads) {
    if (!study) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null study handle");
    study->threads = threads;
    return SPINSQ_OK;
}

int spinsq_study_add_channel(spinsq_study* study, spinsq_channel channel, double tol) {
    if (!study) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null study handle");
    spinsq::ChannelKind kind{};
    if (!to_kind(channel, &kind)) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown channel");
    return guard([&] {
        auto findings = spinsq::study_channel(kind, study->base, tol, study->threads);
        auto it = std::find_if(study->findings.begin(), study->findings.end(),
                               [&](const auto& f) { return f.channel == kind; });
        if (it != study->findings.end()) *it = std::move(findings);
        else study->findings.push_back(std::move(findings));
        return SPINSQ_OK;
    });
}

int spinsq_study_verdict_count(const spinsq_study* study, spinsq_channel channel, size_t* out) {
    if (!study || !out) return null_argument("study handle and output");
    spinsq::ChannelKind kind{};
    if (!to_kind(channel, &kind)) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "unknown channel");
    for (const auto& f : study->findings) {
        if (f.channel == kind) {
            *out = f.verdicts.size();
            return SPINSQ_OK;
        }
    }
    return fail(SPINSQ_ERROR_NOT_READY, "channel has not been added to the study");
}

int spinsq_study_get_verdict(const spinsq_study* study, spinsq_channel channel, size_t index,
                             spinsq_verdict* out) {
    size_t count = 0;
    if (const int rc = spinsq_study_verdict_count(study, channel, &count); rc != SPINSQ_OK) return rc;
    if (!out) return null_argument("output verdict");
    if (index >= count) return fail(SPINSQ_ERROR_OUT_OF_RANGE, "verdict index out of range");
    spinsq::ChannelKind kind{};
    to_kind(channel, &kind);
    for (const auto& f : study->findings) {
        if (f.channel != kind) continue;
        const auto& v = f.verdicts[index];
        *out = {v.theta_deg, v.phi_deg, v.flagged ? 1 : 0, v.min_epsilon_over_grid};
    }
    return SPINSQ_OK;
}

int spinsq_study_report(const spinsq_study* study, char* buffer, size_t capacity, size_t* needed) {
    if (!study) return fail(SPINSQ_ERROR_INVALID_ARGUMENT, "null study handle");
    return guard([&] {
        const std::string text = spinsq::discrepancy_report(study->findings);
        if (needed) *needed = text.size() + 1;
        if (!buffer && capacity == 0) return static_cast<int>(SPINSQ_OK);
        if (!buffer || capacity < text.size() + 1) {
            return fail(SPINSQ_ERROR_BUFFER_TOO_SMALL, "report needs " +
                                                           std::to_string(text.size() + 1) + " bytes");
        }
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        return static_cast<int>(SPINSQ_OK);
    });
}

int spinsq_study_write_report(const spinsq_study* study, const char* path) {
    if (!study || !path) return null_argument("study handle and path");
    return guard([&] {
        spinsq::write_text_file(path, spinsq::discrepancy_report(study->findings));
        return SPINSQ_OK;
    });
}

int spinsq_checks_run(unsigned flags, spinsq_checks** out) {
    if (!out) return null_argument("output handle");
    return guard([&] {
        spinsq::CheckOptions options;
        options.inject_growing_amplitude_kraus = (flags & SPINSQ_CHECK_INJECT_GROWING_AMPLITUDE_KRAUS) != 0;
        auto* c = new spinsq_checks;
        c->results = spinsq::run_self_checks(options);
        *out = c;
        return SPINSQ_OK;
    });
}

void spinsq_checks_destroy(spinsq_checks* checks) { delete checks; }

int spinsq_checks_count(const spinsq_checks* checks, size_t* out) {
    if (!checks || !out) return null_argument("checks handle and output");
    *out = checks->results.size();
    return SPINSQ_OK;
}

int spinsq_checks_get(const spinsq_checks* checks, size_t index, spinsq_check_result* out) {
    if (!checks || !out) return null_argument("checks handle and output");
    if (index >= checks->results.size()) return fail(SPINSQ_ERROR_OUT_OF_RANGE, "check index out of range");
    const auto& r = checks->results[index];
    *out = {r.name.c_str(), r.detail.c_str(), r.passed ? 1 : 0, r.deviation, r.threshold};
    return SPINSQ_OK;
}

int spinsq_checks_all_passed(const spinsq_checks* checks, int* out) {
    if (!checks || !out) return null_argument("checks handle and output");
    *out = std::all_of(checks->results.begin(), checks->results.end(),
                       [](const auto& r) { return r.passed; })
               ? 1
               : 0;
    return SPINSQ_OK;
}

}  // extern "C"
