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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "spinsq/spinsq.h"

namespace fs = std::filesystem;

TEST_CASE("status strings and channel names") {
    CHECK(std::string(spinsq_status_string(SPINSQ_OK)) == "ok");
    CHECK(std::string(spinsq_status_string(12345)) == "unknown error");
    CHECK(std::string(spinsq_version()).size() > 0);

    spinsq_channel c;
    CHECK(spinsq_channel_parse("phase", &c) == SPINSQ_OK);
    CHECK(c == SPINSQ_CHANNEL_PHASE_DAMPING);
    CHECK(spinsq_channel_parse("nope", &c) == SPINSQ_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(spinsq_last_error()).find("nope") != std::string::npos);
    CHECK(spinsq_channel_parse(nullptr, &c) == SPINSQ_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(spinsq_channel_name(SPINSQ_CHANNEL_PAULI_DEPOLARIZING)) == "pauli_depolarizing");
    CHECK(spinsq_channel_name(static_cast<spinsq_channel>(9)) == nullptr);
}

TEST_CASE("single point evaluation") {
    spinsq_record r;
    REQUIRE(spinsq_evaluate_point(SPINSQ_CHANNEL_DEPOLARIZING, 1, 0, 0, 0, SPINSQ_DIRECTION_GIVEN, &r) == SPINSQ_OK);
    CHECK(std::abs(r.epsilon - 1.0) < 1e-12);
    REQUIRE(spinsq_evaluate_point(SPINSQ_CHANNEL_AMPLITUDE_DAMPING, 0, 0, 0, 0, SPINSQ_DIRECTION_GIVEN, &r) == SPINSQ_OK);
    CHECK(std::abs(r.epsilon - 7.0 / 3.0) < 1e-12);
    CHECK(r.jz == doctest::Approx(0.5));

    CHECK(spinsq_evaluate_point(SPINSQ_CHANNEL_AMPLITUDE_DAMPING, 1.5, 0, 0, 0, SPINSQ_DIRECTION_GIVEN, &r) ==
          SPINSQ_ERROR_DOMAIN);
    CHECK(std::string(spinsq_last_error()).find("alpha") != std::string::npos);
    CHECK(spinsq_evaluate_point(SPINSQ_CHANNEL_AMPLITUDE_DAMPING, 0.5, 200, 0, 0, SPINSQ_DIRECTION_GIVEN, &r) ==
          SPINSQ_ERROR_DOMAIN);
    CHECK(spinsq_evaluate_point(static_cast<spinsq_channel>(7), 0.5, 0, 0, 0, SPINSQ_DIRECTION_GIVEN, &r) ==
          SPINSQ_ERROR_INVALID_ARGUMENT);
    CHECK(spinsq_evaluate_point(SPINSQ_CHANNEL_AMPLITUDE_DAMPING, 0.5, 0, 0, 0, SPINSQ_DIRECTION_GIVEN, nullptr) ==
          SPINSQ_ERROR_INVALID_ARGUMENT);

    REQUIRE(spinsq_evaluate_point(SPINSQ_CHANNEL_DEPOLARIZING, 1, 0, 0, 0.5, SPINSQ_DIRECTION_MEAN, &r) == SPINSQ_OK);
    CHECK(r.degenerate_mean == 1);
    CHECK(std::isnan(r.epsilon));
}

TEST_CASE("sweep handle lifecycle") {
    spinsq_sweep* s = nullptr;
    REQUIRE(spinsq_sweep_create(SPINSQ_CHANNEL_PHASE_DAMPING, &s) == SPINSQ_OK);

    size_t n = 0;
    spinsq_record r;
    CHECK(spinsq_sweep_record_count(s, &n) == SPINSQ_ERROR_NOT_READY);
    CHECK(spinsq_sweep_min_record(s, &r) == SPINSQ_ERROR_NOT_READY);
    CHECK(spinsq_sweep_write(s, SPINSQ_FORMAT_CSV, "x.csv") == SPINSQ_ERROR_NOT_READY);

    CHECK(spinsq_sweep_parse_grid(s, SPINSQ_AXIS_GAMMA_T, "0:0:1") == SPINSQ_ERROR_DOMAIN);
    CHECK(std::string(spinsq_last_error()).find("--gammat") != std::string::npos);
    CHECK(spinsq_sweep_parse_grid(s, static_cast<spinsq_axis>(17), "1") == SPINSQ_ERROR_INVALID_ARGUMENT);

    const double alphas[] = {0.2, 0.8};
    CHECK(spinsq_sweep_set_grid(s, SPINSQ_AXIS_ALPHA, alphas, 2) == SPINSQ_OK);
    CHECK(spinsq_sweep_parse_grid(s, SPINSQ_AXIS_THETA, "0,90") == SPINSQ_OK);
    CHECK(spinsq_sweep_parse_grid(s, SPINSQ_AXIS_PHI, "0:180:90") == SPINSQ_OK);
    CHECK(spinsq_sweep_parse_grid(s, SPINSQ_AXIS_GAMMA_T, "0:1:0.5") == SPINSQ_OK);
    CHECK(spinsq_sweep_set_threads(s, 2) == SPINSQ_OK);
    CHECK(spinsq_sweep_validate(s) == SPINSQ_OK);
    REQUIRE(spinsq_sweep_run(s) == SPINSQ_OK);
    REQUIRE(spinsq_sweep_record_count(s, &n) == SPINSQ_OK);
    CHECK(n == 2 * 2 * 3 * 3);

    CHECK(spinsq_sweep_get_record(s, 0, &r) == SPINSQ_OK);
    CHECK(r.alpha == 0.2);
    CHECK(r.channel == SPINSQ_CHANNEL_PHASE_DAMPING);
    CHECK(spinsq_sweep_get_record(s, n, &r) == SPINSQ_ERROR_OUT_OF_RANGE);

    spinsq_record best;
    REQUIRE(spinsq_sweep_min_record(s, &best) == SPINSQ_OK);
    for (size_t i = 0; i < n; ++i) {
        spinsq_sweep_get_record(s, i, &r);
        CHECK(best.epsilon <= r.epsilon);
    }

    const auto dir = fs::temp_directory_path() / "spinsq_capi_test";
    fs::create_directories(dir);
    const auto out = (dir / "s.json").string();
    CHECK(spinsq_sweep_write(s, SPINSQ_FORMAT_JSON, out.c_str()) == SPINSQ_OK);
    CHECK(fs::exists(out));
    CHECK(spinsq_sweep_write(s, SPINSQ_FORMAT_CSV, (dir / "missing" / "s.csv").string().c_str()) ==
          SPINSQ_ERROR_IO);
    fs::remove_all(dir);

    // Changing a grid invalidates the previous results.
    CHECK(spinsq_sweep_parse_grid(s, SPINSQ_AXIS_ALPHA, "0.5") == SPINSQ_OK);
    CHECK(spinsq_sweep_record_count(s, &n) == SPINSQ_ERROR_NOT_READY);

    const double bad[] = {2.0};
    CHECK(spinsq_sweep_set_grid(s, SPINSQ_AXIS_ALPHA, bad, 1) == SPINSQ_OK);
    CHECK(spinsq_sweep_validate(s) == SPINSQ_ERROR_DOMAIN);
    CHECK(spinsq_sweep_run(s) == SPINSQ_ERROR_DOMAIN);
    spinsq_sweep_destroy(s);
    spinsq_sweep_destroy(nullptr);
}

TEST_CASE("study handle") {
    spinsq_study* st = nullptr;
    REQUIRE(spinsq_study_create(&st) == SPINSQ_OK);
    size_t n = 0;
    CHECK(spinsq_study_verdict_count(st, SPINSQ_CHANNEL_AMPLITUDE_DAMPING, &n) == SPINSQ_ERROR_NOT_READY);
    CHECK(spinsq_study_parse_grid(st, SPINSQ_AXIS_GAMMA_T, "0:5:1") == SPINSQ_OK);
    CHECK(spinsq_study_add_channel(st, SPINSQ_CHANNEL_AMPLITUDE_DAMPING, -1.0) == SPINSQ_ERROR_DOMAIN);
    REQUIRE(spinsq_study_add_channel(st, SPINSQ_CHANNEL_AMPLITUDE_DAMPING, 1e-9) == SPINSQ_OK);
    REQUIRE(spinsq_study_verdict_count(st, SPINSQ_CHANNEL_AMPLITUDE_DAMPING, &n) == SPINSQ_OK);
    CHECK(n == 28);
    spinsq_verdict v;
    CHECK(spinsq_study_get_verdict(st, SPINSQ_CHANNEL_AMPLITUDE_DAMPING, 27, &v) == SPINSQ_OK);
    CHECK(v.theta_deg == 90.0);
    CHECK(v.phi_deg == 180.0);
    CHECK(spinsq_study_get_verdict(st, SPINSQ_CHANNEL_AMPLITUDE_DAMPING, 28, &v) == SPINSQ_ERROR_OUT_OF_RANGE);

    size_t needed = 0;
    REQUIRE(spinsq_study_report(st, nullptr, 0, &needed) == SPINSQ_OK);
    CHECK(needed > 100);
    std::vector<char> small(10);
    CHECK(spinsq_study_report(st, small.data(), small.size(), &needed) == SPINSQ_ERROR_BUFFER_TOO_SMALL);
    std::vector<char> buf(needed);
    REQUIRE(spinsq_study_report(st, buf.data(), buf.size(), &needed) == SPINSQ_OK);
    const std::string text(buf.data());
    CHECK(text.size() + 1 == needed);
    CHECK(text.find("amplitude_damping") != std::string::npos);
    spinsq_study_destroy(st);
}

TEST_CASE("self checks through the C interface") {
    spinsq_checks* c = nullptr;
    REQUIRE(spinsq_checks_run(0, &c) == SPINSQ_OK);
    int all = 0;
    CHECK(spinsq_checks_all_passed(c, &all) == SPINSQ_OK);
    CHECK(all == 1);
    size_t n = 0;
    spinsq_checks_count(c, &n);
    CHECK(n == 5);
    spinsq_check_result r;
    CHECK(spinsq_checks_get(c, 0, &r) == SPINSQ_OK);
    CHECK(std::string(r.name) == "kraus_completeness");
    CHECK(spinsq_checks_get(c, n, &r) == SPINSQ_ERROR_OUT_OF_RANGE);
    spinsq_checks_destroy(c);

    REQUIRE(spinsq_checks_run(SPINSQ_CHECK_INJECT_GROWING_AMPLITUDE_KRAUS, &c) == SPINSQ_OK);
    spinsq_checks_all_passed(c, &all);
    CHECK(all == 0);
    spinsq_checks_get(c, 0, &r);
    CHECK(r.passed == 0);
    spinsq_checks_destroy(c);
}
