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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "spinsq/spinsq.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GridFlags {
    std::string alpha;
    std::string theta;
    std::string phi;
    std::string gammat;

    template <class Handle, class Fn>
    int apply(Handle* h, Fn parse) const {
        const std::pair<spinsq_axis, const std::string*> axes[] = {
            {SPINSQ_AXIS_ALPHA, &alpha},
            {SPINSQ_AXIS_THETA, &theta},
            {SPINSQ_AXIS_PHI, &phi},
            {SPINSQ_AXIS_GAMMA_T, &gammat},
        };
        for (const auto& [axis, text] : axes) {
            if (text->empty()) continue;
            if (const int rc = parse(h, axis, text->c_str()); rc != SPINSQ_OK) return rc;
        }
        return SPINSQ_OK;
    }
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
    cmd->add_option("--alpha", g.alpha, "alpha grid, start:stop:step or a,b,c");
    cmd->add_option("--theta", g.theta, "theta grid in degrees");
    cmd->add_option("--phi", g.phi, "phi grid in degrees");
    cmd->add_option("--gammat", g.gammat, "gamma*t grid");
}

int usage_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return kExitUsage;
}

// Domain and argument errors are the caller's fault; everything else is ours.
int report(int status) {
    std::fprintf(stderr, "error: %s\n", spinsq_last_error());
    return status == SPINSQ_ERROR_DOMAIN || status == SPINSQ_ERROR_INVALID_ARGUMENT ? kExitUsage
                                                                                     : kExitFailure;
}

bool parse_channel(const std::string& name, spinsq_channel* out) {
    return spinsq_channel_parse(name.c_str(), out) == SPINSQ_OK;
}

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int cmd_point(const std::string& channel_name, double alpha, double theta, double phi,
              double gamma_t, spinsq_direction_mode mode) {
    spinsq_channel channel;
    if (!parse_channel(channel_name, &channel)) return usage_error(spinsq_last_error());
    spinsq_record r;
    if (const int rc = spinsq_evaluate_point(channel, alpha, theta, phi, gamma_t, mode, &r);
        rc != SPINSQ_OK) {
        return report(rc);
    }
    std::printf("channel       %s\n", spinsq_channel_name(r.channel));
    std::printf("alpha         %s\n", g12(r.alpha).c_str());
    std::printf("direction     theta=%s deg, phi=%s deg%s\n", g12(r.theta_deg).c_str(),
                g12(r.phi_deg).c_str(), mode == SPINSQ_DIRECTION_MEAN ? " (mean spin)" : "");
    std::printf("gamma_t       %s\n", g12(r.gamma_t).c_str());
    std::printf("epsilon       %s%s\n", g12(r.epsilon).c_str(),
                r.degenerate_mean ? "  (mean spin vanishes, no direction)"
                : r.epsilon < 1.0 - 1e-9 ? "  (squeezed)"
                                  : "");
    std::printf("v_min         %s\n", g12(r.v_min).c_str());
    std::printf("phi_star_rad  %s\n", g12(r.phi_star_rad).c_str());
    std::printf("mean_spin     (%s, %s, %s)\n", g12(r.jx).c_str(), g12(r.jy).c_str(),
                g12(r.jz).c_str());
    return 0;
}

int cmd_sweep(const std::string& channel_name, const GridFlags& grids,
              spinsq_direction_mode mode, const std::string& format, std::string out,
              unsigned threads) {
    spinsq_channel channel;
    if (!parse_channel(channel_name, &channel)) return usage_error(spinsq_last_error());
    const spinsq_format fmt = format == "json" ? SPINSQ_FORMAT_JSON : SPINSQ_FORMAT_CSV;
    if (out.empty()) out = fmt == SPINSQ_FORMAT_JSON ? "sweep.json" : "sweep.csv";

    spinsq_sweep* sweep = nullptr;
    if (const int rc = spinsq_sweep_create(channel, &sweep); rc != SPINSQ_OK) return report(rc);
    struct Release {
        spinsq_sweep* s;
        ~Release() { spinsq_sweep_destroy(s); }
    } release{sweep};

    int rc = grids.apply(sweep, spinsq_sweep_parse_grid);
    if (rc == SPINSQ_OK) rc = spinsq_sweep_set_direction_mode(sweep, mode);
    if (rc == SPINSQ_OK) rc = spinsq_sweep_set_threads(sweep, threads);
    if (rc == SPINSQ_OK) rc = spinsq_sweep_validate(sweep);
    if (rc == SPINSQ_OK) rc = spinsq_sweep_run(sweep);
    if (rc == SPINSQ_OK) rc = spinsq_sweep_write(sweep, fmt, out.c_str());
    if (rc != SPINSQ_OK) return report(rc);

    size_t count = 0;
    spinsq_sweep_record_count(sweep, &count);
    std::printf("wrote %zu records to %s\n", count, out.c_str());
    spinsq_record best;
    if (spinsq_sweep_min_record(sweep, &best) == SPINSQ_OK) {
        std::printf("min epsilon %s at alpha=%s theta=%s phi=%s gamma_t=%s\n",
                    g12(best.epsilon).c_str(), g12(best.alpha).c_str(),
                    g12(best.theta_deg).c_str(), g12(best.phi_deg).c_str(),
                    g12(best.gamma_t).c_str());
    } else {
        std::printf("min epsilon undefined (mean spin vanishes at every point)\n");
    }
    return 0;
}

int cmd_table(const std::string& channel_name, const GridFlags& grids, double tol,
              std::string out, unsigned threads) {
    std::vector<spinsq_channel> channels;
    if (channel_name == "all") {
        channels = {SPINSQ_CHANNEL_AMPLITUDE_DAMPING, SPINSQ_CHANNEL_PHASE_DAMPING,
                    SPINSQ_CHANNEL_DEPOLARIZING, SPINSQ_CHANNEL_PAULI_DEPOLARIZING};
    } else {
        spinsq_channel c;
        if (!parse_channel(channel_name, &c)) return usage_error(spinsq_last_error());
        channels.push_back(c);
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) return usage_error("--tol must be positive");
    if (out.empty()) out = "discrepancy_report.txt";

    spinsq_study* study = nullptr;
    if (const int rc = spinsq_study_create(&study); rc != SPINSQ_OK) return report(rc);
    struct Release {
        spinsq_study* s;
        ~Release() { spinsq_study_destroy(s); }
    } release{study};

    int rc = grids.apply(study, spinsq_study_parse_grid);
    if (rc == SPINSQ_OK) rc = spinsq_study_set_threads(study, threads);
    for (const auto c : channels) {
        if (rc != SPINSQ_OK) break;
        rc = spinsq_study_add_channel(study, c, tol);
    }
    if (rc != SPINSQ_OK) return report(rc);

    for (const auto c : channels) {
        size_t count = 0;
        spinsq_study_verdict_count(study, c, &count);
        std::printf("%s: no-squeezing verdicts (tol %g)\n", spinsq_channel_name(c), tol);
        std::printf("  %7s %7s  %-12s %s\n", "theta", "phi", "verdict", "min epsilon");
        for (size_t i = 0; i < count; ++i) {
            spinsq_verdict v;
            spinsq_study_get_verdict(study, c, i, &v);
            std::printf("  %7s %7s  %-12s %s\n", g12(v.theta_deg).c_str(), g12(v.phi_deg).c_str(),
                        v.flagged ? "no-squeeze" : "squeezed", g12(v.min_epsilon).c_str());
        }
    }
    if ((rc = spinsq_study_write_report(study, out.c_str())) != SPINSQ_OK) return report(rc);
    std::printf("report written to %s\n", out.c_str());
    return 0;
}

int cmd_check(bool verbose, bool inject) {
    spinsq_checks* checks = nullptr;
    const unsigned flags = inject ? SPINSQ_CHECK_INJECT_GROWING_AMPLITUDE_KRAUS : 0u;
    if (const int rc = spinsq_checks_run(flags, &checks); rc != SPINSQ_OK) return report(rc);
    size_t count = 0;
    spinsq_checks_count(checks, &count);
    std::vector<std::string> failed;
    for (size_t i = 0; i < count; ++i) {
        spinsq_check_result r;
        spinsq_checks_get(checks, i, &r);
        std::printf("%-4s %s\n", r.passed ? "ok" : "FAIL", r.name);
        if (verbose || !r.passed) {
            std::printf("     deviation %.3e (threshold %.1e)%s%s\n", r.deviation, r.threshold,
                        *r.detail ? "  " : "", r.detail);
        }
        if (!r.passed) failed.emplace_back(r.name);
    }
    spinsq_checks_destroy(checks);
    if (!failed.empty()) {
        std::string names;
        for (const auto& n : failed) names += (names.empty() ? "" : ", ") + n;
        std::fflush(stdout);
        std::fprintf(stderr, "failed checks: %s\n", names.c_str());
        return kExitFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin squeezing of the GHZ/W superposition under local decoherence"};
    app.set_version_flag("--version", spinsq_version());
    app.require_subcommand(1);

    std::string channel = "depolarizing";
    std::string direction_mode = "given";
    std::string format = "csv";
    std::string out;
    double tol = 1e-9;
    unsigned threads = 0;
    GridFlags grids;
    double alpha = 0.5, theta = 0.0, phi = 0.0, gamma_t = 0.0;
    bool verbose = false, inject = false;

    const std::vector<std::string> modes{"given", "mean"};

    auto* point = app.add_subcommand("point", "evaluate epsilon at a single point");
    point->add_option("--channel", channel, "decoherence channel")->required();
    point->add_option("--alpha", alpha, "GHZ weight in [0, 1]")->required();
    point->add_option("--theta", theta, "polar angle of the reference direction, degrees");
    point->add_option("--phi", phi, "azimuth of the reference direction, degrees");
    point->add_option("--gammat", gamma_t, "gamma*t >= 0")->required();
    point->add_option("--direction-mode", direction_mode)->check(CLI::IsMember(modes));

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write the records");
    sweep->add_option("--channel", channel, "decoherence channel")->required();
    add_grid_flags(sweep, grids);
    sweep->add_option("--direction-mode", direction_mode)->check(CLI::IsMember(modes));
    sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", out, "output path");
    sweep->add_option("--threads", threads, "worker threads, 0 = all cores");

    auto* table = app.add_subcommand("table", "no-squeezing table and reproduction report");
    table->add_option("--channel", channel, "channel name or 'all'")->required();
    add_grid_flags(table, grids);
    table->add_option("--tol", tol, "epsilon >= 1 - tol counts as no squeezing");
    table->add_option("--out", out, "report path (default discrepancy_report.txt)");
    table->add_option("--threads", threads, "worker threads, 0 = all cores");

    auto* check = app.add_subcommand("check", "run the built-in invariant checks");
    check->add_flag("--verbose", verbose, "print every deviation");
    check->add_flag("--inject-growing-amplitude-kraus", inject,
                    "debug: use sqrt(exp(+gamma t)) in the amplitude damping operator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    const auto mode = direction_mode == "mean" ? SPINSQ_DIRECTION_MEAN : SPINSQ_DIRECTION_GIVEN;
    if (*point) return cmd_point(channel, alpha, theta, phi, gamma_t, mode);
    if (*sweep) return cmd_sweep(channel, grids, mode, format, out, threads);
    if (*table) return cmd_table(channel, grids, tol, out, threads);
    return cmd_check(verbose, inject);
}
