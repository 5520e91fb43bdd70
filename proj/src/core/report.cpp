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

#include "spinsq/report.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <string>

#include "spinsq/error.hpp"

namespace spinsq {

namespace {

std::string printf_string(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

struct Tally {
    int match = 0;
    int mismatch = 0;
    int not_run = 0;

    const char* record(bool ok) {
        ok ? ++match : ++mismatch;
        return ok ? "MATCH" : "MISMATCH";
    }
    const char* skip() {
        ++not_run;
        return "NOT-RUN";
    }
    void operator+=(const Tally& o) {
        match += o.match;
        mismatch += o.mismatch;
        not_run += o.not_run;
    }
};

const ChannelFindings* find(std::span<const ChannelFindings> findings, ChannelKind kind) {
    for (const auto& f : findings)
        if (f.channel == kind) return &f;
    return nullptr;
}

const NoSqueezeVerdict* find_row(const ChannelFindings& f, const AnglePair& row) {
    for (const auto& v : f.verdicts)
        if (v.theta_deg == row.theta_deg && v.phi_deg == row.phi_deg) return &v;
    return nullptr;
}

class ReportWriter {
public:
    explicit ReportWriter(std::span<const ChannelFindings> findings, const ReferenceClaims& claims)
        : findings_(findings), claims_(claims) {}

    std::string build() {
        line("spin squeezing reproduction report");
        line("==================================");
        line("rule: a direction counts as \"no squeezing\" when epsilon >= 1 - tol at every");
        line("      alpha and gamma_t of the evaluated grid");
        std::string evaluated;
        for (const auto& f : findings_) {
            if (!evaluated.empty()) evaluated += ", ";
            evaluated += std::string(channel_name(f.channel)) + printf_string(" (tol %g)", f.tol);
        }
        line("channels evaluated: " + (evaluated.empty() ? std::string("none") : evaluated));
        line("conventions:");
        line("  amplitude_damping   E1 = diag(1, sqrt(exp(-gt))), E2 = sqrt(1 - exp(-gt)) |0><1|");
        line("  depolarizing        rho -> exp(-gt) rho + (1 - exp(-gt)) I/2, fourth operator sigma_z");
        line("  pauli_depolarizing  weights exp(-gt) on I and (1 - exp(-gt))/3 on each Pauli,");
        line("                      which does not reach I/8 as gt grows; reported for comparison");
        line("  theta = 0 rows: pure GHZ already has transverse variance N/4 (epsilon = 1), not 0");

        for (ChannelKind k : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping})
            table_claim(k);
        for (ChannelKind k : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping})
            probe_alpha_claim(k);
        for (ChannelKind k : {ChannelKind::Depolarizing, ChannelKind::PauliDepolarizing}) {
            z_axis_claim(k);
            persistence_claim(k);
        }

        line("");
        line(printf_string("overall: %d MATCH, %d MISMATCH, %d NOT-RUN", total_.match,
                           total_.mismatch, total_.not_run));
        return out_;
    }

private:
    void line(const std::string& s) { out_ += s + '\n'; }

    void heading(const std::string& title) {
        line("");
        line(printf_string("[%d] ", ++section_) + title);
    }

    void close_section(Tally& t) {
        line(printf_string("    result: %d MATCH, %d MISMATCH, %d NOT-RUN", t.match, t.mismatch,
                           t.not_run));
        total_ += t;
    }

    // Rows of the reference no-squeezing table: expected flagged.
    void table_claim(ChannelKind kind) {
        heading(std::string(channel_name(kind)) +
                ": no squeezing at the reference (theta, phi) rows for every alpha");
        verdict_rows(kind, claims_.no_squeezing_rows, true);
    }

    // Depolarizing squeezes even with the reference direction along z.
    void z_axis_claim(ChannelKind kind) {
        heading(std::string(channel_name(kind)) +
                ": squeezing generated with the reference direction along z (theta = 0)");
        verdict_rows(kind, claims_.depolarizing_squeezing_rows, false);
    }

    void verdict_rows(ChannelKind kind, const std::vector<AnglePair>& rows, bool expect_flagged) {
        Tally t;
        const ChannelFindings* f = find(findings_, kind);
        line("    theta     phi  expected      computed      min_epsilon        verdict");
        for (const auto& row : rows) {
            const NoSqueezeVerdict* v = f ? find_row(*f, row) : nullptr;
            const char* expected = expect_flagged ? "no squeezing" : "squeezing   ";
            if (!v) {
                line(printf_string("    %5g  %6g  %s  %-12s  %-17s  %s", row.theta_deg, row.phi_deg,
                                   expected, "-", "-", t.skip()));
                continue;
            }
            const char* computed = v->flagged ? "no squeezing" : "squeezing";
            line(printf_string("    %5g  %6g  %s  %-12s  %-17.10g  %s", row.theta_deg, row.phi_deg,
                               expected, computed, v->min_epsilon_over_grid,
                               t.record(v->flagged == expect_flagged)));
        }
        close_section(t);
    }

    void probe_alpha_claim(ChannelKind kind) {
        heading(std::string(channel_name(kind)) +
                printf_string(": alpha = %g stays unsqueezed (epsilon >= 1) at every gamma_t",
                              claims_.probe_alpha));
        Tally t;
        const ChannelFindings* f = find(findings_, kind);
        if (!f || f->alpha_scans.empty()) {
            line(printf_string("    alpha scan not run: %s", t.skip()));
            close_section(t);
            return;
        }
        line(printf_string("    theta     phi  %-18s  verdict   alphas with epsilon >= 1 - tol",
                           printf_string("min_epsilon(%g)", claims_.probe_alpha).c_str()));
        for (const auto& scan : f->alpha_scans) {
            std::string unsqueezed;
            for (const auto& a : scan.per_alpha) {
                if (!a.unsqueezed) continue;
                if (!unsqueezed.empty()) unsqueezed += ' ';
                unsqueezed += printf_string("%g", a.alpha);
            }
            if (unsqueezed.empty()) unsqueezed = "none";
            line(printf_string("    %5g  %6g  %-18.10g  %-8s  %s", scan.direction.theta_deg(),
                               scan.direction.phi_deg(), scan.probe_min_epsilon,
                               t.record(scan.probe_unsqueezed), unsqueezed.c_str()));
        }
        close_section(t);
    }

    void persistence_claim(ChannelKind kind) {
        heading(std::string(channel_name(kind)) +
                ": squeezing decays slowly but never vanishes (epsilon < 1 for all gamma_t > 0)");
        Tally t;
        const ChannelFindings* f = find(findings_, kind);
        if (!f || !f->persistence) {
            line(printf_string("    persistence sweep not run: %s", t.skip()));
            close_section(t);
            return;
        }
        const auto& p = *f->persistence;
        line(printf_string("    series examined: %zu, squeezed at gamma_t = 0: %zu, "
                           "squeezed at every gamma_t: %zu",
                           p.series, p.candidates, p.persistent));
        if (p.strongest) {
            const auto& e = *p.strongest;
            line(printf_string("    strongest: alpha=%g theta=%g phi=%g epsilon(0)=%.10g "
                               "epsilon(end)=%.10g max epsilon(gamma_t>0)=%.10g",
                               e.alpha, e.theta_deg, e.phi_deg, e.epsilon_initial, e.epsilon_final,
                               e.max_epsilon_after_start));
        }
        line(printf_string("    persistent squeezing found: %s  %s", p.persistent > 0 ? "yes" : "no",
                           t.record(p.persistent > 0)));
        close_section(t);
    }

    std::span<const ChannelFindings> findings_;
    const ReferenceClaims& claims_;
    std::string out_;
    int section_ = 0;
    Tally total_;
};

}  // namespace

ReferenceClaims reference_claims() {
    ReferenceClaims claims;
    claims.no_squeezing_rows = {{0, 0},   {0, 30},  {0, 60}, {0, 90},  {0, 120},
                                {0, 150}, {0, 180}, {30, 0}, {90, 0},  {90, 180}};
    for (double phi = 0; phi <= 180; phi += 30) claims.depolarizing_squeezing_rows.push_back({0, phi});
    claims.probe_alpha = kProbeAlpha;
    return claims;
}

ChannelFindings study_channel(ChannelKind channel, const SweepSpec& base, double tol,
                              unsigned threads) {
    if (!(tol > 0.0)) throw DomainError("study tolerance must be positive");
    SweepSpec spec = base;
    spec.channel = channel;
    spec.direction_mode = DirectionMode::Given;
    const auto records = run_sweep(spec, threads);

    ChannelFindings f;
    f.channel = channel;
    f.tol = tol;
    f.verdicts = summarize_no_squeezing(records, tol);

    std::vector<Direction> directions;
    for (double t : spec.theta_grid_deg)
        for (double p : spec.phi_grid_deg) directions.emplace_back(t, p);
    f.alpha_scans = alpha_sensitivity_scans(channel, directions, spec.gamma_t_grid, tol, threads);

    if (channel == ChannelKind::Depolarizing || channel == ChannelKind::PauliDepolarizing) {
        f.persistence = find_persistent_squeezing(records);
    }
    return f;
}

std::string discrepancy_report(std::span<const ChannelFindings> findings,
                               const ReferenceClaims& claims) {
    return ReportWriter(findings, claims).build();
}

}  // namespace spinsq
