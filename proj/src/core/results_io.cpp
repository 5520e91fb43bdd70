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

#include "spinsq/results_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "spinsq/error.hpp"

namespace spinsq {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kCsvColumns = 12;

double parse_csv_real(const std::string& token, std::size_t line) {
    if (token == "nan") return std::numeric_limits<double>::quiet_NaN();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != token.size()) {
        throw DomainError("csv line " + std::to_string(line) + ": bad number '" + token + "'");
    }
    return v;
}

ChannelKind parse_channel_or_throw(const std::string& name) {
    const auto kind = parse_channel(name);
    if (!kind) throw DomainError("unknown channel '" + name + "'");
    return *kind;
}

ordered_json real_to_json(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

double real_from_json(const ordered_json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
    if (!v.is_number()) throw DomainError(std::string("json field '") + key + "' is not a number");
    return v.get<double>();
}

}  // namespace

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << channel_name(r.channel) << ',' << format_real(r.alpha) << ','
            << format_real(r.theta_deg) << ',' << format_real(r.phi_deg) << ','
            << format_real(r.gamma_t) << ',' << format_real(r.epsilon) << ','
            << format_real(r.v_min) << ',' << format_real(r.phi_star_rad) << ','
            << format_real(r.jx) << ',' << format_real(r.jy) << ',' << format_real(r.jz) << ','
            << (r.degenerate_mean ? "true" : "false") << '\n';
    }
}

void write_json(std::ostream& out, std::span<const SweepRecord> records) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : records) {
        ordered_json row;
        row["channel"] = std::string(channel_name(r.channel));
        row["alpha"] = real_to_json(r.alpha);
        row["theta_deg"] = real_to_json(r.theta_deg);
        row["phi_deg"] = real_to_json(r.phi_deg);
        row["gamma_t"] = real_to_json(r.gamma_t);
        row["epsilon"] = real_to_json(r.epsilon);
        row["vmin"] = real_to_json(r.v_min);
        row["phi_star_rad"] = real_to_json(r.phi_star_rad);
        row["jx"] = real_to_json(r.jx);
        row["jy"] = real_to_json(r.jy);
        row["jz"] = real_to_json(r.jz);
        row["degenerate_mean"] = r.degenerate_mean;
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

std::vector<SweepRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw DomainError("csv header does not match the sweep record layout");
    }
    std::vector<SweepRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != kCsvColumns) {
            throw DomainError("csv line " + std::to_string(line_no) + ": expected " +
                              std::to_string(kCsvColumns) + " columns");
        }
        SweepRecord r;
        r.channel = parse_channel_or_throw(cells[0]);
        double* fields[] = {&r.alpha, &r.theta_deg, &r.phi_deg, &r.gamma_t, &r.epsilon,
                            &r.v_min, &r.phi_star_rad, &r.jx, &r.jy, &r.jz};
        for (std::size_t i = 0; i < std::size(fields); ++i) {
            *fields[i] = parse_csv_real(cells[i + 1], line_no);
        }
        if (cells[11] == "true") r.degenerate_mean = true;
        else if (cells[11] == "false") r.degenerate_mean = false;
        else throw DomainError("csv line " + std::to_string(line_no) + ": bad boolean");
        records.push_back(r);
    }
    return records;
}

std::vector<SweepRecord> read_json(std::istream& in) {
    ordered_json rows;
    try {
        rows = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("json parse error: ") + e.what());
    }
    if (!rows.is_array()) throw DomainError("json results must be an array");
    std::vector<SweepRecord> records;
    try {
        for (const auto& row : rows) {
            SweepRecord r;
            r.channel = parse_channel_or_throw(row.at("channel").get<std::string>());
            r.alpha = real_from_json(row, "alpha");
            r.theta_deg = real_from_json(row, "theta_deg");
            r.phi_deg = real_from_json(row, "phi_deg");
            r.gamma_t = real_from_json(row, "gamma_t");
            r.epsilon = real_from_json(row, "epsilon");
            r.v_min = real_from_json(row, "vmin");
            r.phi_star_rad = real_from_json(row, "phi_star_rad");
            r.jx = real_from_json(row, "jx");
            r.jy = real_from_json(row, "jy");
            r.jz = real_from_json(row, "jz");
            r.degenerate_mean = row.at("degenerate_mean").get<bool>();
            records.push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("json record error: ") + e.what());
    }
    return records;
}

void write_text_file(const std::string& path, std::string_view text) {
    namespace fs = std::filesystem;
    if (path.empty()) throw IoError(path, "empty output path");
    const fs::path target(path);
    const fs::path temp = fs::path(path + ".partial");
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError(path, "cannot open output file");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw IoError(path, "write failed");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(temp, ignored);
        throw IoError(path, "cannot move output into place (" + ec.message() + ")");
    }
}

void emit_results(std::span<const SweepRecord> records, OutputFormat format,
                  const std::string& path) {
    std::ostringstream buffer;
    if (format == OutputFormat::Csv) write_csv(buffer, records);
    else write_json(buffer, records);
    write_text_file(path, buffer.str());
}

}  // namespace spinsq
