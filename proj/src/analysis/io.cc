// Copyright 2026 The combsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "combsim/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "combsim/errors.h"

namespace combsim {

namespace {

using json = nlohmann::json;

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    return out;
}

std::ifstream open_in(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path + " for reading");
    }
    return in;
}

void finish(std::ofstream &out, const std::string &path) {
    out.flush();
    if (!out) {
        throw IoError("write to " + path + " failed");
    }
}

void write_meta(std::ostream &out, const Metadata &meta) {
    for (const auto &[k, v] : meta.entries) {
        out << "# " << k << ": " << v << '\n';
    }
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string &s, const std::string &path) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw IoError(path + ": bad number '" + s + "'");
    }
}

long long parse_int(const std::string &s, const std::string &path) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw IoError(path + ": bad integer '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string &s, const std::string &path) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw IoError(path + ": bad unsigned integer '" + s + "'");
    }
}

// Reads metadata lines and the header; returns the data rows split on commas.
std::vector<std::vector<std::string>> read_table(const std::string &path, Metadata *meta,
                                                 std::vector<std::string> *header) {
    auto in = open_in(path);
    std::string line;
    bool have_header = false;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            const auto colon = line.find(": ");
            if (meta && colon != std::string::npos) {
                meta->set(line.substr(2, colon - 2), line.substr(colon + 2));
            }
            continue;
        }
        if (!have_header) {
            *header = split(line, ',');
            have_header = true;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() != header->size()) {
            throw IoError(path + ": row has " + std::to_string(cells.size()) + " cells, header has " +
                          std::to_string(header->size()));
        }
        rows.push_back(std::move(cells));
    }
    if (!have_header) {
        throw IoError(path + ": missing header");
    }
    return rows;
}

void expect_prefix(const std::vector<std::string> &header, const std::vector<std::string> &prefix,
                   const std::string &path) {
    if (header.size() < prefix.size() || !std::equal(prefix.begin(), prefix.end(), header.begin())) {
        throw IoError(path + ": unexpected header");
    }
}

json meta_json(const Metadata &meta) {
    json m = json::object();
    for (const auto &[k, v] : meta.entries) {
        m[k] = v;
    }
    return m;
}

void write_json_file(const std::string &path, const json &doc) {
    auto out = open_out(path);
    out << doc.dump(2) << '\n';
    finish(out, path);
}

std::string join_outcomes(const std::vector<std::uint64_t> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ';';
        }
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

Metadata &Metadata::set(const std::string &key, const std::string &value) {
    for (auto &[k, v] : entries) {
        if (k == key) {
            v = value;
            return *this;
        }
    }
    entries.emplace_back(key, value);
    return *this;
}

const std::string *Metadata::get(const std::string &key) const {
    for (const auto &[k, v] : entries) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_spectrum_csv(const std::string &path, const SpectrumSweep &s, const Metadata &meta) {
    auto out = open_out(path);
    write_meta(out, meta);
    const std::size_t width = s.rows.empty() ? 0 : s.rows.front().size();
    out << 't';
    for (std::size_t i = 0; i < width; ++i) {
        out << ",e" << i;
    }
    out << '\n';
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        out << format_double(s.times[r]);
        for (double e : s.rows[r]) {
            out << ',' << format_double(e);
        }
        out << '\n';
    }
    finish(out, path);
}

SpectrumSweep read_spectrum_csv(const std::string &path, Metadata *meta) {
    std::vector<std::string> header;
    const auto rows = read_table(path, meta, &header);
    expect_prefix(header, {"t"}, path);
    SpectrumSweep s;
    for (const auto &cells : rows) {
        s.times.push_back(parse_double(cells[0], path));
        std::vector<double> row;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            row.push_back(parse_double(cells[i], path));
        }
        s.rows.push_back(std::move(row));
    }
    return s;
}

void write_trajectory_csv(const std::string &path, const std::vector<TrajectoryRow> &rows, int k,
                          const Metadata &meta) {
    auto out = open_out(path);
    write_meta(out, meta);
    out << "iter,step,t,energy,residual";
    for (int i = 0; i < k; ++i) {
        out << ",ov" << i;
    }
    out << '\n';
    for (const auto &r : rows) {
        if (static_cast<int>(r.overlaps.size()) != k) {
            throw DimensionMismatch("trajectory row carries " + std::to_string(r.overlaps.size()) +
                                    " overlaps, expected " + std::to_string(k));
        }
        out << r.iter << ',' << r.step << ',' << format_double(r.t) << ',' << format_double(r.energy) << ','
            << format_double(r.residual);
        for (double o : r.overlaps) {
            out << ',' << format_double(o);
        }
        out << '\n';
    }
    finish(out, path);
}

std::vector<TrajectoryRow> read_trajectory_csv(const std::string &path, Metadata *meta) {
    std::vector<std::string> header;
    const auto rows = read_table(path, meta, &header);
    expect_prefix(header, {"iter", "step", "t", "energy", "residual"}, path);
    std::vector<TrajectoryRow> out;
    for (const auto &c : rows) {
        TrajectoryRow r;
        r.iter = static_cast<int>(parse_int(c[0], path));
        r.step = static_cast<int>(parse_int(c[1], path));
        r.t = parse_double(c[2], path);
        r.energy = parse_double(c[3], path);
        r.residual = parse_double(c[4], path);
        for (std::size_t i = 5; i < c.size(); ++i) {
            r.overlaps.push_back(parse_double(c[i], path));
        }
        out.push_back(std::move(r));
    }
    return out;
}

void write_ensemble_csv(const std::string &path, const std::vector<EnsembleRecord> &records, const Metadata &meta) {
    auto out = open_out(path);
    write_meta(out, meta);
    out << "seed,initial_fidelity,final_fidelity,steps,outcomes\n";
    for (const auto &r : records) {
        out << r.seed << ',' << format_double(r.initial_fidelity) << ',' << format_double(r.final_fidelity) << ','
            << r.steps << ',' << join_outcomes(r.outcomes) << '\n';
    }
    finish(out, path);
}

std::vector<EnsembleRecord> read_ensemble_csv(const std::string &path, Metadata *meta) {
    std::vector<std::string> header;
    const auto rows = read_table(path, meta, &header);
    expect_prefix(header, {"seed", "initial_fidelity", "final_fidelity", "steps", "outcomes"}, path);
    std::vector<EnsembleRecord> out;
    for (const auto &c : rows) {
        EnsembleRecord r;
        r.seed = parse_u64(c[0], path);
        r.initial_fidelity = parse_double(c[1], path);
        r.final_fidelity = parse_double(c[2], path);
        r.steps = static_cast<long>(parse_int(c[3], path));
        if (!c[4].empty()) {
            for (const auto &o : split(c[4], ';')) {
                r.outcomes.push_back(parse_u64(o, path));
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

void write_cost_csv(const std::string &path, const std::vector<CostPoint> &points, const Metadata &meta) {
    auto out = open_out(path);
    write_meta(out, meta);
    out << "method,h,delta,inv_gap,steps,gates\n";
    for (const auto &p : points) {
        out << p.method << ',' << format_double(p.h) << ',' << format_double(p.delta) << ','
            << format_double(p.inv_gap) << ',' << p.steps << ',' << p.gates << '\n';
    }
    finish(out, path);
}

std::vector<CostPoint> read_cost_csv(const std::string &path, Metadata *meta) {
    std::vector<std::string> header;
    const auto rows = read_table(path, meta, &header);
    expect_prefix(header, {"method", "h", "delta", "inv_gap", "steps", "gates"}, path);
    std::vector<CostPoint> out;
    for (const auto &c : rows) {
        CostPoint p;
        p.method = c[0];
        p.h = parse_double(c[1], path);
        p.delta = parse_double(c[2], path);
        p.inv_gap = parse_double(c[3], path);
        p.steps = static_cast<long>(parse_int(c[4], path));
        p.gates = static_cast<long>(parse_int(c[5], path));
        out.push_back(p);
    }
    return out;
}

void write_spectrum_json(const std::string &path, const SpectrumSweep &s, const Metadata &meta) {
    json rows = json::array();
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        rows.push_back({{"t", s.times[r]}, {"eigenvalues", s.rows[r]}});
    }
    write_json_file(path, {{"metadata", meta_json(meta)}, {"rows", rows}});
}

void write_trajectory_json(const std::string &path, const std::vector<TrajectoryRow> &rows, const Metadata &meta) {
    json out = json::array();
    for (const auto &r : rows) {
        out.push_back({{"iter", r.iter},
                       {"step", r.step},
                       {"t", r.t},
                       {"energy", r.energy},
                       {"residual", r.residual},
                       {"overlaps", r.overlaps}});
    }
    write_json_file(path, {{"metadata", meta_json(meta)}, {"rows", out}});
}

void write_ensemble_json(const std::string &path, const std::vector<EnsembleRecord> &records, const Metadata &meta) {
    json out = json::array();
    for (const auto &r : records) {
        out.push_back({{"seed", r.seed},
                       {"initial_fidelity", r.initial_fidelity},
                       {"final_fidelity", r.final_fidelity},
                       {"steps", r.steps},
                       {"outcomes", r.outcomes}});
    }
    write_json_file(path, {{"metadata", meta_json(meta)}, {"rows", out}});
}

void write_cost_json(const std::string &path, const std::vector<CostPoint> &points, const Metadata &meta) {
    json out = json::array();
    for (const auto &p : points) {
        out.push_back({{"method", p.method},
                       {"h", p.h},
                       {"delta", p.delta},
                       {"inv_gap", p.inv_gap},
                       {"steps", p.steps},
                       {"gates", p.gates}});
    }
    write_json_file(path, {{"metadata", meta_json(meta)}, {"rows", out}});
}

std::vector<EnsembleRecord> read_ensemble_json(const std::string &path, Metadata *meta) {
    auto in = open_in(path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception &e) {
        throw IoError(path + ": " + e.what());
    }
    if (meta && doc.contains("metadata")) {
        for (const auto &[k, v] : doc["metadata"].items()) {
            meta->set(k, v.get<std::string>());
        }
    }
    std::vector<EnsembleRecord> out;
    for (const auto &r : doc.at("rows")) {
        EnsembleRecord e;
        e.seed = r.at("seed").get<std::uint64_t>();
        e.initial_fidelity = r.at("initial_fidelity").get<double>();
        e.final_fidelity = r.at("final_fidelity").get<double>();
        e.steps = r.at("steps").get<long>();
        e.outcomes = r.at("outcomes").get<std::vector<std::uint64_t>>();
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace combsim
