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

#ifndef COMBSIM_IO_H
#define COMBSIM_IO_H

#include <string>
#include <utility>
#include <vector>

#include "combsim/analysis.h"
#include "combsim/qaa.h"

namespace combsim {

/// Key/value lines written as `# key: value` ahead of the CSV header.
struct Metadata {
    std::vector<std::pair<std::string, std::string>> entries;

    Metadata &set(const std::string &key, const std::string &value);
    const std::string *get(const std::string &key) const;
    bool operator==(const Metadata &) const = default;
};

/// %.17g, which round-trips exactly.
std::string format_double(double x);

void write_spectrum_csv(const std::string &path, const SpectrumSweep &s, const Metadata &meta = {});
SpectrumSweep read_spectrum_csv(const std::string &path, Metadata *meta = nullptr);

void write_trajectory_csv(const std::string &path, const std::vector<TrajectoryRow> &rows, int k,
                          const Metadata &meta = {});
std::vector<TrajectoryRow> read_trajectory_csv(const std::string &path, Metadata *meta = nullptr);

void write_ensemble_csv(const std::string &path, const std::vector<EnsembleRecord> &records,
                        const Metadata &meta = {});
std::vector<EnsembleRecord> read_ensemble_csv(const std::string &path, Metadata *meta = nullptr);

void write_cost_csv(const std::string &path, const std::vector<CostPoint> &points, const Metadata &meta = {});
std::vector<CostPoint> read_cost_csv(const std::string &path, Metadata *meta = nullptr);

/// JSON mirrors of the CSV products: {"metadata": {...}, "rows": [...]}.
void write_spectrum_json(const std::string &path, const SpectrumSweep &s, const Metadata &meta = {});
void write_trajectory_json(const std::string &path, const std::vector<TrajectoryRow> &rows, const Metadata &meta = {});
void write_ensemble_json(const std::string &path, const std::vector<EnsembleRecord> &records,
                         const Metadata &meta = {});
void write_cost_json(const std::string &path, const std::vector<CostPoint> &points, const Metadata &meta = {});

std::vector<EnsembleRecord> read_ensemble_json(const std::string &path, Metadata *meta = nullptr);

}  // namespace combsim

#endif
