// Copyright 2026 The Cyclogear Developers
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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclogear/geometry.hpp"
#include "cyclogear/tessellate.hpp"

namespace cyclogear {

struct RunConfig {
    GearPairSpec spec;
    std::filesystem::path out_dir = ".";
    bool emit_svg = true;
    bool emit_scad = true;
    TessellationMethod method = TessellationMethod::priority_queue;
    int verbosity = 1;
    bool legacy_scan = false;      // force exact 1-degree coarse-scan steps
    double extrude_height = 4.0;   // output units, OpenSCAD only
    int mesh_samples = 64;         // interference sweep states per tooth period
};

/// Either a config to run or a message plus exit status (usage errors,
/// --help).
struct ParseResult {
    std::optional<RunConfig> config;
    int exit_status = 0;
    std::string message;
};

/// Parses flags (program name excluded). Never throws; errors come back as a
/// message with nonzero status.
ParseResult parse_args(const std::vector<std::string>& args);

/// Full pipeline: derive, solve tips, tessellate, build profiles, simulate
/// the mesh and export. Diagnostics go to `log` at verbosity >= 1. Returns 0;
/// failures (including a failed interference check) throw GearError.
int run(const RunConfig& config, std::ostream& log);

} // namespace cyclogear
