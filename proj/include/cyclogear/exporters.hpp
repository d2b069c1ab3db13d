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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cyclogear/geometry.hpp"
#include "cyclogear/mesh.hpp"
#include "cyclogear/profile.hpp"

namespace cyclogear {

/// Pixel mapping for the SVG writers. x grows right, y grows down;
/// coordinates are floored, not rounded.
struct SvgViewport {
    int svg_width = 0;
    int svg_height = 0;
    double leftmost_x = 0.0; // modules
    double bottommost_y = 0.0;
    double rightmost_x = 0.0;
    double topmost_y = 0.0;
    double vert_scale_factor = 0.0; // pixels per module
    double horiz_scale_factor = 0.0;
    double scale_factor = 0.0; // min of the two
};

struct SvgPixel {
    std::int64_t x = 0;
    std::int64_t y = 0;
};

/// Wheel at the origin, pinion at pinion_center; the box spans the two bound
/// circles and the scale is the smaller of the per-axis fits.
SvgViewport make_viewport(const GearGeometry& wheel, const GearGeometry& pinion,
                          Point2 pinion_center, int svg_width, int svg_height);

/// x = floor(scale * (p.x - leftmost)), y = height - floor(scale * (p.y - bottommost)).
/// Throws NonFiniteCoordinate on NaN or infinite input.
SvgPixel svg_transform(const SvgViewport& viewport, Point2 p);

struct SvgOptions {
    bool clip_dedenda = true; // false additionally draws centre lines per tooth
};

/// Full drawing of the placed pair: base (red) and clearance (blue) circles
/// for both gears, then each outline as stroke-width-2 black line elements.
std::string write_svg(const GearProfile& wheel, const GearProfile& pinion,
                      const PairPlacement& placement, const SvgViewport& viewport,
                      const SvgOptions& options);

/// linear_extrude + polygon source for one gear, full double precision,
/// coordinates in output units (modules * module_scale).
std::string write_openscad(const GearProfile& profile, double extrude_height,
                           double module_scale);

/// Both gears, the pinion rotated and translated to its meshing position.
std::string write_openscad_pair(const GearProfile& wheel, const GearProfile& pinion,
                                const PairPlacement& placement, double extrude_height,
                                double module_scale);

/// Shell script that converts each frame SVG to PNG (emitted, never run).
std::string convert_script_text(int num_frames);

/// Fixed-format animation log: teeth, SVG size, frame count, tooth periods
/// and the per-frame rotation schedule.
std::string frame_log_text(int wheel_teeth, int pinion_teeth, int svg_width,
                           int svg_height, const std::vector<FrameRotation>& frames);

/// Writes frame00001.svg .. frameNNNNN.svg plus convert_script and
/// frame_log.txt into outdir. Returns the paths written.
std::vector<std::filesystem::path> write_animation(
    const std::filesystem::path& outdir, const GearProfile& wheel,
    const GearProfile& pinion, const MeshScene& scene, const SvgViewport& viewport,
    const SvgOptions& options);

/// Writes content to path, throwing IoFailure on any stream error.
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace cyclogear
