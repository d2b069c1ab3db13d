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

#include <vector>

#include "cyclogear/geometry.hpp"
#include "cyclogear/profile.hpp"

namespace cyclogear {

/// Overall rotations, in degrees, to place a gear pair at one drawing
/// instant. The wheel sits at the origin.
struct PairPlacement {
    double wheel_rotation_deg = 0.0;
    double pinion_rotation_deg = 0.0;
    Point2 pinion_center{0.0, 0.0};
};

struct GearPhases {
    double wheel_deg = 0.0;
    double pinion_deg = 0.0;
};

/// Per-frame rotation offsets in degrees; the pinion value is negative
/// because the gears turn in opposite senses.
struct FrameRotation {
    double wheel_deg = 0.0;
    double pinion_deg = 0.0;
};

/// Meshing phases: the wheel has a tooth centre on the 45-degree centre
/// line, and the pinion has a gap centre facing it from the other side
/// (225 + 180/teeth, reduced mod the tooth period). For even pinion tooth
/// counts this is congruent to the classic 45 + 180/teeth placement; for odd
/// counts that placement puts a tooth, not a gap, on the centre line.
GearPhases mesh_phases(int wheel_teeth, int pinion_teeth);

/// The uncorrected placement (45 and 45 + 180/teeth). Overlaps for odd
/// pinion tooth counts; kept for diagnosing that failure mode.
GearPhases legacy_mesh_phases(int wheel_teeth, int pinion_teeth);

/// Frame i (1-based) rotates the wheel by +(tooth period)/num_frames*(i-1)
/// and the pinion by the same fraction of its own period, negated. The last
/// frame stops one step short of a full tooth period.
std::vector<FrameRotation> rotation_schedule(int wheel_teeth, int pinion_teeth,
                                             int num_frames);

/// Pair placed at exact centre distance along the 45-degree line.
struct MeshScene {
    double center_distance = 0.0;        // wheel + pinion pitch radii, modules
    double placement_angle = pi / 4.0;   // radians
    Point2 pinion_center{0.0, 0.0};      // center_distance * (cos 45, sin 45)
    double wheel_phase = 0.0;            // degrees
    double pinion_phase = 0.0;           // degrees
    std::vector<FrameRotation> frames;

    PairPlacement placement(const FrameRotation& frame) const {
        return {wheel_phase + frame.wheel_deg, pinion_phase + frame.pinion_deg,
                pinion_center};
    }
};

MeshScene make_mesh_scene(const GearGeometry& wheel, const GearGeometry& pinion,
                          int num_frames);

/// Side-by-side pinion centre used when no meshing is simulated: the radii
/// sum on both axes rather than along the 45-degree line.
Point2 separated_pinion_center(const GearGeometry& wheel, const GearGeometry& pinion);

struct InterferenceReport {
    double min_separation = 0.0; // modules; negative when boundaries cross
    int worst_frame = -1;        // sample index attaining the minimum
};

/// Minimum distance between two placed polygon boundaries, negative
/// (penetration depth) when they cross or one contains the other.
double polygon_boundary_separation(const std::vector<Point2>& a,
                                   const std::vector<Point2>& b);

/// Sweeps `samples` rotation states over one wheel tooth period (sampled at
/// half-step offsets, between the instants where ideal conjugate flanks
/// touch a polygon vertex exactly) and reports the worst boundary
/// separation.
InterferenceReport check_interference(const GearProfile& wheel,
                                      const GearProfile& pinion,
                                      const MeshScene& scene, int samples);

} // namespace cyclogear
