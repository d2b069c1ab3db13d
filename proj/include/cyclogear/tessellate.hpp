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

#include <cstddef>
#include <vector>

#include "cyclogear/geometry.hpp"

namespace cyclogear {

enum class TessellationMethod { priority_queue, equal_arc, fixed_step };

/// Flank segment between two generating angles; chord is the Euclidean
/// distance between the curve points, in modules.
struct CurveSegment {
    double theta_start = 0.0;
    double theta_finish = 0.0;
    double chord = 0.0;
};

/// Polygonal approximation of the addendum flank for theta in
/// [0, tip_generating_angle]. Breakpoints strictly increase, the first is 0,
/// the last is the tip angle, and every point is an exact curve evaluation.
struct FlankPath {
    double pitch_radius = 0.0;
    double radius_ratio = 0.0;
    TessellationMethod method = TessellationMethod::priority_queue;
    std::vector<double> thetas;
    std::vector<Point2> points; // modules, unplaced gear frame

    std::size_t size() const { return thetas.size(); }
};

/// Chord between the curve points at the two angles, in modules.
double chord_length(double pitch_radius, double radius_ratio,
                    double theta_a, double theta_b);

/// Arc length of the flank curve from 0 to theta_end, in modules (closed
/// form; the rim speed is 2 (1+r) |sin(theta / 2r)| per unit pitch radius).
double flank_arc_length(double pitch_radius, double radius_ratio, double theta_end);

/// Longest-segment-first subdivision: repeatedly split the longest segment at
/// the angular midpoint until the longest chord is at most epsilon. Every
/// output chord is <= epsilon; the breakpoints tile [0, tip_angle] exactly.
/// Throws ToleranceTooSmall when the segment count would exceed 10^7.
FlankPath tessellate_priority_queue(double pitch_radius, double radius_ratio,
                                    double tip_angle, double epsilon);

/// Steps from each breakpoint to the next by solving chord = epsilon with
/// safeguarded Newton on the bracket [theta_i, tip_angle]; halts when the
/// remaining chord to the tip is <= epsilon and appends the tip. Interior
/// chords equal epsilon within 1e-9.
FlankPath tessellate_equal_arc(double pitch_radius, double radius_ratio,
                               double tip_angle, double epsilon);

/// Equal generating-angle increments, tip_angle / steps apart. Chords are not
/// equal; kept for compatibility with the original fixed-20 renderer.
FlankPath tessellate_fixed(double pitch_radius, double radius_ratio,
                           double tip_angle, int steps = 20);

} // namespace cyclogear
