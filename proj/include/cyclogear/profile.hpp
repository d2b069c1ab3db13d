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
#include "cyclogear/tessellate.hpp"

namespace cyclogear {

/// Closed gear outline in its own frame (centre at the origin), in modules.
/// The ring is counterclockwise and simple; the last point connects back to
/// the first. Point radii lie in [clearance_radius, tip_height].
struct GearProfile {
    std::vector<Point2> points;
    int teeth = 0;
    GearGeometry geometry;
    Point2 center{0.0, 0.0};
};

/// Each gear's dedendum must swallow the mate's addendum tip:
///   dedendum_depth = mate tip_height - mate pitch_radius
/// then base_radius = pitch_radius - dedendum_depth and
/// clearance_radius = base_radius - clearance.
/// Throws NegativeClearanceRadius when a clearance radius is <= 0.
void compute_dedendum_depths(GearGeometry& wheel, GearGeometry& pinion, double clearance);

/// Open polyline of one tooth centred on the tooth_angle ray: the flank
/// rising from the pitch circle to the tip, then its mirror image falling
/// back, with the shared tip point emitted once. Spans +-tip_angle at the
/// pitch circle.
std::vector<Point2> build_tooth(const GearGeometry& gear, const FlankPath& flank,
                                double tooth_angle);

/// Full closed outline: per tooth, a radial flank from the clearance circle
/// up to the pitch circle, the tooth polyline, a radial flank back down, and
/// a root arc along the clearance circle to the next tooth. Root arcs are
/// polygonalized with chords <= epsilon.
GearProfile build_profile(const GearGeometry& gear, const FlankPath& flank,
                          double epsilon);

} // namespace cyclogear
