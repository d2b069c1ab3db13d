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

#include "cyclogear/geometry.hpp"

#include <string>

namespace cyclogear {

void GearPairSpec::validate() const {
    if (pinion_teeth > wheel_teeth) {
        throw GearError(Errc::pinion_larger_than_wheel,
                        "pinion cannot have more teeth than wheel");
    }
    if (pinion_teeth < 3) {
        throw GearError(Errc::invalid_argument,
                        "pinion must have at least 3 teeth (got " +
                            std::to_string(pinion_teeth) + ")");
    }
    if (!(module_scale > 0.0)) {
        throw GearError(Errc::invalid_argument, "module must be positive");
    }
    if (!(clearance >= 0.0)) {
        throw GearError(Errc::invalid_argument, "clearance must be non-negative");
    }
    if (!(epsilon > 0.0)) {
        throw GearError(Errc::invalid_argument, "epsilon must be positive");
    }
    if (svg_width < 16 || svg_height < 16) {
        throw GearError(Errc::invalid_argument, "SVG dimensions must be at least 16");
    }
    if (mode == MeshMode::animation && num_frames < 2) {
        throw GearError(Errc::invalid_argument,
                        "animation needs at least 2 frames");
    }
}

Point2 epicycloid_point(double radius_ratio, double theta) {
    const double r = radius_ratio;
    const double outer = theta + theta / r;
    return {(1.0 + r) * std::cos(theta) - r * std::cos(outer),
            (1.0 + r) * std::sin(theta) - r * std::sin(outer)};
}

double addendum_tip_height(double pitch_radius, double radius_ratio, double theta) {
    return pitch_radius * norm(epicycloid_point(radius_ratio, theta));
}

Point2 placed_tooth_point(double pitch_radius, double radius_ratio, double theta,
                          double rot1, bool flip, double rot2) {
    Point2 p = rotated(epicycloid_point(radius_ratio, theta), rot1);
    if (flip) {
        p.y = -p.y;
    }
    return pitch_radius * rotated(p, rot2);
}

GearGeometry make_gear_geometry(int teeth, int mate_teeth) {
    GearGeometry g;
    g.teeth = teeth;
    g.pitch_radius = teeth / 2.0;
    g.generating_radius = (mate_teeth / 2.0) / 2.0; // half the mate's pitch radius
    g.radius_ratio = g.generating_radius / g.pitch_radius;
    g.tip_angle = 2.0 * pi / (teeth * 4.0);
    g.tip_gradient = std::tan(g.tip_angle);
    if (g.tip_gradient >= 1.0) {
        throw GearError(Errc::tip_gradient_too_large,
                        "tooth tip gradient >= 1: that's unreasonable (" +
                            std::to_string(teeth) + " teeth)");
    }
    return g;
}

GearPair derive_geometry(const GearPairSpec& spec) {
    spec.validate();
    return {make_gear_geometry(spec.wheel_teeth, spec.pinion_teeth),
            make_gear_geometry(spec.pinion_teeth, spec.wheel_teeth)};
}

} // namespace cyclogear
