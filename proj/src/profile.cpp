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

#include "cyclogear/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cyclogear {

void compute_dedendum_depths(GearGeometry& wheel, GearGeometry& pinion,
                             double clearance) {
    wheel.dedendum_depth = pinion.tip_height - pinion.pitch_radius;
    pinion.dedendum_depth = wheel.tip_height - wheel.pitch_radius;
    for (GearGeometry* g : {&wheel, &pinion}) {
        g->base_radius = g->pitch_radius - g->dedendum_depth;
        g->clearance_radius = g->base_radius - clearance;
        if (!(g->clearance_radius > 0.0)) {
            throw GearError(Errc::negative_clearance_radius,
                            "clearance circle radius is not positive (" +
                                std::to_string(g->clearance_radius) + " modules on the " +
                                std::to_string(g->teeth) + "-tooth gear)");
        }
    }
}

std::vector<Point2> build_tooth(const GearGeometry& gear, const FlankPath& flank,
                                double tooth_angle) {
    // Rising half: rot1 = -tip_angle drops the flank so the tip lands on the
    // tooth-centre ray. Falling half: same flank mirrored, traversed tip to
    // base so there is no jump, with the shared tip emitted once.
    const double rot1 = -gear.tip_angle;
    std::vector<Point2> points;
    points.reserve(2 * flank.size() - 1);
    for (double theta : flank.thetas) {
        points.push_back(placed_tooth_point(gear.pitch_radius, gear.radius_ratio,
                                            theta, rot1, false, tooth_angle));
    }
    for (auto it = flank.thetas.rbegin() + 1; it != flank.thetas.rend(); ++it) {
        points.push_back(placed_tooth_point(gear.pitch_radius, gear.radius_ratio,
                                            *it, rot1, true, tooth_angle));
    }
    return points;
}

GearProfile build_profile(const GearGeometry& gear, const FlankPath& flank,
                          double epsilon) {
    const int teeth = gear.teeth;
    const double gamma = gear.tip_angle;
    const double root_radius = gear.clearance_radius;

    // Root arc between adjacent teeth, polygonalized to the same chord
    // tolerance as the flanks.
    const double arc_span = 2.0 * pi / teeth - 2.0 * gamma;
    const double max_step =
        2.0 * std::asin(std::min(1.0, epsilon / (2.0 * root_radius)));
    const int arc_subdivisions =
        std::max(1, static_cast<int>(std::ceil(arc_span / max_step)));

    GearProfile profile;
    profile.teeth = teeth;
    profile.geometry = gear;
    profile.points.reserve(static_cast<std::size_t>(teeth) *
                           (2 * flank.size() + 1 + arc_subdivisions));

    for (int k = 0; k < teeth; ++k) {
        const double tooth_angle = 2.0 * pi * k / teeth;
        // Dedendum flanks are radial straight lines (the generating circle
        // has half the mate's pitch diameter), so two points suffice.
        profile.points.push_back(polar_point(root_radius, tooth_angle - gamma));
        const std::vector<Point2> tooth = build_tooth(gear, flank, tooth_angle);
        profile.points.insert(profile.points.end(), tooth.begin(), tooth.end());
        profile.points.push_back(polar_point(root_radius, tooth_angle + gamma));
        for (int j = 1; j < arc_subdivisions; ++j) {
            profile.points.push_back(polar_point(
                root_radius, tooth_angle + gamma + arc_span * j / arc_subdivisions));
        }
    }
    return profile;
}

} // namespace cyclogear
