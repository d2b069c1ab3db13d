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

#include <cmath>
#include <limits>
#include <numbers>

#include "cyclogear/error.hpp"

namespace cyclogear {

inline constexpr double pi = std::numbers::pi;

inline double deg_to_rad(double degrees) { return degrees * (pi / 180.0); }
inline double rad_to_deg(double radians) { return radians * (180.0 / pi); }

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

inline Point2 rotated(Point2 p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Point at the given radius and polar angle.
inline Point2 polar_point(double radius, double angle) {
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

inline double polar_angle(Point2 p) { return std::atan2(p.y, p.x); }

enum class MeshMode { none, single_mesh, animation };

/// User-level description of a gear pair. All lengths are in module units;
/// `module_scale` converts module units to output units at export time only.
struct GearPairSpec {
    int wheel_teeth = 0;
    int pinion_teeth = 0;
    double module_scale = 1.0;
    double clearance = 0.5;
    double epsilon = 0.05;
    bool clip_dedenda = true;
    int svg_width = 750;
    int svg_height = 750;
    MeshMode mode = MeshMode::single_mesh;
    int num_frames = 0; // animation mode only

    /// Throws GearError when a field is out of range.
    void validate() const;
};

/// Derived quantities for one gear of a pair, in module units.
/// derive_geometry() fills the first group; the tip solver fills
/// tip_generating_angle/tip_height/bound_radius; compute_dedendum_depths()
/// fills the rest. Unset fields are quiet NaN.
struct GearGeometry {
    int teeth = 0;
    double pitch_radius = 0.0;      // teeth / 2
    double generating_radius = 0.0; // mate pitch radius / 2
    double radius_ratio = 0.0;      // generating_radius / pitch_radius
    double tip_angle = 0.0;         // 2*pi / (4 * teeth), radians
    double tip_gradient = 0.0;      // tan(tip_angle)

    double tip_generating_angle = std::numeric_limits<double>::quiet_NaN();
    double tip_height = std::numeric_limits<double>::quiet_NaN();
    double bound_radius = std::numeric_limits<double>::quiet_NaN();
    double dedendum_depth = std::numeric_limits<double>::quiet_NaN();
    double base_radius = std::numeric_limits<double>::quiet_NaN();
    double clearance_radius = std::numeric_limits<double>::quiet_NaN();
};

struct GearPair {
    GearGeometry wheel;
    GearGeometry pinion;
};

/// Point traced by the generating-circle rim at angle theta, for a gear of
/// unit pitch radius and radius ratio r:
///   x = (1+r) cos(theta) - r cos(theta + theta/r)
///   y = (1+r) sin(theta) - r sin(theta + theta/r)
/// theta = 0 is the cusp on the pitch circle.
Point2 epicycloid_point(double radius_ratio, double theta);

/// Distance from the gear centre to the traced point, in module units.
double addendum_tip_height(double pitch_radius, double radius_ratio, double theta);

/// Epicycloid point scaled to modules and placed:
///   pitch_radius * Rot(rot2) * (flip ? Flip_x : I) * Rot(rot1) * P(theta)
/// where Flip_x mirrors about the x axis. rot2 is applied whether or not
/// the flip is.
Point2 placed_tooth_point(double pitch_radius, double radius_ratio, double theta,
                          double rot1, bool flip, double rot2);

/// Geometry of one gear given its own tooth count and the mate's.
/// Throws TipGradientTooLarge when tan(tip_angle) >= 1.
GearGeometry make_gear_geometry(int teeth, int mate_teeth);

/// Validates the spec and derives both gears.
GearPair derive_geometry(const GearPairSpec& spec);

} // namespace cyclogear
