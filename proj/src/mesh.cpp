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

#include "cyclogear/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cyclogear {

namespace {

struct Segment {
    Point2 a;
    Point2 b;
    Point2 mid;
    double half = 0.0; // half length, for distance lower bounds
};

std::vector<Segment> make_segments(const std::vector<Point2>& poly) {
    std::vector<Segment> segments;
    segments.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % poly.size()];
        segments.push_back({a, b, {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)},
                            0.5 * distance(a, b)});
    }
    return segments;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    }
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double orient(Point2 a, Point2 b, Point2 c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Strict crossing only: shared endpoints or tangential touches do not count.
bool properly_cross(const Segment& s, const Segment& t) {
    const double d1 = orient(t.a, t.b, s.a);
    const double d2 = orient(t.a, t.b, s.b);
    const double d3 = orient(s.a, s.b, t.a);
    const double d4 = orient(s.a, s.b, t.b);
    return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
           ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

double segment_distance(const Segment& s, const Segment& t) {
    return std::min(std::min(point_segment_distance(s.a, t.a, t.b),
                             point_segment_distance(s.b, t.a, t.b)),
                    std::min(point_segment_distance(t.a, s.a, s.b),
                             point_segment_distance(t.b, s.a, s.b)));
}

bool point_in_polygon(Point2 p, const std::vector<Point2>& poly) {
    bool inside = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % poly.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x_cross > p.x) {
                inside = !inside;
            }
        }
    }
    return inside;
}

double distance_to_boundary(Point2 p, const std::vector<Point2>& poly) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        best = std::min(best, point_segment_distance(p, poly[i],
                                                     poly[(i + 1) % poly.size()]));
    }
    return best;
}

double penetration_depth(const std::vector<Point2>& a, const std::vector<Point2>& b) {
    double depth = 0.0;
    for (const Point2& p : a) {
        if (point_in_polygon(p, b)) {
            depth = std::max(depth, distance_to_boundary(p, b));
        }
    }
    for (const Point2& p : b) {
        if (point_in_polygon(p, a)) {
            depth = std::max(depth, distance_to_boundary(p, a));
        }
    }
    return depth;
}

struct SeparationScan {
    bool crossing = false;
    double min_distance = std::numeric_limits<double>::infinity();
};

// Exact minimum over all segment pairs. The midpoint lower bound can only
// skip a pair whose distance already exceeds the running minimum, and a
// crossing pair has lower bound <= 0, so crossings are never skipped while
// the minimum is positive.
SeparationScan scan_segments(const std::vector<Segment>& a,
                             const std::vector<Segment>& b) {
    SeparationScan scan;
    for (const Segment& sa : a) {
        for (const Segment& sb : b) {
            const double lb = distance(sa.mid, sb.mid) - sa.half - sb.half;
            if (lb > scan.min_distance) {
                continue;
            }
            if (properly_cross(sa, sb)) {
                scan.crossing = true;
                return scan;
            }
            scan.min_distance = std::min(scan.min_distance, segment_distance(sa, sb));
        }
    }
    return scan;
}

std::vector<Point2> place_points(const std::vector<Point2>& points,
                                 double rotation_deg, Point2 center) {
    const double a = deg_to_rad(rotation_deg);
    const double c = std::cos(a);
    const double s = std::sin(a);
    std::vector<Point2> placed;
    placed.reserve(points.size());
    for (const Point2& p : points) {
        placed.push_back({c * p.x - s * p.y + center.x, s * p.x + c * p.y + center.y});
    }
    return placed;
}

double negative_separation(const std::vector<Point2>& a,
                           const std::vector<Point2>& b) {
    return -std::max(penetration_depth(a, b), 1e-12);
}

} // namespace

GearPhases mesh_phases(int wheel_teeth, int pinion_teeth) {
    (void)wheel_teeth;
    const double period = 360.0 / pinion_teeth;
    // A gap centre sits at phase + (k + 1/2) * period; with this phase the
    // k-th gap lands exactly on the 225-degree ray toward the wheel.
    const double pinion = std::fmod(225.0 + 180.0 / pinion_teeth, period);
    return {45.0, pinion};
}

GearPhases legacy_mesh_phases(int wheel_teeth, int pinion_teeth) {
    (void)wheel_teeth;
    return {45.0, 45.0 + 180.0 / pinion_teeth};
}

std::vector<FrameRotation> rotation_schedule(int wheel_teeth, int pinion_teeth,
                                             int num_frames) {
    const double wheel_step = (360.0 / wheel_teeth) / num_frames;
    const double pinion_step = (360.0 / pinion_teeth) / num_frames;
    std::vector<FrameRotation> frames;
    frames.reserve(num_frames);
    for (int i = 1; i <= num_frames; ++i) {
        // + 0.0 normalizes the negative zero of the first frame
        frames.push_back({wheel_step * (i - 1) + 0.0, -(pinion_step * (i - 1)) + 0.0});
    }
    return frames;
}

MeshScene make_mesh_scene(const GearGeometry& wheel, const GearGeometry& pinion,
                          int num_frames) {
    MeshScene scene;
    scene.center_distance = wheel.pitch_radius + pinion.pitch_radius;
    const double shift = (1.0 / std::sqrt(2.0)) * scene.center_distance;
    scene.pinion_center = {shift, shift};
    const GearPhases phases = mesh_phases(wheel.teeth, pinion.teeth);
    scene.wheel_phase = phases.wheel_deg;
    scene.pinion_phase = phases.pinion_deg;
    scene.frames = rotation_schedule(wheel.teeth, pinion.teeth, num_frames);
    return scene;
}

Point2 separated_pinion_center(const GearGeometry& wheel, const GearGeometry& pinion) {
    const double shift = wheel.pitch_radius + pinion.pitch_radius;
    return {shift, shift};
}

double polygon_boundary_separation(const std::vector<Point2>& a,
                                   const std::vector<Point2>& b) {
    const SeparationScan scan = scan_segments(make_segments(a), make_segments(b));
    if (scan.crossing) {
        return negative_separation(a, b);
    }
    if (point_in_polygon(a.front(), b) || point_in_polygon(b.front(), a)) {
        return negative_separation(a, b); // one outline contains the other
    }
    return scan.min_distance;
}

InterferenceReport check_interference(const GearProfile& wheel,
                                      const GearProfile& pinion,
                                      const MeshScene& scene, int samples) {
    const double wheel_period = 360.0 / wheel.teeth;
    const double pinion_period = 360.0 / pinion.teeth;
    // Keep only segments that can come within this margin of the other gear;
    // anything farther cannot set the minimum as long as some pair is closer.
    const double prune_margin = 1.0;

    InterferenceReport report;
    report.min_separation = std::numeric_limits<double>::infinity();

    for (int j = 0; j < samples; ++j) {
        // Half-step offsets: at exact quarter-period states a tooth-corner
        // vertex of each gear coincides with the pitch point and ideal
        // conjugate flanks touch at separation exactly zero.
        const double t = (j + 0.5) / samples;
        const std::vector<Point2> placed_wheel =
            place_points(wheel.points, scene.wheel_phase + wheel_period * t, {0, 0});
        const std::vector<Point2> placed_pinion = place_points(
            pinion.points, scene.pinion_phase - pinion_period * t, scene.pinion_center);

        const std::vector<Segment> wheel_segments = make_segments(placed_wheel);
        const std::vector<Segment> pinion_segments = make_segments(placed_pinion);

        std::vector<Segment> wheel_near;
        for (const Segment& s : wheel_segments) {
            if (distance(s.mid, scene.pinion_center) - s.half <=
                pinion.geometry.tip_height + prune_margin) {
                wheel_near.push_back(s);
            }
        }
        std::vector<Segment> pinion_near;
        for (const Segment& s : pinion_segments) {
            if (distance(s.mid, {0, 0}) - s.half <=
                wheel.geometry.tip_height + prune_margin) {
                pinion_near.push_back(s);
            }
        }

        SeparationScan scan;
        if (wheel_near.empty() || pinion_near.empty()) {
            scan = scan_segments(wheel_segments, pinion_segments);
        } else {
            scan = scan_segments(wheel_near, pinion_near);
            if (!scan.crossing && scan.min_distance > prune_margin) {
                // Pruned-away pairs are all farther than the margin, but the
                // kept minimum exceeded it, so rescan everything.
                scan = scan_segments(wheel_segments, pinion_segments);
            }
        }

        double separation;
        if (scan.crossing || point_in_polygon(placed_wheel.front(), placed_pinion) ||
            point_in_polygon(placed_pinion.front(), placed_wheel)) {
            separation = negative_separation(placed_wheel, placed_pinion);
        } else {
            separation = scan.min_distance;
        }

        if (separation < report.min_separation) {
            report.min_separation = separation;
            report.worst_frame = j;
        }
    }
    return report;
}

} // namespace cyclogear
