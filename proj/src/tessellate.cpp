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

#include "cyclogear/tessellate.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace cyclogear {

namespace {

constexpr std::size_t kMaxSegments = 10'000'000;
constexpr double kEqualChordTol = 1e-10;
constexpr int kEqualChordMaxIter = 200;

FlankPath make_path(double pitch_radius, double radius_ratio,
                    TessellationMethod method, std::vector<double> thetas) {
    FlankPath path;
    path.pitch_radius = pitch_radius;
    path.radius_ratio = radius_ratio;
    path.method = method;
    path.points.reserve(thetas.size());
    for (double theta : thetas) {
        path.points.push_back(pitch_radius * epicycloid_point(radius_ratio, theta));
    }
    path.thetas = std::move(thetas);
    return path;
}

// Derivative of the chord from the fixed point at theta_a, for Newton steps.
double chord_derivative(double pitch_radius, double radius_ratio, double theta_a,
                        double theta) {
    const double r = radius_ratio;
    const Point2 d = epicycloid_point(r, theta) - epicycloid_point(r, theta_a);
    const double len = norm(d);
    if (len == 0.0) {
        return 0.0;
    }
    const double outer = theta + theta / r;
    const Point2 velocity{(1.0 + r) * (std::sin(outer) - std::sin(theta)),
                          (1.0 + r) * (std::cos(theta) - std::cos(outer))};
    return pitch_radius * (d.x * velocity.x + d.y * velocity.y) / len;
}

// Root of chord(theta_a, theta) = epsilon on (theta_a, hi]; the chord is
// -epsilon at theta_a and positive at hi.
double solve_equal_chord(double pitch_radius, double radius_ratio, double theta_a,
                         double hi0, double epsilon, double guess_width) {
    double lo = theta_a;
    double hi = hi0;
    double theta = theta_a + guess_width;
    if (!(theta > lo && theta < hi)) {
        theta = 0.5 * (lo + hi);
    }
    for (int iter = 0; iter < kEqualChordMaxIter; ++iter) {
        const double g =
            chord_length(pitch_radius, radius_ratio, theta_a, theta) - epsilon;
        if (std::abs(g) <= kEqualChordTol) {
            return theta;
        }
        if (g > 0.0) {
            hi = theta;
        } else {
            lo = theta;
        }
        const double gp = chord_derivative(pitch_radius, radius_ratio, theta_a, theta);
        double next;
        if (std::abs(gp) < 1e-14) {
            next = 0.5 * (lo + hi);
        } else {
            next = theta - g / gp;
            if (!(next > lo && next < hi)) {
                next = 0.5 * (lo + hi);
            }
        }
        theta = next;
    }
    throw GearError(Errc::no_convergence, "equal-chord step did not converge");
}

void check_segment_budget(double pitch_radius, double radius_ratio,
                          double tip_angle, double epsilon) {
    // A chord can never exceed its arc, so arc/epsilon bounds the final
    // segment count from below.
    const double arc = flank_arc_length(pitch_radius, radius_ratio, tip_angle);
    if (arc / epsilon > static_cast<double>(kMaxSegments)) {
        throw GearError(Errc::tolerance_too_small,
                        "chord tolerance " + std::to_string(epsilon) +
                            " needs more than 10^7 segments");
    }
}

} // namespace

double chord_length(double pitch_radius, double radius_ratio, double theta_a,
                    double theta_b) {
    return pitch_radius * distance(epicycloid_point(radius_ratio, theta_a),
                                   epicycloid_point(radius_ratio, theta_b));
}

double flank_arc_length(double pitch_radius, double radius_ratio, double theta_end) {
    //   integral of 2 (1+r) |sin(theta / 2r)| dtheta
    // = 4 r (1+r) * integral of |sin u| du  for u up to theta_end / 2r,
    // and |sin| integrates to 2 per half period.
    const double r = radius_ratio;
    const double v = theta_end / (2.0 * r);
    const double half_periods = std::floor(v / pi);
    const double remainder = v - half_periods * pi;
    const double integral = 2.0 * half_periods + (1.0 - std::cos(remainder));
    return pitch_radius * 4.0 * r * (1.0 + r) * integral;
}

FlankPath tessellate_priority_queue(double pitch_radius, double radius_ratio,
                                    double tip_angle, double epsilon) {
    check_segment_budget(pitch_radius, radius_ratio, tip_angle, epsilon);

    const auto make_segment = [&](double ts, double tf) {
        return CurveSegment{ts, tf, chord_length(pitch_radius, radius_ratio, ts, tf)};
    };
    const auto longer = [](const CurveSegment& a, const CurveSegment& b) {
        return a.chord < b.chord;
    };
    std::priority_queue<CurveSegment, std::vector<CurveSegment>, decltype(longer)>
        queue(longer);
    queue.push(make_segment(0.0, tip_angle));

    std::vector<CurveSegment> done;
    while (true) {
        CurveSegment top = queue.top();
        queue.pop();
        if (top.chord <= epsilon) {
            // The popped segment has the longest chord left, so everything
            // still queued also passes; keeping it all avoids a gap.
            done.push_back(top);
            while (!queue.empty()) {
                done.push_back(queue.top());
                queue.pop();
            }
            break;
        }
        if (queue.size() + 2 > kMaxSegments) {
            throw GearError(Errc::tolerance_too_small,
                            "segment count exceeded 10^7");
        }
        const double mid = 0.5 * (top.theta_start + top.theta_finish);
        queue.push(make_segment(top.theta_start, mid));
        queue.push(make_segment(mid, top.theta_finish));
    }

    std::sort(done.begin(), done.end(),
              [](const CurveSegment& a, const CurveSegment& b) {
                  return a.theta_start < b.theta_start;
              });
    std::vector<double> thetas;
    thetas.reserve(done.size() + 1);
    thetas.push_back(done.front().theta_start);
    for (const CurveSegment& seg : done) {
        thetas.push_back(seg.theta_finish);
    }
    return make_path(pitch_radius, radius_ratio, TessellationMethod::priority_queue,
                     std::move(thetas));
}

FlankPath tessellate_equal_arc(double pitch_radius, double radius_ratio,
                               double tip_angle, double epsilon) {
    check_segment_budget(pitch_radius, radius_ratio, tip_angle, epsilon);

    std::vector<double> thetas{0.0};
    double guess_width = epsilon / (pitch_radius * (1.0 + radius_ratio));
    while (chord_length(pitch_radius, radius_ratio, thetas.back(), tip_angle) >
           epsilon) {
        if (thetas.size() > kMaxSegments) {
            throw GearError(Errc::tolerance_too_small,
                            "segment count exceeded 10^7");
        }
        const double next = solve_equal_chord(pitch_radius, radius_ratio,
                                              thetas.back(), tip_angle, epsilon,
                                              guess_width);
        guess_width = next - thetas.back();
        thetas.push_back(next);
    }
    thetas.push_back(tip_angle);
    return make_path(pitch_radius, radius_ratio, TessellationMethod::equal_arc,
                     std::move(thetas));
}

FlankPath tessellate_fixed(double pitch_radius, double radius_ratio,
                           double tip_angle, int steps) {
    std::vector<double> thetas;
    thetas.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        thetas.push_back(tip_angle * (static_cast<double>(k) / steps));
    }
    return make_path(pitch_radius, radius_ratio, TessellationMethod::fixed_step,
                     std::move(thetas));
}

} // namespace cyclogear
