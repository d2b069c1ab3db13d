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

#include "cyclogear/tip_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cyclogear {

namespace {

constexpr double kResidualTol = 1e-14;
constexpr double kStepTol = 1e-13;
constexpr double kDerivativeFloor = 1e-14;
constexpr int kMaxIterations = 60;

} // namespace

double gradient_difference(double radius_ratio, double gradient, double theta) {
    const double r = radius_ratio;
    const double m = gradient;
    const double outer = theta + theta / r;
    return (1.0 + r) * std::sin(theta) - r * std::sin(outer) -
           (m + m * r) * std::cos(theta) + m * r * std::cos(outer);
}

double gradient_difference_derivative(double radius_ratio, double gradient,
                                      double theta) {
    // d/dtheta of the outer terms carries a factor r (1 + 1/r) = 1 + r, so
    // every term shares the (1 + r) coefficient.
    const double r = radius_ratio;
    const double m = gradient;
    const double outer = theta + theta / r;
    return (1.0 + r) * (std::cos(theta) - std::cos(outer) +
                        m * std::sin(theta) - m * std::sin(outer));
}

double default_scan_step(double gradient) {
    // A fixed 1-degree step under-samples the addendum span of high tooth
    // counts; tip_angle/4 keeps several samples inside it.
    return std::min(deg_to_rad(1.0), std::atan(gradient) / 4.0);
}

double default_scan_limit(double radius_ratio) {
    // One generating-circle revolution, capped at a full turn.
    return std::min(2.0 * pi * radius_ratio, 2.0 * pi);
}

ScanBracket coarse_scan(double radius_ratio, double gradient, double scan_limit,
                        double scan_step, std::vector<ScanSample>* trace) {
    for (int k = 0;; ++k) {
        const double theta = k * scan_step;
        const double value = gradient_difference(radius_ratio, gradient, theta);
        if (trace != nullptr) {
            trace->push_back({rad_to_deg(theta), value});
        }
        if (value > 0.0) {
            return {theta - scan_step, theta};
        }
        if (theta > scan_limit) {
            throw GearError(Errc::scan_failed,
                            "could not find GC stopping angle within " +
                                std::to_string(rad_to_deg(scan_limit)) + " degrees");
        }
    }
}

TipSolution solve_tip_angle(double radius_ratio, double gradient,
                            const TipSolveOptions& options) {
    const double limit =
        options.scan_limit > 0.0 ? options.scan_limit : default_scan_limit(radius_ratio);
    const double step =
        options.scan_step > 0.0 ? options.scan_step : default_scan_step(gradient);

    const ScanBracket scan =
        coarse_scan(radius_ratio, gradient, limit, step, options.scan_trace);

    // The residual is <= 0 at lo (it is exactly -gradient at theta = 0) and
    // > 0 at hi, and the derivative vanishes at theta = 0, so iteration
    // starts from the upper end.
    double lo = scan.lo;
    double hi = scan.hi;
    double theta = hi;
    double f = gradient_difference(radius_ratio, gradient, theta);
    int iterations = 0;

    while (std::abs(f) > kResidualTol) {
        if (++iterations > kMaxIterations) {
            throw GearError(Errc::no_convergence,
                            "tip angle iteration did not converge in " +
                                std::to_string(kMaxIterations) + " steps");
        }
        if (f > 0.0) {
            hi = theta;
        } else {
            lo = theta;
        }
        const double fp = gradient_difference_derivative(radius_ratio, gradient, theta);
        double next;
        if (std::abs(fp) < kDerivativeFloor) {
            next = 0.5 * (lo + hi);
        } else {
            next = theta - f / fp;
            if (!(next > lo && next < hi)) {
                next = 0.5 * (lo + hi); // Newton left the bracket
            }
        }
        const double dtheta = next - theta;
        theta = next;
        f = gradient_difference(radius_ratio, gradient, theta);
        if (std::abs(dtheta) <= kStepTol && std::abs(f) <= 1e-12) {
            break;
        }
    }

    return {theta, iterations, f, scan};
}

TipSolution solve_gear_tip(GearGeometry& gear, const TipSolveOptions& options) {
    const TipSolution solution =
        solve_tip_angle(gear.radius_ratio, gear.tip_gradient, options);
    gear.tip_generating_angle = solution.generating_angle;
    gear.tip_height = addendum_tip_height(gear.pitch_radius, gear.radius_ratio,
                                          solution.generating_angle);
    gear.bound_radius = gear.tip_height + 1.0;
    return solution;
}

} // namespace cyclogear
