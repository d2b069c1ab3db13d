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

namespace cyclogear {

/// One row of the coarse-scan diagnostic table.
struct ScanSample {
    double angle_degrees;
    double grad_diff;
};

/// Interval found by the coarse scan: grad_diff <= 0 at lo, > 0 at hi.
struct ScanBracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct TipSolveOptions {
    double scan_limit = 0.0; // radians; <= 0 selects min(2*pi*r, 2*pi)
    double scan_step = 0.0;  // radians; <= 0 selects min(1 degree, tip_angle/4)
    std::vector<ScanSample>* scan_trace = nullptr;
};

struct TipSolution {
    double generating_angle = 0.0; // radians
    int iterations_used = 0;
    double residual = 0.0; // grad_diff at generating_angle
    ScanBracket bracket;   // from the coarse scan
};

/// Residual whose root is the tooth-tip generating angle. It is
/// y(theta) - m * x(theta) for the unit epicycloid: zero exactly when the
/// traced point lies on the ray of gradient m, same sign as the gradient
/// difference but not the same magnitude.
double gradient_difference(double radius_ratio, double gradient, double theta);

/// d/dtheta of gradient_difference.
double gradient_difference_derivative(double radius_ratio, double gradient, double theta);

double default_scan_step(double gradient);
double default_scan_limit(double radius_ratio);

/// Steps theta from 0 by scan_step until grad_diff turns positive and returns
/// the bracketing step. Throws ScanFailed past scan_limit.
ScanBracket coarse_scan(double radius_ratio, double gradient, double scan_limit,
                        double scan_step, std::vector<ScanSample>* trace = nullptr);

/// Coarse scan plus Newton-Raphson from the bracket's upper end, falling back
/// to bisection whenever a step would leave the bracket or the derivative
/// vanishes. Stops at |grad_diff| <= 1e-14 or step size <= 1e-13 rad;
/// throws NoConvergence after 60 iterations.
TipSolution solve_tip_angle(double radius_ratio, double gradient,
                            const TipSolveOptions& options = {});

/// Solves the gear's tip angle and fills tip_generating_angle, tip_height
/// and bound_radius (tip_height + 1).
TipSolution solve_gear_tip(GearGeometry& gear, const TipSolveOptions& options = {});

} // namespace cyclogear
