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

#include <stdexcept>
#include <string>

namespace cyclogear {

/// Failure categories. The numeric value doubles as the process exit code,
/// so every category maps to a distinct nonzero status.
enum class Errc {
    invalid_argument = 2,
    pinion_larger_than_wheel = 3,
    tip_gradient_too_large = 4,
    scan_failed = 5,
    no_convergence = 6,
    tolerance_too_small = 7,
    negative_clearance_radius = 8,
    non_finite_coordinate = 9,
    io_failure = 10,
    interference = 11,
};

class GearError : public std::runtime_error {
public:
    GearError(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }

private:
    Errc code_;
};

} // namespace cyclogear
