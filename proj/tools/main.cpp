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

#include <iostream>
#include <string>
#include <vector>

#include "cyclogear/cli.hpp"
#include "cyclogear/error.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const cyclogear::ParseResult parsed = cyclogear::parse_args(args);
    if (!parsed.config) {
        (parsed.exit_status == 0 ? std::cout : std::cerr) << parsed.message;
        return parsed.exit_status;
    }
    try {
        return cyclogear::run(*parsed.config, std::cout);
    } catch (const cyclogear::GearError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
}
