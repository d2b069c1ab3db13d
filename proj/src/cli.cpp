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

#include "cyclogear/cli.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <system_error>

#include <CLI11.hpp>

#include "cyclogear/exporters.hpp"
#include "cyclogear/mesh.hpp"
#include "cyclogear/profile.hpp"
#include "cyclogear/tip_solver.hpp"

namespace cyclogear {

namespace {

void logf(std::ostream& os, const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    os << buffer;
}

void dump_angle(std::ostream& os, double radians) {
    logf(os, "    Angle in degrees: %5.5f\n", rad_to_deg(radians));
    logf(os, "    Angle in radians: %5.5f\n", radians);
}

void dump_scan(std::ostream& os, const std::vector<ScanSample>& trace) {
    for (const ScanSample& sample : trace) {
        logf(os, "angle in degrees: %5.5f, grad_diff: %5.5f\n", sample.angle_degrees,
             sample.grad_diff);
    }
}

FlankPath run_tessellation(TessellationMethod method, const GearGeometry& gear,
                           double epsilon) {
    switch (method) {
    case TessellationMethod::equal_arc:
        return tessellate_equal_arc(gear.pitch_radius, gear.radius_ratio,
                                    gear.tip_generating_angle, epsilon);
    case TessellationMethod::fixed_step:
        return tessellate_fixed(gear.pitch_radius, gear.radius_ratio,
                                gear.tip_generating_angle);
    case TessellationMethod::priority_queue:
    default:
        return tessellate_priority_queue(gear.pitch_radius, gear.radius_ratio,
                                         gear.tip_generating_angle, epsilon);
    }
}

void log_flank_stats(std::ostream& os, const char* name, const FlankPath& flank,
                     double epsilon) {
    double shortest = 0.0;
    double longest = 0.0;
    for (std::size_t i = 0; i + 1 < flank.points.size(); ++i) {
        const double chord = distance(flank.points[i], flank.points[i + 1]);
        shortest = (i == 0) ? chord : std::min(shortest, chord);
        longest = std::max(longest, chord);
    }
    logf(os, "%s flank: %d points, max chord %5.5f, min chord %5.5f (epsilon %5.5f)\n",
         name, static_cast<int>(flank.size()), longest, shortest, epsilon);
}

void write_artifact(const std::filesystem::path& path, const std::string& content,
                    std::ostream& log, bool verbose) {
    write_text_file(path, content);
    if (verbose) {
        log << "wrote " << path.string() << "\n";
    }
}

} // namespace

ParseResult parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Cycloidal gear pair generator"};
    app.name("cyclogear");

    std::string mode = "single";
    int frames = 0;
    std::vector<std::string> formats;
    std::string method = "pq";
    std::string out_dir = ".";
    bool quiet = false;
    int verbose = 0;

    app.add_option("--wheel-teeth", cfg.spec.wheel_teeth, "Number of wheel teeth")
        ->required();
    app.add_option("--pinion-teeth", cfg.spec.pinion_teeth, "Number of pinion teeth")
        ->required();
    app.add_option("--mode", mode, "Drawing mode")
        ->check(CLI::IsMember({"none", "single", "animation"}))
        ->capture_default_str();
    app.add_option("--frames", frames, "Animation frame count (animation mode only)");
    app.add_flag("--clip-dedenda,!--no-clip-dedenda", cfg.spec.clip_dedenda,
                 "Clip dedendum lines to the clearance circle");
    app.add_option("--svg-width", cfg.spec.svg_width, "SVG width in pixels")
        ->capture_default_str();
    app.add_option("--svg-height", cfg.spec.svg_height, "SVG height in pixels")
        ->capture_default_str();
    app.add_option("--epsilon", cfg.spec.epsilon,
                   "Chord tolerance in modules for flank polygons")
        ->capture_default_str();
    app.add_option("--clearance", cfg.spec.clearance,
                   "Root clearance in modules")
        ->capture_default_str();
    app.add_option("--module", cfg.spec.module_scale,
                   "Output units per module (applied at export only)")
        ->capture_default_str();
    app.add_option("--method", method, "Flank tessellation method")
        ->check(CLI::IsMember({"pq", "equal_arc", "fixed20"}))
        ->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--formats", formats, "Comma-separated output formats (svg, scad)")
        ->delimiter(',')
        ->check(CLI::IsMember({"svg", "scad"}));
    app.add_option("--extrude-height", cfg.extrude_height,
                   "OpenSCAD extrusion height in output units")
        ->capture_default_str();
    app.add_flag("--legacy-scan", cfg.legacy_scan,
                 "Scan for the tip angle in exact 1-degree steps");
    app.add_flag("-v,--verbose", verbose, "More diagnostics (repeatable)");
    app.add_flag("-q,--quiet", quiet, "Suppress diagnostics");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {std::nullopt, 0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {std::nullopt, 1, std::string(e.what()) + "\n"};
    }

    if (mode == "none") {
        cfg.spec.mode = MeshMode::none;
    } else if (mode == "animation") {
        cfg.spec.mode = MeshMode::animation;
    } else {
        cfg.spec.mode = MeshMode::single_mesh;
    }
    if (frames != 0 && cfg.spec.mode != MeshMode::animation) {
        return {std::nullopt, 1, "--frames is only valid with --mode animation\n"};
    }
    cfg.spec.num_frames = (frames != 0) ? frames : 100;

    if (method == "equal_arc") {
        cfg.method = TessellationMethod::equal_arc;
    } else if (method == "fixed20") {
        cfg.method = TessellationMethod::fixed_step;
    } else {
        cfg.method = TessellationMethod::priority_queue;
    }

    if (!formats.empty()) {
        cfg.emit_svg = std::find(formats.begin(), formats.end(), "svg") != formats.end();
        cfg.emit_scad =
            std::find(formats.begin(), formats.end(), "scad") != formats.end();
    }
    cfg.out_dir = out_dir;
    cfg.verbosity = quiet ? 0 : 1 + verbose;

    try {
        cfg.spec.validate();
    } catch (const GearError& e) {
        return {std::nullopt, e.exit_code(), std::string(e.what()) + "\n"};
    }
    return {cfg, 0, ""};
}

int run(const RunConfig& cfg, std::ostream& log) {
    const GearPairSpec& spec = cfg.spec;
    GearPair pair = derive_geometry(spec);
    GearGeometry& wheel = pair.wheel;
    GearGeometry& pinion = pair.pinion;
    const bool v1 = cfg.verbosity >= 1;
    const bool v2 = cfg.verbosity >= 2;

    const double pinion_one_rev = 360.0 * pinion.radius_ratio;
    if (v1) {
        switch (spec.mode) {
        case MeshMode::none:
            log << "Will not do meshing simulation.\n";
            break;
        case MeshMode::single_mesh:
            log << "Will do single mesh simulation.\n";
            break;
        case MeshMode::animation:
            log << "Will do meshing simulation animation.\n";
            break;
        }
        logf(log, "Wheel teeth: %d, Pinion teeth: %d\n", spec.wheel_teeth,
             spec.pinion_teeth);
        logf(log, "Wheel PCR: %5.5f\n", wheel.pitch_radius);
        logf(log, "Pinion PCR: %5.5f\n\n", pinion.pitch_radius);
        logf(log, "Wheel GCR: %5.5f\n", wheel.generating_radius);
        logf(log, "Pinion GCR: %5.5f\n\n", pinion.generating_radius);
        logf(log, "Wheel GC one rev degrees: %5.5f\n", 360.0 * wheel.radius_ratio);
        logf(log, "Pinion GC one rev degrees: %5.5f\n", pinion_one_rev);
        if (pinion_one_rev > 360.0) {
            log << "pinion GC one rev degrees > 360, so cutting back to 360\n";
            log << "(Clearly optimum pinion GC angle should be within one rev\n";
        }
        logf(log, "Wheel RR: %5.5f\n", wheel.radius_ratio);
        logf(log, "Pinion RR: %5.5f\n\n", pinion.radius_ratio);
        log << "Wheel tooth tip angle:\n";
        dump_angle(log, wheel.tip_angle);
        log << "Pinion tooth tip angle\n";
        dump_angle(log, pinion.tip_angle);
        log << "Tooth tip gradiants:\n";
        logf(log, "Wheel TTG: %5.5f\n", wheel.tip_gradient);
        logf(log, "Pinion TTG: %5.5f\n\n", pinion.tip_gradient);
    }

    const double one_degree = deg_to_rad(1.0);
    TipSolveOptions wheel_options;
    TipSolveOptions pinion_options;
    if (cfg.legacy_scan) {
        wheel_options.scan_step = one_degree;
        pinion_options.scan_step = one_degree;
    }
    std::vector<ScanSample> wheel_trace;
    std::vector<ScanSample> pinion_trace;
    wheel_options.scan_trace = &wheel_trace;
    pinion_options.scan_trace = &pinion_trace;

    const TipSolution wheel_solution = solve_gear_tip(wheel, wheel_options);
    const TipSolution pinion_solution = solve_gear_tip(pinion, pinion_options);

    if (v1) {
        const double wheel_step =
            cfg.legacy_scan ? one_degree : default_scan_step(wheel.tip_gradient);
        const double pinion_step =
            cfg.legacy_scan ? one_degree : default_scan_step(pinion.tip_gradient);
        log << "Finding wheel GC angle\n";
        if (v2 || wheel_step == one_degree) {
            dump_scan(log, wheel_trace);
        }
        log << "Finding pinion GC angle:\n";
        if (v2 || pinion_step == one_degree) {
            dump_scan(log, pinion_trace);
        }
        log << "First approximation of wheel GC angle for addendum tip\n";
        dump_angle(log, wheel_solution.bracket.hi);
        log << "First approximation of pinion GC angle for addendum tip\n";
        dump_angle(log, pinion_solution.bracket.hi);
        log << "\n\nNow starting Newton-Raphson iteration for wheel GC\n\n";
        logf(log, "Converged after %d iterations, angle is:\n",
             wheel_solution.iterations_used);
        dump_angle(log, wheel_solution.generating_angle);
        log << "\n\nNow starting NR iteration for pinion GC\n\n";
        logf(log, "Converged after %d iterations, angle is:\n",
             pinion_solution.iterations_used);
        dump_angle(log, pinion_solution.generating_angle);
        logf(log, "Wheel addendum tip height: %5.5f\n", wheel.tip_height);
        logf(log, "Pinion addendum tip height: %5.5f\n", pinion.tip_height);
        logf(log, "Wheel bound radius: %5.5f\n", wheel.bound_radius);
        logf(log, "Pinion bound radius: %5.5f\n", pinion.bound_radius);
    }

    const int frame_count =
        spec.mode == MeshMode::animation ? spec.num_frames : 1;
    const MeshScene scene = make_mesh_scene(wheel, pinion, frame_count);
    const Point2 pinion_center = spec.mode == MeshMode::none
                                     ? separated_pinion_center(wheel, pinion)
                                     : scene.pinion_center;
    const SvgViewport viewport =
        make_viewport(wheel, pinion, pinion_center, spec.svg_width, spec.svg_height);
    if (v1) {
        logf(log, "leftmost x: %5.5f\n", viewport.leftmost_x);
        logf(log, "bottommost y: %5.5f\n", viewport.bottommost_y);
        logf(log, "rightmost x: %5.5f\n", viewport.rightmost_x);
        logf(log, "topmost y: %5.5f\n", viewport.topmost_y);
        logf(log, "unscaled height: %5.5f\n", viewport.topmost_y - viewport.bottommost_y);
        logf(log, "unscaled width: %5.5f\n", viewport.rightmost_x - viewport.leftmost_x);
        logf(log, "svg height: %d\n", spec.svg_height);
        logf(log, "svg width: %d\n", spec.svg_width);
        logf(log, "vertical scale factor: %5.5f\n", viewport.vert_scale_factor);
        logf(log, "horiz scale factor: %5.5f\n", viewport.horiz_scale_factor);
        logf(log, "smaller scale factor: %5.5f\n", viewport.scale_factor);
    }

    compute_dedendum_depths(wheel, pinion, spec.clearance);
    const FlankPath wheel_flank = run_tessellation(cfg.method, wheel, spec.epsilon);
    const FlankPath pinion_flank = run_tessellation(cfg.method, pinion, spec.epsilon);
    if (v2) {
        log_flank_stats(log, "wheel", wheel_flank, spec.epsilon);
        log_flank_stats(log, "pinion", pinion_flank, spec.epsilon);
    }
    const GearProfile wheel_profile = build_profile(wheel, wheel_flank, spec.epsilon);
    const GearProfile pinion_profile = build_profile(pinion, pinion_flank, spec.epsilon);

    std::error_code dir_error;
    std::filesystem::create_directories(cfg.out_dir, dir_error);
    if (dir_error) {
        throw GearError(Errc::io_failure, "could not create output directory " +
                                              cfg.out_dir.string());
    }

    const SvgOptions svg_options{spec.clip_dedenda};
    const PairPlacement mesh_placement = scene.placement(scene.frames.front());
    if (cfg.emit_svg) {
        switch (spec.mode) {
        case MeshMode::none:
            write_artifact(cfg.out_dir / "wheel_pinion_nomesh.svg",
                           write_svg(wheel_profile, pinion_profile,
                                     {0.0, 0.0, pinion_center}, viewport, svg_options),
                           log, v1);
            break;
        case MeshMode::single_mesh:
            write_artifact(cfg.out_dir / "wheel_pinion_single_mesh.svg",
                           write_svg(wheel_profile, pinion_profile, mesh_placement,
                                     viewport, svg_options),
                           log, v1);
            break;
        case MeshMode::animation: {
            const auto written = write_animation(cfg.out_dir, wheel_profile,
                                                 pinion_profile, scene, viewport,
                                                 svg_options);
            if (v1) {
                for (const auto& path : written) {
                    log << "wrote " << path.string() << "\n";
                }
            }
            break;
        }
        }
    }
    if (cfg.emit_scad) {
        write_artifact(cfg.out_dir / "wheel.scad",
                       write_openscad(wheel_profile, cfg.extrude_height,
                                      spec.module_scale),
                       log, v1);
        write_artifact(cfg.out_dir / "pinion.scad",
                       write_openscad(pinion_profile, cfg.extrude_height,
                                      spec.module_scale),
                       log, v1);
        write_artifact(cfg.out_dir / "pair.scad",
                       write_openscad_pair(wheel_profile, pinion_profile,
                                           mesh_placement, cfg.extrude_height,
                                           spec.module_scale),
                       log, v1);
    }

    if (spec.mode != MeshMode::none) {
        const InterferenceReport report = check_interference(
            wheel_profile, pinion_profile, scene, cfg.mesh_samples);
        if (v1) {
            logf(log, "interference check: min separation %.6g modules (sample %d of %d)\n",
                 report.min_separation, report.worst_frame, cfg.mesh_samples);
        }
        // Tight clearances legitimately bring the polygons within
        // tessellation error of contact, so only genuine crossings fail.
        const double threshold = spec.clearance >= 0.1 ? 0.0 : -spec.epsilon / 2.0;
        if (!(report.min_separation > threshold)) {
            throw GearError(Errc::interference,
                            "gears interfere: min separation " +
                                std::to_string(report.min_separation) + " modules");
        }
    }
    return 0;
}

} // namespace cyclogear
