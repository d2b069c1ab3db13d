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

#include "cyclogear/exporters.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>

namespace cyclogear {

namespace {

std::string printf_text(const char* format, ...) {
    char buffer[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

std::string full_precision(double v) { return printf_text("%.17g", v); }

void append_line_element(std::string& out, const SvgViewport& vp, Point2 from,
                         Point2 to) {
    const SvgPixel p1 = svg_transform(vp, from);
    const SvgPixel p2 = svg_transform(vp, to);
    out += printf_text("<line x1=\"%lld\" y1=\"%lld\" x2=\"%lld\" y2=\"%lld\" "
                       "style=\"stroke:rgb(0,0,0);stroke-width:2\" />\n",
                       static_cast<long long>(p1.x), static_cast<long long>(p1.y),
                       static_cast<long long>(p2.x), static_cast<long long>(p2.y));
}

void append_circle_element(std::string& out, const SvgViewport& vp, Point2 center,
                           double radius, const char* colour) {
    const SvgPixel c = svg_transform(vp, center);
    const long long r = static_cast<long long>(std::floor(vp.scale_factor * radius));
    out += printf_text("<circle cx=\"%lld\" cy=\"%lld\" r=\"%lld\" stroke=\"%s\" "
                       "stroke-width=\"3\" style=\"fill:none\" />\n",
                       static_cast<long long>(c.x), static_cast<long long>(c.y), r,
                       colour);
}

void append_outline(std::string& out, const SvgViewport& vp, const GearProfile& gear,
                    double rotation_deg, Point2 center, bool clip_dedenda) {
    if (gear.points.size() < 3) {
        throw GearError(Errc::invalid_argument,
                        "gear outline needs at least 3 points");
    }
    const double a = deg_to_rad(rotation_deg);
    const auto placed = [&](Point2 p) { return rotated(p, a) + center; };
    for (std::size_t i = 0; i < gear.points.size(); ++i) {
        append_line_element(out, vp, placed(gear.points[i]),
                            placed(gear.points[(i + 1) % gear.points.size()]));
    }
    if (!clip_dedenda) {
        // Unclipped look: every dedendum flank extended to the gear centre.
        const GearGeometry& g = gear.geometry;
        for (int k = 0; k < gear.teeth; ++k) {
            const double tooth_angle = 2.0 * pi * k / gear.teeth;
            for (double corner : {tooth_angle - g.tip_angle, tooth_angle + g.tip_angle}) {
                append_line_element(out, vp, center,
                                    placed(polar_point(g.pitch_radius, corner)));
            }
        }
    }
}

} // namespace

SvgViewport make_viewport(const GearGeometry& wheel, const GearGeometry& pinion,
                          Point2 pinion_center, int svg_width, int svg_height) {
    SvgViewport vp;
    vp.svg_width = svg_width;
    vp.svg_height = svg_height;
    vp.leftmost_x = -wheel.bound_radius;
    vp.bottommost_y = -wheel.bound_radius;
    vp.rightmost_x = pinion.bound_radius + pinion_center.x;
    vp.topmost_y = pinion.bound_radius + pinion_center.y;
    vp.vert_scale_factor = svg_height / (vp.topmost_y - vp.bottommost_y);
    vp.horiz_scale_factor = svg_width / (vp.rightmost_x - vp.leftmost_x);
    vp.scale_factor = std::min(vp.vert_scale_factor, vp.horiz_scale_factor);
    return vp;
}

SvgPixel svg_transform(const SvgViewport& viewport, Point2 p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw GearError(Errc::non_finite_coordinate,
                        "SVG transform got a non-finite coordinate");
    }
    const double x = std::floor(viewport.scale_factor * (p.x - viewport.leftmost_x));
    const double y = std::floor(viewport.scale_factor * (p.y - viewport.bottommost_y));
    return {static_cast<std::int64_t>(x),
            viewport.svg_height - static_cast<std::int64_t>(y)};
}

std::string write_svg(const GearProfile& wheel, const GearProfile& pinion,
                      const PairPlacement& placement, const SvgViewport& viewport,
                      const SvgOptions& options) {
    std::string out;
    out += printf_text("<svg height=\"%d\" width=\"%d\">\n", viewport.svg_height,
                       viewport.svg_width);
    // Base circles in red (the mate's tips just touch them), clearance
    // circles in blue.
    const Point2 wheel_center{0.0, 0.0};
    append_circle_element(out, viewport, wheel_center, wheel.geometry.base_radius,
                          "red");
    append_circle_element(out, viewport, wheel_center, wheel.geometry.clearance_radius,
                          "blue");
    append_circle_element(out, viewport, placement.pinion_center,
                          pinion.geometry.base_radius, "red");
    append_circle_element(out, viewport, placement.pinion_center,
                          pinion.geometry.clearance_radius, "blue");
    append_outline(out, viewport, wheel, placement.wheel_rotation_deg, wheel_center,
                   options.clip_dedenda);
    append_outline(out, viewport, pinion, placement.pinion_rotation_deg,
                   placement.pinion_center, options.clip_dedenda);
    out += "</svg>\n";
    return out;
}

std::string write_openscad(const GearProfile& profile, double extrude_height,
                           double module_scale) {
    std::string out;
    out += "linear_extrude(height=" + full_precision(extrude_height) + ")\n";
    out += "polygon(points=[\n";
    for (std::size_t i = 0; i < profile.points.size(); ++i) {
        const Point2 p = module_scale * profile.points[i];
        out += "[" + full_precision(p.x) + "," + full_precision(p.y) + "]";
        out += (i + 1 < profile.points.size()) ? ",\n" : "\n";
    }
    out += "]);\n";
    return out;
}

std::string write_openscad_pair(const GearProfile& wheel, const GearProfile& pinion,
                                const PairPlacement& placement, double extrude_height,
                                double module_scale) {
    const Point2 shift = module_scale * placement.pinion_center;
    std::string out;
    out += "rotate([0,0," + full_precision(placement.wheel_rotation_deg) + "])\n";
    out += write_openscad(wheel, extrude_height, module_scale);
    out += "translate([" + full_precision(shift.x) + "," + full_precision(shift.y) +
           ",0])\n";
    out += "rotate([0,0," + full_precision(placement.pinion_rotation_deg) + "])\n";
    out += write_openscad(pinion, extrude_height, module_scale);
    return out;
}

std::string convert_script_text(int num_frames) {
    std::string out = "#!/bin/bash\n";
    for (int frame = 1; frame <= num_frames; ++frame) {
        out += printf_text("echo converting frame %d from svg to png\n", frame);
        out += printf_text("convert frame%05d.svg frame%05d.png\n", frame, frame);
    }
    return out;
}

std::string frame_log_text(int wheel_teeth, int pinion_teeth, int svg_width,
                           int svg_height, const std::vector<FrameRotation>& frames) {
    std::string out;
    out += printf_text("wheel teeth: %d\n", wheel_teeth);
    out += printf_text("pinion teeth: %d\n", pinion_teeth);
    out += printf_text("svg width: %d\n", svg_width);
    out += printf_text("svg height: %d\n", svg_height);
    out += printf_text("num_frames: %d\n", static_cast<int>(frames.size()));
    out += printf_text("wheel tooth period: %5.5f degrees\n", 360.0 / wheel_teeth);
    out += printf_text("pinion tooth period: %5.5f degrees\n", 360.0 / pinion_teeth);
    for (std::size_t i = 0; i < frames.size(); ++i) {
        out += printf_text("frame %d: wheel rotation: %5.5f pinion rotation: %5.5f\n",
                           static_cast<int>(i + 1), frames[i].wheel_deg,
                           frames[i].pinion_deg);
    }
    return out;
}

std::vector<std::filesystem::path> write_animation(
    const std::filesystem::path& outdir, const GearProfile& wheel,
    const GearProfile& pinion, const MeshScene& scene, const SvgViewport& viewport,
    const SvgOptions& options) {
    std::vector<std::filesystem::path> written;
    for (std::size_t i = 0; i < scene.frames.size(); ++i) {
        const std::filesystem::path frame_path =
            outdir / printf_text("frame%05d.svg", static_cast<int>(i + 1));
        write_text_file(frame_path, write_svg(wheel, pinion,
                                              scene.placement(scene.frames[i]),
                                              viewport, options));
        written.push_back(frame_path);
    }
    const std::filesystem::path script_path = outdir / "convert_script";
    write_text_file(script_path,
                    convert_script_text(static_cast<int>(scene.frames.size())));
    written.push_back(script_path);
    const std::filesystem::path log_path = outdir / "frame_log.txt";
    write_text_file(log_path,
                    frame_log_text(wheel.teeth, pinion.teeth, viewport.svg_width,
                                   viewport.svg_height, scene.frames));
    written.push_back(log_path);
    return written;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        throw GearError(Errc::io_failure, "could not write " + path.string());
    }
}

} // namespace cyclogear
