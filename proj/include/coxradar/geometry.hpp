#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxradar/vec2.hpp"

namespace coxradar {

/// A street: the line x*cos(theta) + y*sin(theta) = r.
struct LineParam {
  double theta = 0.0;  // normal angle, radians
  double r = 0.0;      // signed perpendicular offset, meters
};

/// Foot of the perpendicular from the origin, (r cos, r sin). Lies on the line.
inline Vec2 perpendicular_foot(LineParam l) {
  return {l.r * std::cos(l.theta), l.r * std::sin(l.theta)};
}

/// Unit direction along the line with non-negative y component. This fixes
/// the sign convention of arc-length coordinates and interfering distances.
Vec2 line_tangent(LineParam l);

/// Point on the line at arc length s from the perpendicular foot.
inline Vec2 point_on_line(LineParam l, double s) {
  return perpendicular_foot(l) + s * line_tangent(l);
}

enum class LineModel { plp, blp };

struct PlpSpec {
  double lambda_l = 0.0;       // intensity on the [0,2pi) x (0,inf) cylinder, m^-1
  double window_radius = 0.0;  // lines materialized with r <= window_radius
  void validate() const;
};

struct BlpSpec {
  long n_b = 0;      // number of lines
  double r_g = 0.0;  // generating disk radius, meters
  void validate() const;
};

struct LineSet {
  std::vector<LineParam> lines;
  LineModel origin = LineModel::plp;
};

/// Poisson line process on [0,2pi) x (0,window]: line count ~ Poisson(lambda_l * 2pi * window),
/// theta uniform, r uniform. Bit-identical for a given seed.
LineSet sample_plp(const PlpSpec& spec, uint64_t seed);

/// Binomial line process: exactly n_b lines, theta uniform on [0,pi),
/// r uniform on [-r_g, r_g].
LineSet sample_blp(const BlpSpec& spec, uint64_t seed);

/// Maps (theta in [0,pi), signed r) onto the full-angle convention
/// (theta in [0,2pi), r >= 0); both describe the same line.
LineParam canonical_full_angle(LineParam l);

/// Signed distance along the ego street (the y axis) from the ego radar at
/// (0, r0) to the intersection with the given line: d = r/sin(theta) - r0.
/// Empty when the line is parallel to the ego street (|sin theta| < 1e-9).
std::optional<double> intersection_distance(LineParam l, double r0);

/// BLP line length per unit area at distance `dist` from the generating
/// center: n_b/(2 r_g) inside the disk, decaying as arcsin(r_g/d) outside.
double blp_length_density(double dist, const BlpSpec& spec);

/// Expected total BLP street length inside a centered square of side
/// `box_side`, by radial quadrature of the length density.
double blp_total_length_in_box(const BlpSpec& spec, double box_side);

}  // namespace coxradar
