#pragma once

#include <cstdint>
#include <vector>

#include "coxradar/geometry.hpp"
#include "coxradar/vec2.hpp"

namespace coxradar {

/// Boresight along +tangent or -tangent of the carrying line.
enum class Heading : int8_t { forward = 1, backward = -1 };

struct VehiclePoint {
  int line_index = 0;  // 0 is the ego street L0
  double s = 0.0;      // arc length from the line's perpendicular foot
  double x = 0.0;
  double y = 0.0;
  Heading heading = Heading::forward;
};

inline Vec2 heading_vector(LineParam line, Heading h) {
  return static_cast<double>(h) * line_tangent(line);
}

/// One sampled street-and-vehicle snapshot, Palm-conditioned on the ego radar.
struct NetworkRealization {
  LineSet lines;  // lines[0] is L0 (the y axis through the ego)
  std::vector<VehiclePoint> vehicles;
  Vec2 ego;                  // (0, r0)
  Vec2 ego_boresight{0, 1};  // unit vector
  double r0 = 0.0;
  double target_range = 0.0;  // target sits at ego + target_range * boresight
  LineModel model = LineModel::plp;
};

/// Independent 1-D PPP of the given intensity on each line, materialized on
/// the chord within `extent` of `center`; headings uniform on {+,-}.
/// Line i draws from substream (seed, i), so a line's vehicles do not depend
/// on how many other lines exist.
std::vector<VehiclePoint> populate(const LineSet& lines, double lambda, Vec2 center,
                                   double extent, uint64_t seed);

/// Palm conditioning: prepends the ego street L0 = (theta=0, r=0) carrying an
/// independent PPP of the same intensity, places the ego at (0, r0) and the
/// target at `target_range` along the boresight. The input line set and its
/// vehicle draws are untouched (L0 vehicles come from a reserved substream).
NetworkRealization palm_condition(const LineSet& lines, LineModel model, double r0,
                                  double lambda, double target_range, double extent,
                                  uint64_t seed);

}  // namespace coxradar
