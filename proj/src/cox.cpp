#include "coxradar/cox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coxradar/rng.hpp"

namespace coxradar {

namespace {

// Vehicles on one line, drawn from the given stream. Chord of the disk
// B(center, extent); empty when the line misses the disk.
void populate_line(LineParam line, int line_index, double lambda, Vec2 center, double extent,
                   Rng rng, std::vector<VehiclePoint>& out) {
  const Vec2 foot = perpendicular_foot(line);
  const Vec2 t = line_tangent(line);
  const double n_dist = std::abs(center.x * std::cos(line.theta) +
                                 center.y * std::sin(line.theta) - line.r);
  if (n_dist > extent) return;
  const double half = std::sqrt(extent * extent - n_dist * n_dist);
  const double s_center = dot(center - foot, t);
  const long count = rng.poisson(lambda * 2.0 * half);
  for (long i = 0; i < count; ++i) {
    VehiclePoint v;
    v.line_index = line_index;
    v.s = rng.uniform(s_center - half, s_center + half);
    const Vec2 p = foot + v.s * t;
    v.x = p.x;
    v.y = p.y;
    v.heading = rng.coin() ? Heading::forward : Heading::backward;
    out.push_back(v);
  }
}

}  // namespace

std::vector<VehiclePoint> populate(const LineSet& lines, double lambda, Vec2 center,
                                   double extent, uint64_t seed) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("lambda must be >= 0");
  if (!(extent > 0.0)) throw std::invalid_argument("extent must be > 0");
  std::vector<VehiclePoint> out;
  for (size_t i = 0; i < lines.lines.size(); ++i) {
    populate_line(lines.lines[i], static_cast<int>(i), lambda, center, extent,
                  Rng::substream(seed, i), out);
  }
  return out;
}

NetworkRealization palm_condition(const LineSet& lines, LineModel model, double r0,
                                  double lambda, double target_range, double extent,
                                  uint64_t seed) {
  if (model == LineModel::plp && r0 != 0.0)
    throw std::invalid_argument("PLCP conditions the ego at the origin (r0 = 0)");
  if (!(target_range >= 0.0)) throw std::invalid_argument("target_range must be >= 0");

  NetworkRealization net;
  net.model = model;
  net.r0 = r0;
  net.ego = {0.0, r0};
  net.target_range = target_range;

  net.lines.origin = lines.origin;
  net.lines.lines.reserve(lines.lines.size() + 1);
  net.lines.lines.push_back(LineParam{0.0, 0.0});  // L0: the y axis
  net.lines.lines.insert(net.lines.lines.end(), lines.lines.begin(), lines.lines.end());

  // Cross-street vehicles replay the standalone populate() draws; line i of
  // the input keeps substream i even though its index shifts by one.
  std::vector<VehiclePoint> cross = populate(lines, lambda, net.ego, extent, seed);
  for (auto& v : cross) v.line_index += 1;

  // Opposite-side traffic on L0 from a stream no cross line can ever use.
  constexpr uint64_t kEgoStreetStream = ~0ull;
  populate_line(net.lines.lines[0], 0, lambda, net.ego, extent,
                Rng::substream(seed, kEgoStreetStream), net.vehicles);
  net.vehicles.insert(net.vehicles.end(), cross.begin(), cross.end());
  return net;
}

}  // namespace coxradar
