#include "coxradar/sector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coxradar/kernels.hpp"

namespace coxradar {

void SectorSpec::validate() const {
  if (!(omega > 0.0 && omega < std::numbers::pi / 2.0))
    throw std::invalid_argument("omega must be in (0, pi/2)");
  if (!(range > 0.0)) throw std::invalid_argument("range must be > 0");
}

bool in_cone(Vec2 p, Vec2 apex, Vec2 boresight, double omega, double range) {
  const Vec2 rel = p - apex;
  const double r2 = norm2(rel);
  if (r2 == 0.0 || r2 > range * range) return false;
  const double d = dot(rel, boresight);
  return d > 0.0 && d * d > std::cos(omega) * std::cos(omega) * r2;
}

bool in_sector(Vec2 p, const SectorSpec& s) {
  s.validate();
  return in_cone(p, s.apex, s.boresight(), s.omega, s.range);
}

bool mutually_interfere(Vec2 a, Vec2 a_boresight, Vec2 b, Vec2 b_boresight, double omega,
                        double range) {
  return in_cone(b, a, a_boresight, omega, range) && in_cone(a, b, b_boresight, omega, range);
}

std::vector<uint32_t> interfering_set(const NetworkRealization& net, double omega, double range,
                                      const InterferingSetOptions& opts) {
  if (!(omega > 0.0 && omega < std::numbers::pi / 2.0))
    throw std::invalid_argument("omega must be in (0, pi/2)");
  if (!(range > 0.0)) throw std::invalid_argument("range must be > 0");

  std::vector<uint32_t> out;
  const double cos_o = std::cos(omega);
  const size_t n = net.vehicles.size();

  if (opts.orientation == VehicleOrientation::actual) {
    for (size_t i = 0; i < n; ++i) {
      const VehiclePoint& v = net.vehicles[i];
      const LineParam line = net.lines.lines[static_cast<size_t>(v.line_index)];
      const Vec2 pos{v.x, v.y};
      if (v.line_index == 0 && norm(pos - net.ego) < opts.ego_street_min_range) continue;
      if (mutually_interfere(net.ego, net.ego_boresight, pos, heading_vector(line, v.heading),
                             omega, range))
        out.push_back(static_cast<uint32_t>(i));
    }
    return out;
  }

  // either-orientation: batch whole streets through the dispatched kernel
  std::vector<double> px, py;
  std::vector<uint8_t> mask;
  size_t i = 0;
  while (i < n) {
    const int line_index = net.vehicles[i].line_index;
    size_t j = i;
    while (j < n && net.vehicles[j].line_index == line_index) ++j;
    const LineParam line = net.lines.lines[static_cast<size_t>(line_index)];
    const Vec2 t = line_tangent(line);
    px.resize(j - i);
    py.resize(j - i);
    mask.resize(j - i);
    for (size_t k = i; k < j; ++k) {
      px[k - i] = net.vehicles[k].x - net.ego.x;
      py[k - i] = net.vehicles[k].y - net.ego.y;
    }
    kernels::MutualArgs args{t.x, t.y, net.ego_boresight.x, net.ego_boresight.y, cos_o,
                             range * range};
    kernels::mutual_mask(px.data(), py.data(), j - i, args, mask.data());
    for (size_t k = i; k < j; ++k) {
      if (!mask[k - i]) continue;
      if (line_index == 0) {
        const double w2 = px[k - i] * px[k - i] + py[k - i] * py[k - i];
        if (w2 < opts.ego_street_min_range * opts.ego_street_min_range) continue;
      }
      out.push_back(static_cast<uint32_t>(k));
    }
    i = j;
  }
  return out;
}

}  // namespace coxradar
