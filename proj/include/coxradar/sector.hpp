#pragma once

#include <cstdint>
#include <vector>

#include "coxradar/cox.hpp"
#include "coxradar/vec2.hpp"

namespace coxradar {

/// Bounded cone of half-angle omega and reach `range` in front of a radar.
struct SectorSpec {
  Vec2 apex;
  double theta = 0.0;  // generating angle of the carrying line
  Heading orientation = Heading::forward;
  double omega = 0.0;
  double range = 0.0;

  Vec2 boresight() const {
    return static_cast<double>(orientation) * Vec2{-std::sin(theta), std::cos(theta)};
  }
  void validate() const;
};

/// Strict angular test, inclusive range; the apex itself is outside.
bool in_sector(Vec2 p, const SectorSpec& s);
bool in_cone(Vec2 p, Vec2 apex, Vec2 boresight, double omega, double range);

/// Both radars strictly inside each other's sectors, actual headings.
bool mutually_interfere(Vec2 a, Vec2 a_boresight, Vec2 b, Vec2 b_boresight, double omega,
                        double range);

enum class VehicleOrientation {
  /// Sum over both boresight orientations of the vehicle (the default; this
  /// is the intensity the interval formulas and the detection analytics use).
  either,
  /// Only the vehicle's sampled heading.
  actual,
};

struct InterferingSetOptions {
  VehicleOrientation orientation = VehicleOrientation::either;
  /// Radars on the ego street closer than this are not counted (the
  /// detection model starts the ego-street integral at the target range).
  double ego_street_min_range = 0.0;
};

/// Indices into net.vehicles of the radars that interfere with the ego.
/// The ego and the target are not vehicles, so they are excluded a priori.
std::vector<uint32_t> interfering_set(const NetworkRealization& net, double omega, double range,
                                      const InterferingSetOptions& opts = {});

}  // namespace coxradar
