#include "coxradar/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coxradar/quadrature.hpp"
#include "coxradar/rng.hpp"

namespace coxradar {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kParallelTol = 1e-9;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}
}  // namespace

Vec2 line_tangent(LineParam l) {
  const double st = std::sin(l.theta), ct = std::cos(l.theta);
  if (ct >= 0.0) return {-st, ct};
  return {st, -ct};
}

void PlpSpec::validate() const {
  require_finite(lambda_l, "lambda_l");
  require_finite(window_radius, "window_radius");
  if (lambda_l < 0.0) throw std::invalid_argument("lambda_l must be >= 0");
  if (window_radius <= 0.0) throw std::invalid_argument("window_radius must be > 0");
}

void BlpSpec::validate() const {
  require_finite(r_g, "r_g");
  if (n_b < 0) throw std::invalid_argument("n_b must be >= 0");
  if (r_g <= 0.0) throw std::invalid_argument("r_g must be > 0");
}

LineSet sample_plp(const PlpSpec& spec, uint64_t seed) {
  spec.validate();
  LineSet out;
  out.origin = LineModel::plp;
  Rng count_rng = Rng::substream(seed, 0);
  const long k = count_rng.poisson(spec.lambda_l * kTwoPi * spec.window_radius);
  out.lines.reserve(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) {
    Rng rng = Rng::substream(seed, static_cast<uint64_t>(i) + 1);
    LineParam l;
    l.theta = rng.uniform(0.0, kTwoPi);
    // r uniform on (0, window]: flip the half-open side so r > 0
    l.r = spec.window_radius * (1.0 - rng.uniform());
    out.lines.push_back(l);
  }
  return out;
}

LineSet sample_blp(const BlpSpec& spec, uint64_t seed) {
  spec.validate();
  LineSet out;
  out.origin = LineModel::blp;
  out.lines.reserve(static_cast<size_t>(spec.n_b));
  for (long i = 0; i < spec.n_b; ++i) {
    Rng rng = Rng::substream(seed, static_cast<uint64_t>(i) + 1);
    LineParam l;
    l.theta = rng.uniform(0.0, std::numbers::pi);
    l.r = rng.uniform(-spec.r_g, spec.r_g);
    out.lines.push_back(l);
  }
  return out;
}

LineParam canonical_full_angle(LineParam l) {
  LineParam out = l;
  if (out.r < 0.0) {
    out.r = -out.r;
    out.theta += std::numbers::pi;
  }
  out.theta = std::fmod(out.theta, kTwoPi);
  if (out.theta < 0.0) out.theta += kTwoPi;
  return out;
}

std::optional<double> intersection_distance(LineParam l, double r0) {
  require_finite(l.theta, "theta");
  require_finite(l.r, "r");
  require_finite(r0, "r0");
  const double st = std::sin(l.theta);
  if (std::abs(st) < kParallelTol) return std::nullopt;
  return l.r / st - r0;
}

double blp_length_density(double dist, const BlpSpec& spec) {
  spec.validate();
  if (!(dist >= 0.0)) throw std::invalid_argument("dist must be >= 0");
  const double base = static_cast<double>(spec.n_b) / (2.0 * spec.r_g);
  if (dist <= spec.r_g) return base;
  return base * 2.0 / std::numbers::pi * std::asin(spec.r_g / dist);
}

double blp_total_length_in_box(const BlpSpec& spec, double box_side) {
  spec.validate();
  require_finite(box_side, "box_side");
  if (box_side <= 0.0) throw std::invalid_argument("box_side must be > 0");
  if (spec.n_b == 0) return 0.0;
  const double q = 0.5 * box_side;
  // full circles up to the inscribed radius, clipped arcs out to the corner
  const double inner = integrate(
      [&](double d) { return blp_length_density(d, spec) * kTwoPi * d; }, 0.0, q, 1e-7 * q);
  const double outer = integrate(
      [&](double d) {
        const double frac = std::clamp(q / d, 0.0, 1.0);
        const double arc = d * (kTwoPi - 8.0 * std::acos(frac));
        return blp_length_density(d, spec) * arc;
      },
      q, q * std::numbers::sqrt2, 1e-7 * q);
  return inner + outer;
}

}  // namespace coxradar
