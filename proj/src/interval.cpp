#include "coxradar/interval.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coxradar/quadrature.hpp"

namespace coxradar {

namespace {

constexpr double kPi = std::numbers::pi;

void check_span_args(double theta, double d, double omega, double range) {
  if (std::isnan(theta) || std::isnan(d)) throw std::invalid_argument("NaN span input");
  if (!(omega > 0.0 && omega < kPi / 2.0))
    throw std::invalid_argument("omega must be in (0, pi/2)");
  if (!(range > 0.0)) throw std::invalid_argument("range must be > 0");
}

}  // namespace

CaseEvent classify_case(double theta, double omega) {
  theta = std::fmod(theta, 2.0 * kPi);
  if (theta < 0.0) theta += 2.0 * kPi;
  struct Anchor {
    double at;
    CaseEvent near, far;
  };
  // (near, far) = within omega / within 2*omega of each ego-street direction
  const Anchor anchors[] = {{0.0, CaseEvent::a1, CaseEvent::a2},
                            {kPi, CaseEvent::a4, CaseEvent::a3},
                            {kPi, CaseEvent::a5, CaseEvent::a6},
                            {2.0 * kPi, CaseEvent::a8, CaseEvent::a7}};
  // quadrant decides which anchor applies
  const int quadrant = static_cast<int>(theta / (kPi / 2.0));  // 0..3
  const Anchor& an = anchors[quadrant == 3 ? 3 : quadrant];
  const double dist = std::abs(theta - an.at);
  if (quadrant == 1 && theta < kPi - 2.0 * omega) return CaseEvent::none;
  if (dist <= omega) return an.near;
  if (dist <= 2.0 * omega) return an.far;
  return CaseEvent::none;
}

const char* case_name(CaseEvent c) {
  switch (c) {
    case CaseEvent::a1: return "A1";
    case CaseEvent::a2: return "A2";
    case CaseEvent::a3: return "A3";
    case CaseEvent::a4: return "A4";
    case CaseEvent::a5: return "A5";
    case CaseEvent::a6: return "A6";
    case CaseEvent::a7: return "A7";
    case CaseEvent::a8: return "A8";
    default: return "-";
  }
}

InterferenceInterval interfering_span(double theta, double d, double omega, double range) {
  check_span_args(theta, d, omega, range);
  const double st = std::abs(std::sin(theta));
  const double ct = std::abs(std::cos(theta));
  InterferenceInterval out;
  if (st < 1e-12) return out;  // parallel street: measure-zero, no intersection

  const double sin_o = std::sin(omega);
  const double cot_o = std::cos(omega) / sin_o;
  const double phi = std::atan2(st, ct);  // acute angle to the ego street
  const double h = std::abs(d) * st;      // ego's perpendicular distance to the street
  const double c2 = range * sin_o / st;
  const double c1 = range * sin_o * (cot_o - ct / st);

  if (d >= 0.0) {
    // intersection ahead: radars exist while the street stays within 2*omega
    // of the ego-street direction and the crossing is closer than c2
    if (phi >= 2.0 * omega || d > c2) return out;
    out.a = d * (st * cot_o - ct);
    const bool edge_exit = phi > omega && d <= c1;
    out.b = edge_exit ? d * std::tan(omega) / (st - std::tan(omega) * ct)
                      : std::sqrt(std::max(range * range - h * h, 0.0)) - d * ct;
    out.empty = false;
  } else {
    // intersection behind the ego: only near-parallel streets reach the beam
    if (phi >= omega || d < c1) return out;
    out.a = d / (st * cot_o - ct);
    out.b = std::sqrt(std::max(range * range - h * h, 0.0)) - d * ct;
    out.empty = false;
  }
  return out;
}

InterferenceInterval interval_blcp(double theta_i, double d_i, double omega, double r_b) {
  return interfering_span(theta_i, d_i, omega, r_b);
}

InterferenceInterval interval_plcp(double theta_i, double u_i, double omega, double r_p) {
  return interfering_span(theta_i, u_i, omega, r_p);
}

InterferenceInterval ego_street_interval(double target_range, double r_k) {
  if (!(r_k > 0.0) || !(target_range >= 0.0) || target_range > r_k)
    throw std::invalid_argument("need 0 <= target_range <= r_k");
  return {target_range, r_k, false};
}

double ego_distance(double d_i, double theta_i, double v, bool is_ego_street) {
  if (!std::isfinite(d_i) || !std::isfinite(v)) throw std::invalid_argument("non-finite input");
  if (is_ego_street) return v;
  const double dx = v * std::sin(theta_i);
  const double dy = d_i + v * std::abs(std::cos(theta_i));
  return std::sqrt(dx * dx + dy * dy);
}

namespace detail {

// Integrates f(theta, u) * |sin theta| over the four angular bands that can
// host interferers, with u restricted per theta to the window where the span
// is non-empty and (when rg_clip is finite) to |u sin theta| <= rg_clip.
// This is the (theta, r)-measure integral with r = |u sin theta|.
double band_integral(double r0, double omega, double range, double rg_clip, double tol,
                     const std::function<double(double, double)>& f) {
  const double sin_o = std::sin(omega);
  const double cot_o = std::cos(omega) / sin_o;
  struct Band {
    double lo, hi;
    bool positive_u;
  };
  const Band bands[] = {
      {0.0, 2.0 * omega, true},
      {kPi - 2.0 * omega, kPi, true},
      {kPi, kPi + 2.0 * omega, false},
      {2.0 * kPi - 2.0 * omega, 2.0 * kPi, false},
  };
  double total = 0.0;
  for (const Band& band : bands) {
    total += integrate(
        [&](double theta) {
          const double st = std::abs(std::sin(theta));
          const double ct = std::abs(std::cos(theta));
          if (st < 1e-14) return 0.0;
          const double c2 = range * sin_o / st;
          const double c1 = range * sin_o * (cot_o - ct / st);
          double u_lo = r0 + std::min(c1, 0.0);
          double u_hi = r0 + c2;
          if (band.positive_u) {
            u_lo = std::max(u_lo, 0.0);
            if (std::isfinite(rg_clip)) u_hi = std::min(u_hi, rg_clip / st);
          } else {
            u_hi = std::min(u_hi, 0.0);
            if (std::isfinite(rg_clip)) u_lo = std::max(u_lo, -rg_clip / st);
          }
          if (!(u_hi > u_lo)) return 0.0;
          const double inner = integrate([&](double u) { return f(theta, u); }, u_lo, u_hi,
                                         tol * 1e-3 / (u_hi - u_lo) + 1e-16, 40);
          return inner * st;
        },
        band.lo, band.hi, tol / 4.0, 40);
  }
  return total;
}

}  // namespace detail

MeanInterferers mean_interferers_blcp(double r0, double lambda, double omega,
                                      double target_range, double r_k, const BlpSpec& spec,
                                      double radial_limit) {
  spec.validate();
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  if (!std::isfinite(r0)) throw std::invalid_argument("r0 must be finite");
  const double rg = radial_limit > 0.0 ? radial_limit : spec.r_g;

  const auto span_length = [&](double theta, double u) {
    return interfering_span(theta, u - r0, omega, r_k).length();
  };
  MeanInterferers out;
  const double integral_rg = detail::band_integral(r0, omega, r_k, rg, 1e-6, span_length);
  const double avg_rg = integral_rg / (2.0 * kPi * rg);
  out.corrected =
      lambda * ((r_k - target_range) + static_cast<double>(spec.n_b) * avg_rg);

  // literal Eq-(8) form: radial domain [0, R_b], bracket raised to n_b
  const double integral_rb = detail::band_integral(r0, omega, r_k, r_k, 1e-6, span_length);
  const double avg_rb = integral_rb / (2.0 * kPi * r_k);
  out.as_printed = lambda * std::exp(static_cast<double>(spec.n_b) * std::log(avg_rb));
  return out;
}

}  // namespace coxradar
