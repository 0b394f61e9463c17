#pragma once

#include "coxradar/geometry.hpp"

namespace coxradar {

/// Signed span [a, b] along a crossing street, measured from its intersection
/// with the ego street, on which a radar interferes with the ego. Both
/// endpoints may be negative; the span may straddle zero.
struct InterferenceInterval {
  double a = 0.0;
  double b = 0.0;
  bool empty = true;
  double length() const { return empty ? 0.0 : b - a; }
};

/// Angular events A1..A8 over [0, 2pi): within omega (odd) or between omega
/// and 2*omega (even) of the ego-street direction, one pair per quadrant.
enum class CaseEvent { none, a1, a2, a3, a4, a5, a6, a7, a8 };

CaseEvent classify_case(double theta, double omega);
const char* case_name(CaseEvent c);

/// Closed-form interfering span for a street crossing the ego street at
/// signed distance d (ahead > 0), beamwidth omega, radar reach `range`.
/// Exact for omega <= pi/4; for larger beams the true set can split in two
/// and the forward component is returned.
InterferenceInterval interfering_span(double theta, double d, double omega, double range);

/// BLCP form: d_i = u_i - r0.
InterferenceInterval interval_blcp(double theta_i, double d_i, double omega, double r_b);

/// PLCP form: the ego sits at the origin, so the argument is u_i itself.
InterferenceInterval interval_plcp(double theta_i, double u_i, double omega, double r_p);

/// Interferers on the ego street itself occupy [R, R_k] ahead of the ego.
InterferenceInterval ego_street_interval(double target_range, double r_k);

/// Ego-to-interferer distance for a radar at interfering distance v.
double ego_distance(double d_i, double theta_i, double v, bool is_ego_street);

struct MeanInterferers {
  double corrected = 0.0;   // lambda * ((R_k - R) + n_b * mean span length)
  double as_printed = 0.0;  // lambda * (mean span length over [0,R_b])^n_b; overflows to inf
};

/// Average interferer count seen by a BLCP ego radar at (0, r0).
MeanInterferers mean_interferers_blcp(double r0, double lambda, double omega,
                                      double target_range, double r_k, const BlpSpec& spec,
                                      double radial_limit = 0.0 /* 0: use r_g */);

}  // namespace coxradar
