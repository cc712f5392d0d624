#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bose2d {

// Piecewise nonnegative radial potential with finite range.  Segments are
// contiguous, start at r = 0, and end at the range R0; v(r) = 0 for r > R0.
// A hard core (v = +inf) may appear only as an innermost prefix.
struct PotentialSegment {
  enum class Kind { kHardcore, kConstant, kTabulated };
  double r_lo = 0.0;
  double r_hi = 0.0;
  Kind kind = Kind::kConstant;
  double value = 0.0;  // constant segments
  std::vector<std::pair<double, double>> samples;  // tabulated, linear interp
};

struct RadialPotential {
  std::vector<PotentialSegment> segments;

  // Throws std::invalid_argument on contiguity/ordering/sign violations.
  void validate() const;

  // Outer edge of the support (r_hi of the last segment), 0 if empty.
  double range_R0() const;

  // Radius of the innermost hardcore prefix, 0 if none.
  double hardcore_radius() const;

  // Pointwise value; +inf inside a hard core, 0 beyond the range.
  double value(double r) const;

  // True if v is identically zero (no segments or all-zero values).
  bool is_zero() const;

  // int_lo^hi w(r) v(r) dr over the finite part; returns +inf if [lo,hi)
  // meets a hardcore segment.  Piecewise adaptive quadrature, tolerance ~1e-12.
  double integrate_weighted(double lo, double hi,
                            const std::function<double(double)>& w) const;

  // Convenience: int_lo^hi r v(r) dr.
  double integral_rv(double lo, double hi) const;

  // JSON round trip; schema
  //   {"segments":[{"r_lo":0.0,"r_hi":1.0,"kind":"hardcore"},
  //                {"r_lo":1.0,"r_hi":2.0,"kind":"const","value":3.5},
  //                {"r_lo":2.0,"r_hi":3.0,"kind":"tabulated",
  //                 "samples":[[2.0,1.0],[3.0,0.0]]}]}
  static RadialPotential from_json_text(const std::string& text);
  std::string to_json_text() const;

  // Factories for common shapes.
  static RadialPotential hard_disk(double radius);
  static RadialPotential soft_disk(double v0, double radius);
};

}  // namespace bose2d
