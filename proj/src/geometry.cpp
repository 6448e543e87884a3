#include "pipebot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pipebot/errors.hpp"

namespace pipebot::world {

namespace {

constexpr double kPi = std::numbers::pi;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

// Unrolled-plane displacement (dz, darc) in mm from a branch center to a
// query point, taking the shortest way around the circumference.
void unrolled_delta(const PipeScenario& s, const BranchConnection& b, double z_m,
                    double theta_deg, double& dz_mm, double& darc_mm) {
  dz_mm = (z_m - b.axial_pos_m) * kMmPerMeter;
  const double dtheta = angle_diff_deg(theta_deg, b.angular_pos_deg);
  darc_mm = s.inner_radius_cast_mm * deg_to_rad(dtheta);
}

// Chord half-width of a disc of radius r at axial offset dx from its center.
double chord_half(double r, double dx) {
  const double q = r * r - dx * dx;
  return q <= 0.0 ? 0.0 : std::sqrt(q);
}

// Area of the intersection between the disc (center (cx, cy), radius r) and
// the rectangle [x0,x1]x[y0,y1], by integrating the clipped chord over x with
// adaptive Simpson refinement.
double disc_rect_intersection_area(double cx, double cy, double r, double x0, double x1,
                                   double y0, double y1) {
  const double a = std::max(x0, cx - r);
  const double b = std::min(x1, cx + r);
  if (a >= b) return 0.0;
  auto clipped_chord = [&](double x) {
    const double h = chord_half(r, x - cx);
    const double lo = std::max(y0, cy - h);
    const double hi = std::min(y1, cy + h);
    return std::max(0.0, hi - lo);
  };
  // Fixed dense Simpson grid; the integrand is piecewise smooth and the
  // domains are tens of mm, so 4096 panels put the error far below 1e-6 mm^2.
  const int n = 4096;
  const double dx = (b - a) / n;
  double acc = clipped_chord(a) + clipped_chord(b);
  for (int i = 1; i < n; ++i) {
    acc += clipped_chord(a + i * dx) * (i % 2 ? 4.0 : 2.0);
  }
  return acc * dx / 3.0;
}

}  // namespace

double wrap_angle_deg(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  return w;
}

double angle_diff_deg(double a, double b) {
  double d = std::fmod(a - b, 360.0);
  if (d > 180.0) d -= 360.0;
  if (d <= -180.0) d += 360.0;
  return d;
}

bool hole_contains(const PipeScenario& s, const BranchConnection& b, double z_m,
                   double theta_deg) {
  double dz = 0.0, darc = 0.0;
  unrolled_delta(s, b, z_m, theta_deg, dz, darc);
  const double r = b.hole_diameter_mm / 2.0;
  return dz * dz + darc * darc <= r * r;
}

PipeScenario validate_scenario(PipeScenario s) {
  if (!(s.length_m > 0.0) || s.length_m > 200.0) {
    throw GeometryError("pipe length must be in (0, 200] m");
  }
  if (!(s.inner_radius_cast_mm > 0.0)) {
    throw GeometryError("cast-iron inner radius must be positive");
  }
  if (s.liner) {
    if (!(s.liner->inner_radius_mm < s.inner_radius_cast_mm)) {
      throw GeometryError("liner inner radius must be smaller than the cast-iron bore");
    }
    if (s.liner->inner_radius_mm + s.liner->thickness_mm > s.inner_radius_cast_mm + 1e-9) {
      throw GeometryError("liner thicker than the cast-iron bore allows");
    }
  }
  for (const auto& b : s.branches) {
    if (!(b.hole_diameter_mm > 0.0)) throw GeometryError("branch hole diameter must be positive");
    if (b.valve_axis_offset_mm < 0.0) throw GeometryError("valve axis offset must be >= 0");
    if (b.axial_pos_m < 0.0 || b.axial_pos_m > s.length_m) {
      throw GeometryError("branch axial position outside the pipe");
    }
  }
  // Pairwise non-overlap of the hole discs on the unrolled surface.
  for (std::size_t i = 0; i < s.branches.size(); ++i) {
    for (std::size_t j = i + 1; j < s.branches.size(); ++j) {
      const auto& a = s.branches[i];
      const auto& b = s.branches[j];
      const double dz = (a.axial_pos_m - b.axial_pos_m) * kMmPerMeter;
      const double darc =
          s.inner_radius_cast_mm * deg_to_rad(angle_diff_deg(a.angular_pos_deg, b.angular_pos_deg));
      const double min_sep = (a.hole_diameter_mm + b.hole_diameter_mm) / 2.0;
      if (dz * dz + darc * darc < min_sep * min_sep) {
        throw OverlapError("branch hole footprints overlap");
      }
    }
  }
  return s;
}

SurfaceSample surface_radius_at(const PipeScenario& s, double z_m, double theta_deg, bool lined) {
  if (z_m < 0.0 || z_m > s.length_m) throw RangeError("z outside the pipe");

  if (lined && s.liner) {
    // The liner seals every hole; pass-2 machining re-opens them locally.
    for (const auto& o : s.liner_openings) {
      const double dz = (z_m - o.axial_pos_m) * kMmPerMeter;
      const double darc =
          s.liner->inner_radius_mm * deg_to_rad(angle_diff_deg(theta_deg, o.angular_pos_deg));
      const double r = o.diameter_mm / 2.0;
      if (dz * dz + darc * darc <= r * r) {
        return surface_radius_at(s, z_m, theta_deg, /*lined=*/false);
      }
    }
    return {SurfaceSample::Kind::wall, s.liner->inner_radius_mm, std::nullopt};
  }

  for (const auto& b : s.branches) {
    if (!hole_contains(s, b, z_m, theta_deg)) continue;
    SurfaceSample out;
    out.kind = SurfaceSample::Kind::hole_interior;
    out.radius_mm = s.inner_radius_cast_mm;
    if (b.hardware_present) {
      // The valve face is a disc centered valve_axis_offset further along +z.
      double dz = 0.0, darc = 0.0;
      unrolled_delta(s, b, z_m, theta_deg, dz, darc);
      dz -= b.valve_axis_offset_mm;
      const double rf = b.valve_face_diameter_mm / 2.0;
      if (dz * dz + darc * darc <= rf * rf) out.depth_to_valve_mm = b.valve_depth_mm;
    }
    return out;
  }
  return {SurfaceSample::Kind::wall, s.inner_radius_cast_mm, std::nullopt};
}

double hole_overlap(const PipeScenario& s, const CoilFootprint& fp) {
  const double R = s.inner_radius_cast_mm;
  const double cx = fp.center_z_m * kMmPerMeter;  // axial, mm
  const double x0 = cx - fp.axial_extent_mm / 2.0;
  const double x1 = cx + fp.axial_extent_mm / 2.0;
  const double area = fp.axial_extent_mm * fp.circumferential_extent_mm;
  if (area <= 0.0) return 0.0;

  double covered = 0.0;
  for (const auto& b : s.branches) {
    const double bx = b.axial_pos_m * kMmPerMeter;
    // Evaluate the disc at its circumferential image nearest the footprint,
    // plus one image either side to handle footprints spanning the wrap.
    const double base = R * deg_to_rad(angle_diff_deg(b.angular_pos_deg, fp.center_theta_deg));
    const double circumference = 2.0 * kPi * R;
    for (int k = -1; k <= 1; ++k) {
      const double by = base + k * circumference;
      covered += disc_rect_intersection_area(bx, by, b.hole_diameter_mm / 2.0, x0, x1,
                                             -fp.circumferential_extent_mm / 2.0,
                                             fp.circumferential_extent_mm / 2.0);
    }
  }
  return std::clamp(covered / area, 0.0, 1.0);
}

}  // namespace pipebot::world
