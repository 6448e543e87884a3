#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pipebot::world {

// Unit conventions used across the library:
//   axial positions   meters   (z along the pipe axis, 0 at the insertion end)
//   radii / offsets   mm
//   angles            degrees, theta = 0 at the top of the pipe, increasing
//                     clockwise viewed from the insertion end
constexpr double kMmPerMeter = 1000.0;

struct LinerSpec {
  double inner_radius_mm = 40.0;
  double thickness_mm = 10.0;      // fills the cast-iron bore
  double conductivity_relative = 0.0;  // HDPE is non-conductive
};

struct BranchConnection {
  double axial_pos_m = 0.0;        // center of the hole
  double angular_pos_deg = 0.0;    // [0, 360)
  double hole_diameter_mm = 20.0;
  double valve_axis_offset_mm = 0.0;  // lateral offset of the valve axis, along +z
  double valve_depth_mm = 30.0;       // radial distance from pipe wall to valve face
  // Diameter of the valve face visible through the hole. Defaults to the hole
  // diameter so an on-axis valve fills the whole footprint.
  double valve_face_diameter_mm = 20.0;
  bool hardware_present = true;    // connection fitting mounted outside
};

struct JointSpec {
  double axial_pos_m = 0.0;
  double deflection_deg = 0.0;
};

// Opening machined through the liner during pass 2.
struct LinerOpening {
  double axial_pos_m = 0.0;
  double angular_pos_deg = 0.0;
  double diameter_mm = 0.0;
};

// Ground truth geometry. Immutable after construction; machining operations
// return modified copies.
struct PipeScenario {
  double length_m = 8.0;
  double inner_radius_cast_mm = 50.0;
  std::optional<LinerSpec> liner;  // present = installed
  std::vector<BranchConnection> branches;
  std::vector<JointSpec> joints;
  std::vector<LinerOpening> liner_openings;
  std::uint64_t seed = 0;
};

// Wall sample at a (z, theta) query point.
struct SurfaceSample {
  enum class Kind { wall, hole_interior };
  Kind kind = Kind::wall;
  double radius_mm = 0.0;  // wall (or liner) radius; for hole_interior the
                           // radius of the surrounding bore
  // Radial distance from the bore wall to the valve face, when a hardware
  // fitting is present and the query ray hits its face. Empty means the ray
  // gets no return (no valve, or ray misses the valve face).
  std::optional<double> depth_to_valve_mm;
};

// Rectangle on the unrolled cast-iron surface, axis-aligned with (z, R*theta).
struct CoilFootprint {
  double center_z_m = 0.0;
  double center_theta_deg = 0.0;
  double axial_extent_mm = 10.0;
  double circumferential_extent_mm = 10.0;
};

// Validates the invariants and returns the scenario. Throws OverlapError on
// overlapping branch holes, GeometryError on any other violation.
PipeScenario validate_scenario(PipeScenario scenario);

// Geometry oracle used by every sensor model. `lined` selects the observed
// surface; ground truth is unchanged by lining. Throws RangeError if z is
// outside [0, length].
SurfaceSample surface_radius_at(const PipeScenario& scenario, double z_m, double theta_deg,
                                bool lined);

// Area fraction of the footprint overlapping any branch hole disc, computed
// on the unrolled (z, R*theta) plane. Always in [0, 1].
double hole_overlap(const PipeScenario& scenario, const CoilFootprint& footprint);

// True if the unrolled point (z, theta) lies inside the branch hole disc.
bool hole_contains(const PipeScenario& scenario, const BranchConnection& branch, double z_m,
                   double theta_deg);

// Wraps an angle to [0, 360).
double wrap_angle_deg(double deg);

// Smallest signed angular difference a - b in (-180, 180].
double angle_diff_deg(double a, double b);

}  // namespace pipebot::world
