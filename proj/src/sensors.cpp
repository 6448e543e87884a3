#include "pipebot/sensors.hpp"

#include <cmath>
#include <numbers>

#include "pipebot/errors.hpp"
#include "pipebot/rng.hpp"

namespace pipebot::sensors {

namespace {

constexpr double kPi = std::numbers::pi;

// Truth range for a radial ray at (z, theta): wall radius, valve-face range,
// or no return when the ray flies into an open branch cavity.
std::optional<double> truth_range(const world::PipeScenario& s, double z_m, double theta_deg,
                                  bool lined) {
  const auto sample = world::surface_radius_at(s, z_m, theta_deg, lined);
  if (sample.kind == world::SurfaceSample::Kind::wall) return sample.radius_mm;
  if (sample.depth_to_valve_mm) return sample.radius_mm + *sample.depth_to_valve_mm;
  return std::nullopt;
}

}  // namespace

ProfileLine sample_profile_line(const world::PipeScenario& scenario, const RobotPose& pose,
                                double theta_deg, double window_mm, double step_mm,
                                double noise_sigma_mm, std::uint64_t seed) {
  if (!(step_mm > 0.0)) throw ParameterError("profile step must be positive");
  const double half = window_mm / 2.0;
  if (pose.z_m - half / world::kMmPerMeter < 0.0 ||
      pose.z_m + half / world::kMmPerMeter > scenario.length_m) {
    throw RangeError("profile window extends past the pipe end");
  }

  auto rng = make_rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  const bool lined = scenario.liner.has_value();

  ProfileLine line;
  line.theta_deg = theta_deg;
  line.noise_sigma_mm = noise_sigma_mm;
  for (double zl = -half; zl <= half + 1e-9; zl += step_mm) {
    ProfilePoint pt;
    pt.z_local_mm = zl;
    const double z = pose.z_m + zl / world::kMmPerMeter;
    if (auto r = truth_range(scenario, z, theta_deg, lined)) {
      pt.range_mm = *r + (noise_sigma_mm > 0.0 ? noise(rng) * noise_sigma_mm : 0.0);
    }
    line.samples.push_back(pt);
  }
  return line;
}

ProfileScan run_profile_scan(const world::PipeScenario& scenario, const RobotPose& pose,
                             const ProfilometryConfig& params, std::uint64_t seed) {
  if (!(params.angular_step_deg > 0.0)) throw ParameterError("angular step must be positive");
  if (params.sweep_deg > 400.0) {
    throw RotationRangeError("profilometry sweep exceeds the 400 degree stage range");
  }
  const int steps = static_cast<int>(std::lround(params.sweep_deg / params.angular_step_deg));
  ProfileScan scan;
  scan.angular_step_deg = params.angular_step_deg;
  scan.duration_s = steps * params.per_step_time_s;
  scan.lines.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double theta = pose.roll_deg + i * params.angular_step_deg;
    scan.lines.push_back(sample_profile_line(scenario, pose, theta, params.window_mm,
                                             params.step_mm, params.noise_sigma_mm,
                                             derive_seed(seed, "profile-line", i)));
  }
  return scan;
}

LaserReading sample_front_laser(const world::PipeScenario& scenario, double z_m,
                                double lookahead_mm, int ring_samples, double noise_sigma_mm,
                                std::uint64_t seed) {
  const double ring_z = z_m + lookahead_mm / world::kMmPerMeter;
  if (z_m < 0.0 || ring_z > scenario.length_m) throw RangeError("laser ring outside the pipe");
  if (ring_samples < 4) throw ParameterError("ring needs at least 4 samples");

  auto rng = make_rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  const bool lined = scenario.liner.has_value();

  LaserReading reading;
  reading.ring_z_m = ring_z;
  reading.ranges_mm.resize(ring_samples);
  for (int k = 0; k < ring_samples; ++k) {
    const double theta = 360.0 * k / ring_samples;
    if (auto r = truth_range(scenario, ring_z, theta, lined)) {
      reading.ranges_mm[k] = *r + (noise_sigma_mm > 0.0 ? noise(rng) * noise_sigma_mm : 0.0);
    }
  }
  return reading;
}

double sample_odometry(const OdometryModel& model, double true_delta_z_m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double scale = model.scale_error_sigma > 0.0 ? gauss(rng) * model.scale_error_sigma : 0.0;
  const double jitter = model.jitter_sigma_mm > 0.0 ? gauss(rng) * model.jitter_sigma_mm : 0.0;
  return true_delta_z_m * (1.0 + scale) + jitter / world::kMmPerMeter;
}

std::complex<double> coil_impedance(const world::PipeScenario& scenario, const RobotPose& pose,
                                    const CoilParams& coil, bool lined) {
  world::CoilFootprint fp;
  fp.center_z_m = pose.z_m + coil.axial_offset_mm / world::kMmPerMeter;
  fp.center_theta_deg = pose.roll_deg + coil.angular_offset_deg;
  fp.axial_extent_mm = coil.footprint_axial_mm;
  fp.circumferential_extent_mm = coil.footprint_circ_mm;
  const double overlap = world::hole_overlap(scenario, fp);
  double attenuation = 1.0;
  if (lined && scenario.liner) {
    attenuation = std::exp(-scenario.liner->thickness_mm * coil.liftoff_decay_per_mm);
  }
  return coil.base_impedance + coil.sensitivity * overlap * attenuation;
}

RobotPose interpolate_pose(const std::vector<PoseStamp>& track, double t_us) {
  if (track.empty()) throw ParameterError("empty pose track");
  if (t_us <= static_cast<double>(track.front().t_us)) return track.front().pose;
  if (t_us >= static_cast<double>(track.back().t_us)) return track.back().pose;
  // Find the bracketing pair.
  std::size_t hi = 1;
  while (static_cast<double>(track[hi].t_us) < t_us) ++hi;
  const auto& a = track[hi - 1];
  const auto& b = track[hi];
  const double span = static_cast<double>(b.t_us - a.t_us);
  const double w = span > 0.0 ? (t_us - static_cast<double>(a.t_us)) / span : 0.0;
  RobotPose p;
  p.z_m = a.pose.z_m + w * (b.pose.z_m - a.pose.z_m);
  p.roll_deg = a.pose.roll_deg + w * (b.pose.roll_deg - a.pose.roll_deg);
  for (int i = 0; i < 3; ++i) {
    p.tool_offset_mm[i] =
        a.pose.tool_offset_mm[i] + w * (b.pose.tool_offset_mm[i] - a.pose.tool_offset_mm[i]);
  }
  return p;
}

RawECSignal synthesize_ec_raw(const world::PipeScenario& scenario,
                              const std::vector<PoseStamp>& trajectory, const CoilParams& coil,
                              double sample_rate_hz, std::uint64_t seed, double noise_sigma,
                              bool lined) {
  if (trajectory.size() < 1) throw ParameterError("trajectory must have at least one pose");
  if (!(sample_rate_hz > 2.0 * coil.excitation_freq_hz)) {
    throw SamplingError("sample rate must exceed twice the excitation frequency");
  }
  for (std::size_t i = 1; i < trajectory.size(); ++i) {
    if (trajectory[i].t_us <= trajectory[i - 1].t_us) {
      throw ParameterError("pose track timestamps must be strictly increasing");
    }
  }

  RawECSignal out;
  out.sample_rate_hz = sample_rate_hz;
  out.t0_us = trajectory.front().t_us;
  out.pose_track = trajectory;
  out.excitation_freq_hz = coil.excitation_freq_hz;

  const double span_us = static_cast<double>(trajectory.back().t_us - trajectory.front().t_us);
  const std::size_t n =
      std::max<std::size_t>(1, static_cast<std::size_t>(span_us * 1e-6 * sample_rate_hz) + 1);
  out.samples.reserve(n);

  auto rng = make_rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t_s = static_cast<double>(i) / sample_rate_hz;
    const double t_us = static_cast<double>(out.t0_us) + t_s * 1e6;
    const RobotPose pose = interpolate_pose(trajectory, t_us);
    const std::complex<double> z = coil_impedance(scenario, pose, coil, lined);
    double s = std::abs(z) * coil.excitation_amplitude *
               std::sin(2.0 * kPi * coil.excitation_freq_hz * t_s + std::arg(z));
    if (noise_sigma > 0.0) s += noise(rng) * noise_sigma;
    out.samples.push_back(s);
  }
  return out;
}

}  // namespace pipebot::sensors
