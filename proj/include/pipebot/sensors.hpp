#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pipebot/config.hpp"
#include "pipebot/geometry.hpp"

namespace pipebot::sensors {

struct RobotPose {
  double z_m = 0.0;        // axial position of the module datum
  double roll_deg = 0.0;   // rotation stage angle, [0, 400] for the operational module
  std::array<double, 3> tool_offset_mm{0.0, 0.0, 0.0};  // delta-tool displacement
};

struct ProfilePoint {
  double z_local_mm = 0.0;
  std::optional<double> range_mm;  // empty = no return
};

struct ProfileLine {
  double theta_deg = 0.0;
  std::vector<ProfilePoint> samples;  // z_local strictly increasing
  double noise_sigma_mm = 0.0;
};

struct ProfileScan {
  std::vector<ProfileLine> lines;  // sorted by theta, consecutive step apart
  double angular_step_deg = 1.0;
  double duration_s = 0.0;
};

struct CoilParams {
  double footprint_axial_mm = 10.0;
  double footprint_circ_mm = 10.0;
  double excitation_freq_hz = 1000.0;
  double excitation_amplitude = 1.0;
  std::complex<double> base_impedance{8.0, 6.0};
  std::complex<double> sensitivity{3.0, 4.0};
  double liftoff_decay_per_mm = 0.05;
  // Mounting offsets from the module datum; the footprint is centered at
  // (pose.z + axial_offset, pose.roll + angular_offset) on the cast surface.
  double axial_offset_mm = 0.0;
  double angular_offset_deg = 0.0;
};

struct PoseStamp {
  std::int64_t t_us = 0;
  RobotPose pose;
};

struct RawECSignal {
  double sample_rate_hz = 0.0;
  std::int64_t t0_us = 0;
  std::vector<double> samples;        // sample n is at t0 + n / rate
  std::vector<PoseStamp> pose_track;  // strictly increasing, covers the signal
  double excitation_freq_hz = 0.0;
};

struct OdometryModel {
  double scale_error_sigma = 0.0;  // per-meter multiplicative
  double jitter_sigma_mm = 0.0;    // additive per reading
};

// Ring of ranges at a fixed axial position (front navigation laser).
struct LaserReading {
  double ring_z_m = 0.0;  // z + lookahead, where the ring actually lies
  std::vector<std::optional<double>> ranges_mm;  // sample k at theta = k * 360 / size
};

// One laser line at a fixed theta: ranges are surface truth plus N(0, sigma).
// Over an unlined hole the return comes from the valve face (valve_depth
// deeper) or is dropped when the ray misses the valve. Throws RangeError when
// the window extends past either pipe end.
ProfileLine sample_profile_line(const world::PipeScenario& scenario, const RobotPose& pose,
                                double theta_deg, double window_mm, double step_mm,
                                double noise_sigma_mm, std::uint64_t seed);

// Rotational sweep of profile lines. Throws RotationRangeError when the sweep
// exceeds the 400 degree stage limit.
ProfileScan run_profile_scan(const world::PipeScenario& scenario, const RobotPose& pose,
                             const ProfilometryConfig& params, std::uint64_t seed);

// Forward-looking detection ring at z + lookahead.
LaserReading sample_front_laser(const world::PipeScenario& scenario, double z_m,
                                double lookahead_mm, int ring_samples, double noise_sigma_mm,
                                std::uint64_t seed);

// measured = true * (1 + N(0, scale_sigma)) + N(0, jitter_sigma mm). The caller
// owns the generator, so streams stay reproducible and shareable.
double sample_odometry(const OdometryModel& model, double true_delta_z_m, std::mt19937_64& rng);

// Z = base + sensitivity * overlap * exp(-liner_thickness * liftoff_decay).
// The HDPE liner attenuates through liftoff but never blocks the response.
std::complex<double> coil_impedance(const world::PipeScenario& scenario, const RobotPose& pose,
                                    const CoilParams& coil, bool lined);

// s(t) = |Z(pose(t))| * A * sin(2 pi f t + arg Z(pose(t))) + N(0, sigma), with
// the pose interpolated linearly along the track. Throws SamplingError when
// sample_rate <= 2 * excitation frequency.
RawECSignal synthesize_ec_raw(const world::PipeScenario& scenario,
                              const std::vector<PoseStamp>& trajectory, const CoilParams& coil,
                              double sample_rate_hz, std::uint64_t seed, double noise_sigma,
                              bool lined);

// Linear interpolation of the pose track at t (µs). Clamps at the ends.
RobotPose interpolate_pose(const std::vector<PoseStamp>& track, double t_us);

}  // namespace pipebot::sensors
