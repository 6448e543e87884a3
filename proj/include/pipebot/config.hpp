#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "pipebot/geometry.hpp"

namespace pipebot {

// --- sensor defaults -------------------------------------------------------

struct FrontLaserConfig {
  double lookahead_mm = 150.0;   // ring position ahead of the module datum
  int ring_samples = 720;        // samples per 360 degree ring
  double noise_sigma_mm = 0.2;
  double jump_threshold_mm = 5.0;  // range step that counts as a discontinuity
};

struct ProfilometryConfig {
  double sweep_deg = 360.0;
  double angular_step_deg = 1.0;
  double per_step_time_s = 600.0 / 360.0;  // 10 min for a full turn
  double window_mm = 120.0;                // axial window, centered on the module
  double step_mm = 1.0;
  double noise_sigma_mm = 0.3;
  double deep_margin_mm = 5.0;  // wall/deep population split for hole fitting
};

struct OdometryConfig {
  double scale_error_sigma = 0.009;  // per-meter multiplicative
  double jitter_sigma_mm = 0.5;      // additive per reading
};

struct EddyCurrentConfig {
  double excitation_freq_hz = 1000.0;
  double sample_rate_hz = 20000.0;
  double excitation_amplitude = 1.0;
  std::complex<double> base_impedance{8.0, 6.0};
  std::complex<double> sensitivity{3.0, 4.0};
  double liftoff_decay_per_mm = 0.05;
  double noise_sigma = 0.05;
  int demod_block = 200;  // 10 excitation periods at the default rates
  int filter_window = 15;
  // axial differential pair
  double pair_spacing_mm = 30.0;
  double axial_coil_axial_mm = 10.0;
  double axial_coil_circ_mm = 10.0;
  double detect_threshold = 1.0;
  double detect_hysteresis = 0.3;
  // radial point coil and the fine-mapping grid
  double point_coil_axial_mm = 16.0;
  double point_coil_circ_mm = 16.0;
  double grid_z_halfspan_mm = 16.0;
  double grid_z_step_mm = 2.0;
  double grid_theta_halfspan_deg = 20.0;
  double grid_theta_step_deg = 2.0;
  double dwell_s = 0.01;  // per grid node
};

struct SensorConfig {
  FrontLaserConfig front_laser;
  ProfilometryConfig profilometry;
  OdometryConfig odometry;
  EddyCurrentConfig ec;
};

// --- machining defaults -----------------------------------------------------

struct MaterialCutParams {
  double tool_diameter_mm = 6.0;
  double radial_depth_of_cut_mm = 0.2;
  double feed_mm_s = 0.31;
  double plunge_feed_mm_s = 0.31;
  double spindle_rpm = 3000.0;
  double force_coeff_n_s_mm2 = 2000.0;   // radial force = coeff * doc * feed
  double torque_coeff_n_s_mm = 500.0;    // tangential force = coeff * doc * feed
};

struct MachiningConfig {
  MaterialCutParams cast_iron{6.0, 0.2, 0.31, 0.31, 3000.0, 2000.0, 500.0};
  // Ø20 Z=2 milling cutter; feeds calibrated to the validated drill/ream times.
  MaterialCutParams hdpe{20.0, 0.5, 0.0785, 0.0185, 3000.0, 400.0, 100.0};
  double bore_target_diameter_mm = 24.4;  // pass-1 cast-iron bore target
  double pe_target_diameter_mm = 23.0;    // pass-2 ream target
  double rpm_safe_min = 2800.0;
  double spindle_rpm_max = 8000.0;
  double max_screw_force_n = 350.0;
  double max_torque_nm = 0.5;
  double duration_jitter_sigma = 0.03;  // relative, seeded per simulation
  double extra_plunge_mm = 2.0;         // breakthrough margin past the wall
};

// --- mission defaults -------------------------------------------------------

struct ComplianceLimits {
  double max_valve_axis_offset_mm = 5.0;
  double min_diameter_mm = 15.0;
  double max_diameter_mm = 30.0;
};

struct MissionConfig {
  double traverse_speed_m_s = 0.10;
  double pass2_speed_m_s = 0.05;
  double traction_demand_n = 200.0;
  double reading_step_m = 0.002;        // front-laser reading pitch
  double search_window_m = 0.2;         // pass-2 relocation window half-width
  double characterize_sweep_deg = 360.0;
  ComplianceLimits compliance;
  double fit_residual_bound_mm = 2.0;
  int jam_retries = 1;
  double jam_retry_rpm_bump = 300.0;
};

// --- delta geometry (module frame) ------------------------------------------

struct DeltaConfig {
  double rail_radius_mm = 25.0;  // effective radius: rail station minus platform joint
  double rod_length_mm = 60.0;
  double carriage_min_mm = 0.0;
  double carriage_max_mm = 120.0;
  double tool_offset_mm = 40.0;  // tool tip protrusion from the platform, radial (+y)
};

// File-loadable description of a scenario plus every model default the
// mission needs. Round-trips losslessly through JSON.
struct ScenarioConfig {
  std::string pipe_id = "pipe";
  world::PipeScenario scenario;  // scenario.liner: present = spec'd; installed flag below
  bool liner_installed = false;
  SensorConfig sensors;
  MachiningConfig machining;
  MissionConfig mission;
  DeltaConfig delta;
};

// Schema-validated load/save. Throws ParseError on malformed JSON,
// FormatError on schema violations or unknown versions.
ScenarioConfig load_scenario_config(const std::string& path);
void save_scenario_config(const ScenarioConfig& config, const std::string& path);
ScenarioConfig scenario_config_from_json_text(const std::string& text);
std::string scenario_config_to_json_text(const ScenarioConfig& config);

// Validates and builds the ground-truth scenario from a config. The returned
// scenario is lined only if the config has a liner spec and liner_installed.
world::PipeScenario build_scenario(const ScenarioConfig& config);

}  // namespace pipebot
