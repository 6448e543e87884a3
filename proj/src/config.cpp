#include "pipebot/config.hpp"

#include <fstream>
#include <json.hpp>

#include "pipebot/errors.hpp"

namespace pipebot {

using nlohmann::ordered_json;

namespace {

constexpr int kConfigVersion = 1;
constexpr const char* kConfigFormat = "pipebot-scenario";

ordered_json complex_to_json(const std::complex<double>& z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const ordered_json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

template <typename T>
void get_if_present(const ordered_json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

ordered_json sensors_to_json(const SensorConfig& s) {
  return ordered_json{
      {"front_laser",
       {{"lookahead_mm", s.front_laser.lookahead_mm},
        {"ring_samples", s.front_laser.ring_samples},
        {"noise_sigma_mm", s.front_laser.noise_sigma_mm},
        {"jump_threshold_mm", s.front_laser.jump_threshold_mm}}},
      {"profilometry",
       {{"sweep_deg", s.profilometry.sweep_deg},
        {"angular_step_deg", s.profilometry.angular_step_deg},
        {"per_step_time_s", s.profilometry.per_step_time_s},
        {"window_mm", s.profilometry.window_mm},
        {"step_mm", s.profilometry.step_mm},
        {"noise_sigma_mm", s.profilometry.noise_sigma_mm},
        {"deep_margin_mm", s.profilometry.deep_margin_mm}}},
      {"odometry",
       {{"scale_error_sigma", s.odometry.scale_error_sigma},
        {"jitter_sigma_mm", s.odometry.jitter_sigma_mm}}},
      {"ec",
       {{"excitation_freq_hz", s.ec.excitation_freq_hz},
        {"sample_rate_hz", s.ec.sample_rate_hz},
        {"excitation_amplitude", s.ec.excitation_amplitude},
        {"base_impedance", complex_to_json(s.ec.base_impedance)},
        {"sensitivity", complex_to_json(s.ec.sensitivity)},
        {"liftoff_decay_per_mm", s.ec.liftoff_decay_per_mm},
        {"noise_sigma", s.ec.noise_sigma},
        {"demod_block", s.ec.demod_block},
        {"filter_window", s.ec.filter_window},
        {"pair_spacing_mm", s.ec.pair_spacing_mm},
        {"axial_coil_axial_mm", s.ec.axial_coil_axial_mm},
        {"axial_coil_circ_mm", s.ec.axial_coil_circ_mm},
        {"detect_threshold", s.ec.detect_threshold},
        {"detect_hysteresis", s.ec.detect_hysteresis},
        {"point_coil_axial_mm", s.ec.point_coil_axial_mm},
        {"point_coil_circ_mm", s.ec.point_coil_circ_mm},
        {"grid_z_halfspan_mm", s.ec.grid_z_halfspan_mm},
        {"grid_z_step_mm", s.ec.grid_z_step_mm},
        {"grid_theta_halfspan_deg", s.ec.grid_theta_halfspan_deg},
        {"grid_theta_step_deg", s.ec.grid_theta_step_deg},
        {"dwell_s", s.ec.dwell_s}}}};
}

SensorConfig sensors_from_json(const ordered_json& j) {
  SensorConfig s;
  if (j.contains("front_laser")) {
    const auto& f = j.at("front_laser");
    get_if_present(f, "lookahead_mm", s.front_laser.lookahead_mm);
    get_if_present(f, "ring_samples", s.front_laser.ring_samples);
    get_if_present(f, "noise_sigma_mm", s.front_laser.noise_sigma_mm);
    get_if_present(f, "jump_threshold_mm", s.front_laser.jump_threshold_mm);
  }
  if (j.contains("profilometry")) {
    const auto& p = j.at("profilometry");
    get_if_present(p, "sweep_deg", s.profilometry.sweep_deg);
    get_if_present(p, "angular_step_deg", s.profilometry.angular_step_deg);
    get_if_present(p, "per_step_time_s", s.profilometry.per_step_time_s);
    get_if_present(p, "window_mm", s.profilometry.window_mm);
    get_if_present(p, "step_mm", s.profilometry.step_mm);
    get_if_present(p, "noise_sigma_mm", s.profilometry.noise_sigma_mm);
    get_if_present(p, "deep_margin_mm", s.profilometry.deep_margin_mm);
  }
  if (j.contains("odometry")) {
    const auto& o = j.at("odometry");
    get_if_present(o, "scale_error_sigma", s.odometry.scale_error_sigma);
    get_if_present(o, "jitter_sigma_mm", s.odometry.jitter_sigma_mm);
  }
  if (j.contains("ec")) {
    const auto& e = j.at("ec");
    get_if_present(e, "excitation_freq_hz", s.ec.excitation_freq_hz);
    get_if_present(e, "sample_rate_hz", s.ec.sample_rate_hz);
    get_if_present(e, "excitation_amplitude", s.ec.excitation_amplitude);
    if (e.contains("base_impedance")) s.ec.base_impedance = complex_from_json(e.at("base_impedance"));
    if (e.contains("sensitivity")) s.ec.sensitivity = complex_from_json(e.at("sensitivity"));
    get_if_present(e, "liftoff_decay_per_mm", s.ec.liftoff_decay_per_mm);
    get_if_present(e, "noise_sigma", s.ec.noise_sigma);
    get_if_present(e, "demod_block", s.ec.demod_block);
    get_if_present(e, "filter_window", s.ec.filter_window);
    get_if_present(e, "pair_spacing_mm", s.ec.pair_spacing_mm);
    get_if_present(e, "axial_coil_axial_mm", s.ec.axial_coil_axial_mm);
    get_if_present(e, "axial_coil_circ_mm", s.ec.axial_coil_circ_mm);
    get_if_present(e, "detect_threshold", s.ec.detect_threshold);
    get_if_present(e, "detect_hysteresis", s.ec.detect_hysteresis);
    get_if_present(e, "point_coil_axial_mm", s.ec.point_coil_axial_mm);
    get_if_present(e, "point_coil_circ_mm", s.ec.point_coil_circ_mm);
    get_if_present(e, "grid_z_halfspan_mm", s.ec.grid_z_halfspan_mm);
    get_if_present(e, "grid_z_step_mm", s.ec.grid_z_step_mm);
    get_if_present(e, "grid_theta_halfspan_deg", s.ec.grid_theta_halfspan_deg);
    get_if_present(e, "grid_theta_step_deg", s.ec.grid_theta_step_deg);
    get_if_present(e, "dwell_s", s.ec.dwell_s);
  }
  return s;
}

ordered_json material_to_json(const MaterialCutParams& m) {
  return ordered_json{{"tool_diameter_mm", m.tool_diameter_mm},
                      {"radial_depth_of_cut_mm", m.radial_depth_of_cut_mm},
                      {"feed_mm_s", m.feed_mm_s},
                      {"plunge_feed_mm_s", m.plunge_feed_mm_s},
                      {"spindle_rpm", m.spindle_rpm},
                      {"force_coeff_n_s_mm2", m.force_coeff_n_s_mm2},
                      {"torque_coeff_n_s_mm", m.torque_coeff_n_s_mm}};
}

MaterialCutParams material_from_json(const ordered_json& j, MaterialCutParams m) {
  get_if_present(j, "tool_diameter_mm", m.tool_diameter_mm);
  get_if_present(j, "radial_depth_of_cut_mm", m.radial_depth_of_cut_mm);
  get_if_present(j, "feed_mm_s", m.feed_mm_s);
  get_if_present(j, "plunge_feed_mm_s", m.plunge_feed_mm_s);
  get_if_present(j, "spindle_rpm", m.spindle_rpm);
  get_if_present(j, "force_coeff_n_s_mm2", m.force_coeff_n_s_mm2);
  get_if_present(j, "torque_coeff_n_s_mm", m.torque_coeff_n_s_mm);
  return m;
}

}  // namespace

std::string scenario_config_to_json_text(const ScenarioConfig& c) {
  ordered_json j;
  j["format"] = kConfigFormat;
  j["version"] = kConfigVersion;
  j["pipe_id"] = c.pipe_id;
  j["pipe"] = {{"length_m", c.scenario.length_m},
               {"inner_radius_cast_mm", c.scenario.inner_radius_cast_mm},
               {"seed", c.scenario.seed}};
  if (c.scenario.liner) {
    j["liner"] = {{"inner_radius_mm", c.scenario.liner->inner_radius_mm},
                  {"thickness_mm", c.scenario.liner->thickness_mm},
                  {"conductivity_relative", c.scenario.liner->conductivity_relative},
                  {"installed", c.liner_installed}};
  } else {
    j["liner"] = nullptr;
  }
  j["branches"] = ordered_json::array();
  for (const auto& b : c.scenario.branches) {
    j["branches"].push_back({{"axial_pos_m", b.axial_pos_m},
                             {"angular_pos_deg", b.angular_pos_deg},
                             {"hole_diameter_mm", b.hole_diameter_mm},
                             {"valve_axis_offset_mm", b.valve_axis_offset_mm},
                             {"valve_depth_mm", b.valve_depth_mm},
                             {"valve_face_diameter_mm", b.valve_face_diameter_mm},
                             {"hardware_present", b.hardware_present}});
  }
  j["joints"] = ordered_json::array();
  for (const auto& jt : c.scenario.joints) {
    j["joints"].push_back({{"axial_pos_m", jt.axial_pos_m}, {"deflection_deg", jt.deflection_deg}});
  }
  j["liner_openings"] = ordered_json::array();
  for (const auto& o : c.scenario.liner_openings) {
    j["liner_openings"].push_back({{"axial_pos_m", o.axial_pos_m},
                                   {"angular_pos_deg", o.angular_pos_deg},
                                   {"diameter_mm", o.diameter_mm}});
  }
  j["sensors"] = sensors_to_json(c.sensors);
  j["machining"] = {{"cast_iron", material_to_json(c.machining.cast_iron)},
                    {"hdpe", material_to_json(c.machining.hdpe)},
                    {"bore_target_diameter_mm", c.machining.bore_target_diameter_mm},
                    {"pe_target_diameter_mm", c.machining.pe_target_diameter_mm},
                    {"rpm_safe_min", c.machining.rpm_safe_min},
                    {"spindle_rpm_max", c.machining.spindle_rpm_max},
                    {"max_screw_force_n", c.machining.max_screw_force_n},
                    {"max_torque_nm", c.machining.max_torque_nm},
                    {"duration_jitter_sigma", c.machining.duration_jitter_sigma},
                    {"extra_plunge_mm", c.machining.extra_plunge_mm}};
  j["mission"] = {{"traverse_speed_m_s", c.mission.traverse_speed_m_s},
                  {"pass2_speed_m_s", c.mission.pass2_speed_m_s},
                  {"traction_demand_n", c.mission.traction_demand_n},
                  {"reading_step_m", c.mission.reading_step_m},
                  {"search_window_m", c.mission.search_window_m},
                  {"characterize_sweep_deg", c.mission.characterize_sweep_deg},
                  {"compliance",
                   {{"max_valve_axis_offset_mm", c.mission.compliance.max_valve_axis_offset_mm},
                    {"min_diameter_mm", c.mission.compliance.min_diameter_mm},
                    {"max_diameter_mm", c.mission.compliance.max_diameter_mm}}},
                  {"fit_residual_bound_mm", c.mission.fit_residual_bound_mm},
                  {"jam_retries", c.mission.jam_retries},
                  {"jam_retry_rpm_bump", c.mission.jam_retry_rpm_bump}};
  j["delta"] = {{"rail_radius_mm", c.delta.rail_radius_mm},
                {"rod_length_mm", c.delta.rod_length_mm},
                {"carriage_min_mm", c.delta.carriage_min_mm},
                {"carriage_max_mm", c.delta.carriage_max_mm},
                {"tool_offset_mm", c.delta.tool_offset_mm}};
  return j.dump(2) + "\n";
}

ScenarioConfig scenario_config_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed scenario config: ") + e.what());
  }
  try {
    if (!j.contains("format") || j.at("format").get<std::string>() != kConfigFormat) {
      throw FormatError("not a pipebot scenario config");
    }
    if (j.at("version").get<int>() != kConfigVersion) {
      throw FormatError("unsupported scenario config version");
    }
    ScenarioConfig c;
    get_if_present(j, "pipe_id", c.pipe_id);
    const auto& pipe = j.at("pipe");
    c.scenario.length_m = pipe.at("length_m").get<double>();
    get_if_present(pipe, "inner_radius_cast_mm", c.scenario.inner_radius_cast_mm);
    std::uint64_t seed = 0;
    get_if_present(pipe, "seed", seed);
    c.scenario.seed = seed;
    if (j.contains("liner") && !j.at("liner").is_null()) {
      const auto& l = j.at("liner");
      world::LinerSpec spec;
      get_if_present(l, "inner_radius_mm", spec.inner_radius_mm);
      get_if_present(l, "thickness_mm", spec.thickness_mm);
      get_if_present(l, "conductivity_relative", spec.conductivity_relative);
      c.scenario.liner = spec;
      get_if_present(l, "installed", c.liner_installed);
    }
    for (const auto& bj : j.value("branches", ordered_json::array())) {
      world::BranchConnection b;
      b.axial_pos_m = bj.at("axial_pos_m").get<double>();
      get_if_present(bj, "angular_pos_deg", b.angular_pos_deg);
      get_if_present(bj, "hole_diameter_mm", b.hole_diameter_mm);
      get_if_present(bj, "valve_axis_offset_mm", b.valve_axis_offset_mm);
      get_if_present(bj, "valve_depth_mm", b.valve_depth_mm);
      b.valve_face_diameter_mm = b.hole_diameter_mm;
      get_if_present(bj, "valve_face_diameter_mm", b.valve_face_diameter_mm);
      get_if_present(bj, "hardware_present", b.hardware_present);
      c.scenario.branches.push_back(b);
    }
    for (const auto& jj : j.value("joints", ordered_json::array())) {
      world::JointSpec jt;
      jt.axial_pos_m = jj.at("axial_pos_m").get<double>();
      get_if_present(jj, "deflection_deg", jt.deflection_deg);
      c.scenario.joints.push_back(jt);
    }
    for (const auto& oj : j.value("liner_openings", ordered_json::array())) {
      world::LinerOpening o;
      o.axial_pos_m = oj.at("axial_pos_m").get<double>();
      o.angular_pos_deg = oj.at("angular_pos_deg").get<double>();
      o.diameter_mm = oj.at("diameter_mm").get<double>();
      c.scenario.liner_openings.push_back(o);
    }
    if (j.contains("sensors")) c.sensors = sensors_from_json(j.at("sensors"));
    if (j.contains("machining")) {
      const auto& m = j.at("machining");
      if (m.contains("cast_iron")) c.machining.cast_iron = material_from_json(m.at("cast_iron"), c.machining.cast_iron);
      if (m.contains("hdpe")) c.machining.hdpe = material_from_json(m.at("hdpe"), c.machining.hdpe);
      get_if_present(m, "bore_target_diameter_mm", c.machining.bore_target_diameter_mm);
      get_if_present(m, "pe_target_diameter_mm", c.machining.pe_target_diameter_mm);
      get_if_present(m, "rpm_safe_min", c.machining.rpm_safe_min);
      get_if_present(m, "spindle_rpm_max", c.machining.spindle_rpm_max);
      get_if_present(m, "max_screw_force_n", c.machining.max_screw_force_n);
      get_if_present(m, "max_torque_nm", c.machining.max_torque_nm);
      get_if_present(m, "duration_jitter_sigma", c.machining.duration_jitter_sigma);
      get_if_present(m, "extra_plunge_mm", c.machining.extra_plunge_mm);
    }
    if (j.contains("mission")) {
      const auto& m = j.at("mission");
      get_if_present(m, "traverse_speed_m_s", c.mission.traverse_speed_m_s);
      get_if_present(m, "pass2_speed_m_s", c.mission.pass2_speed_m_s);
      get_if_present(m, "traction_demand_n", c.mission.traction_demand_n);
      get_if_present(m, "reading_step_m", c.mission.reading_step_m);
      get_if_present(m, "search_window_m", c.mission.search_window_m);
      get_if_present(m, "characterize_sweep_deg", c.mission.characterize_sweep_deg);
      if (m.contains("compliance")) {
        const auto& cl = m.at("compliance");
        get_if_present(cl, "max_valve_axis_offset_mm", c.mission.compliance.max_valve_axis_offset_mm);
        get_if_present(cl, "min_diameter_mm", c.mission.compliance.min_diameter_mm);
        get_if_present(cl, "max_diameter_mm", c.mission.compliance.max_diameter_mm);
      }
      get_if_present(m, "fit_residual_bound_mm", c.mission.fit_residual_bound_mm);
      get_if_present(m, "jam_retries", c.mission.jam_retries);
      get_if_present(m, "jam_retry_rpm_bump", c.mission.jam_retry_rpm_bump);
    }
    if (j.contains("delta")) {
      const auto& d = j.at("delta");
      get_if_present(d, "rail_radius_mm", c.delta.rail_radius_mm);
      get_if_present(d, "rod_length_mm", c.delta.rod_length_mm);
      get_if_present(d, "carriage_min_mm", c.delta.carriage_min_mm);
      get_if_present(d, "carriage_max_mm", c.delta.carriage_max_mm);
      get_if_present(d, "tool_offset_mm", c.delta.tool_offset_mm);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("scenario config schema violation: ") + e.what());
  }
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open scenario config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scenario_config_from_json_text(text);
}

void save_scenario_config(const ScenarioConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw NotFoundError("cannot write scenario config: " + path);
  out << scenario_config_to_json_text(config);
}

world::PipeScenario build_scenario(const ScenarioConfig& config) {
  world::PipeScenario s = config.scenario;
  if (!config.liner_installed) s.liner.reset();
  return world::validate_scenario(std::move(s));
}

}  // namespace pipebot
