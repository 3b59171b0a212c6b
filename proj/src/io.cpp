#include "foa/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "foa/rng.hpp"

namespace foa {

using nlohmann::json;

std::string profile_name(Profile p) {
  return p == Profile::UniformCameras ? "uniform" : "geometric";
}

Profile profile_from_name(const std::string& name) {
  if (name == "uniform") return Profile::UniformCameras;
  if (name == "geometric") return Profile::GeometricGaps;
  throw ValidationError("unknown profile: " + name);
}

std::string objective_name(Objective o) {
  return o == Objective::SumAngles ? "angles" : "ratios";
}

Objective objective_from_name(const std::string& name) {
  if (name == "angles") return Objective::SumAngles;
  if (name == "ratios") return Objective::SumRatios;
  throw ValidationError("unknown objective: " + name);
}

Instance generate_instance(const GenerateOptions& opt) {
  if (opt.n < 1) throw InvalidRange("generate_instance: n must be >= 1");
  if (!(opt.thales_margin > 1.0)) {
    throw InvalidRange("generate_instance: thales margin must exceed 1");
  }
  Rng rng(opt.seed);
  const int cams = 2 * opt.n;

  Instance inst;
  inst.cameras.resize(cams);
  if (opt.profile == Profile::UniformCameras) {
    for (double& c : inst.cameras) c = rng.uniform(0.0, 100.0);
    std::sort(inst.cameras.begin(), inst.cameras.end());
  } else {
    // Gap i spans roughly 10^i length units, so spacing covers several
    // orders of magnitude and no single scale fits all baselines.
    double x = 0.0;
    inst.cameras[0] = x;
    for (int i = 1; i < cams; ++i) {
      const double exponent = std::min(i - 1, 300);
      x += std::pow(10.0, exponent) * rng.uniform(0.5, 1.5);
      inst.cameras[i] = x;
    }
  }
  // Collisions have measure zero but would invalidate the instance.
  const double span_hint =
      std::max(1.0, inst.cameras.back() - inst.cameras.front());
  for (int i = 1; i < cams; ++i) {
    if (!(inst.cameras[i] > inst.cameras[i - 1])) {
      inst.cameras[i] = inst.cameras[i - 1] + 1e-9 * span_hint;
    }
  }

  const double radius = 0.5 * (inst.cameras.back() - inst.cameras.front());
  inst.targets.resize(opt.n);
  for (Point& t : inst.targets) {
    t.x = rng.uniform(inst.cameras.front(), inst.cameras.back());
    t.y = opt.thales_margin * radius * rng.uniform(1.0, 2.0);
  }
  return inst;
}

json instance_to_json(const Instance& inst,
                      const std::optional<GenerateOptions>& meta) {
  json j;
  j["version"] = "foa-instance-1";
  j["cameras"] = inst.cameras;
  json targets = json::array();
  for (const Point& t : inst.targets) targets.push_back({t.x, t.y});
  j["targets"] = targets;
  if (meta) {
    j["meta"] = {{"n", meta->n},
                 {"seed", meta->seed},
                 {"profile", profile_name(meta->profile)},
                 {"thales_margin", meta->thales_margin}};
  }
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cameras") || !j.contains("targets")) {
    throw ValidationError("instance file needs 'cameras' and 'targets'");
  }
  if (j.contains("version") && j.at("version") != "foa-instance-1") {
    throw ValidationError("unsupported instance file version");
  }
  Instance inst;
  for (const auto& c : j.at("cameras")) {
    const double x = c.get<double>();
    if (!std::isfinite(x)) {
      throw ValidationError("camera positions must be finite");
    }
    inst.cameras.push_back(x);
  }
  for (const auto& t : j.at("targets")) {
    if (!t.is_array() || t.size() != 2) {
      throw ValidationError("each target must be an [x, y] pair");
    }
    const Point p{t[0].get<double>(), t[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("target coordinates must be finite");
    }
    inst.targets.push_back(p);
  }
  if (inst.cameras.size() % 2 != 0 || inst.cameras.empty()) {
    throw ValidationError("camera count must be even and positive");
  }
  if (inst.cameras.size() != 2 * inst.targets.size()) {
    throw ValidationError("camera count must be twice the target count");
  }
  std::sort(inst.cameras.begin(), inst.cameras.end());
  for (std::size_t i = 1; i < inst.cameras.size(); ++i) {
    if (inst.cameras[i] == inst.cameras[i - 1]) {
      throw ValidationError("duplicate camera position: " +
                            std::to_string(inst.cameras[i]));
    }
  }
  return inst;
}

void save_instance(const Instance& inst, const std::string& path,
                   const std::optional<GenerateOptions>& meta) {
  write_text_file(path, instance_to_json(inst, meta).dump(2) + "\n");
}

Instance load_instance(const std::string& path) {
  return instance_from_json(json::parse(read_text_file(path)));
}

json report_to_json(const SolveReport& report, const json& config_echo) {
  json j;
  j["version"] = "foa-report-1";
  j["algorithm"] = report.algorithm;
  j["objective"] = objective_name(report.objective);
  if (report.epsilon) j["epsilon"] = *report.epsilon;
  j["value"] = report.value;
  j["certified"] = report.certified;
  json pairs = json::array();
  for (int s = 0; s < report.assignment.pairing.size(); ++s) {
    const CameraPair& p = report.assignment.pairing.pairs[s];
    pairs.push_back(
        {p.left + 1, p.right + 1, report.assignment.target_of_pair[s] + 1});
  }
  j["pairs"] = pairs;
  j["counters"] = {{"candidates", report.counters.candidates},
                   {"evaluated", report.counters.evaluated},
                   {"recursion_depth", report.counters.recursion_depth}};
  j["config"] = config_echo;
  j["timing"] = {{"wall_ms", report.counters.wall_ms}};
  return j;
}

std::string report_payload(const json& report_json) {
  json stripped = report_json;
  stripped.erase("timing");
  return stripped.dump(2);
}

Assignment assignment_from_report(const json& report_json,
                                  const Instance& inst) {
  Assignment a;
  a.objective = objective_from_name(report_json.at("objective"));
  for (const auto& triple : report_json.at("pairs")) {
    if (!triple.is_array() || triple.size() != 3) {
      throw ValidationError("report pairs must be [left, right, target]");
    }
    const int left = triple[0].get<int>() - 1;
    const int right = triple[1].get<int>() - 1;
    const int target = triple[2].get<int>() - 1;
    if (left < 0 || right < 0 || left >= inst.camera_count() ||
        right >= inst.camera_count() || target < 0 || target >= inst.n()) {
      throw ValidationError("report pair index out of range");
    }
    a.pairing.pairs.push_back({left, right});
    a.target_of_pair.push_back(target);
  }
  if (!a.pairing.is_perfect(inst.camera_count())) {
    throw ValidationError("report pairs do not form a perfect pairing");
  }
  std::vector<char> target_seen(inst.n(), 0);
  for (int t : a.target_of_pair) {
    if (target_seen[t]) {
      throw ValidationError("report assigns a target twice");
    }
    target_seen[t] = 1;
  }
  a.value = evaluate(a, inst);
  return a;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace foa
