#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "foa/report.hpp"

namespace foa {

enum class Profile { UniformCameras, GeometricGaps };

struct GenerateOptions {
  int n = 1;
  std::uint64_t seed = 0;
  Profile profile = Profile::UniformCameras;
  double thales_margin = 1.5;  // must be > 1 to guarantee angle validity
};

// Seeded random instance.  Cameras are drawn per profile, sorted, and
// nudged apart if rounding ever collides two of them; target depths are
// margin * circumradius * U(1,2), which puts every target strictly outside
// the outer-camera circle.
Instance generate_instance(const GenerateOptions& opt);

std::string profile_name(Profile p);
Profile profile_from_name(const std::string& name);
std::string objective_name(Objective o);
Objective objective_from_name(const std::string& name);

// Instance file schema: {"version": "foa-instance-1", "cameras": [...],
// "targets": [[x, y], ...]} plus an optional "meta" echo of generator
// settings.  Loading rejects odd camera counts, duplicate cameras and
// non-finite coordinates (ValidationError); cameras are sorted on load.
nlohmann::json instance_to_json(const Instance& inst,
                                const std::optional<GenerateOptions>& meta);
Instance instance_from_json(const nlohmann::json& j);
void save_instance(const Instance& inst, const std::string& path,
                   const std::optional<GenerateOptions>& meta);
Instance load_instance(const std::string& path);

// Report schema: camera and target indices are 1-based, timing lives in
// its own subobject so the rest of the document is reproducible
// byte-for-byte.
nlohmann::json report_to_json(const SolveReport& report,
                              const nlohmann::json& config_echo);
// The deterministic part of a report document (timing stripped), dumped.
std::string report_payload(const nlohmann::json& report_json);
// Re-reads the pairs of a report against an instance.
Assignment assignment_from_report(const nlohmann::json& report_json,
                                  const Instance& inst);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace foa
