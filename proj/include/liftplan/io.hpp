#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liftplan/model.hpp"
#include "liftplan/oracle.hpp"
#include "liftplan/shape.hpp"

namespace liftplan::io {

struct Preset {
  std::string name;
  MaterialSpec material;
  // Areal weight as printed in the source table [g/cm^2], when the preset
  // was derived from one.
  std::optional<double> table_weight;
};

inline constexpr double kStandardGravity = 9.80665;  // [m/s^2]
inline constexpr double kTestStripWidth = 0.05;      // [m]
inline constexpr double kTestStripLength = 0.5;      // [m]

// Weight per unit length [N/m] of a strip of the given width [m] made of a
// material with areal mass in g/cm^2.
double q_from_areal_weight(double grams_per_cm2, double width_m);

const std::vector<Preset>& preset_catalog();
const Preset& find_preset(std::string_view name);

enum class Format { csv, jsonl };
Format parse_format(std::string_view text);

// Shortest decimal that reads back to the same double; integral values get
// a trailing ".0".
std::string format_number(double value);
double parse_number(std::string_view text);

// Columns: z1, x, z, alpha_rad, qw, qx, qy, qz.
inline constexpr std::string_view kWaypointHeader = "z1,x,z,alpha_rad,qw,qx,qy,qz";

void write_waypoints(std::ostream& os, const std::vector<Waypoint>& waypoints, Format fmt);
std::vector<Waypoint> read_waypoints(std::istream& is, Format fmt);

void write_shapes(std::ostream& os, const std::vector<MaterialShape>& shapes, Format fmt);
void write_sweep(std::ostream& os, const SweepTable& table, Format fmt);
void write_presets(std::ostream& os, const std::vector<Preset>& presets, Format fmt);

nlohmann::ordered_json report_to_json(const VerificationReport& report,
                                      const VerificationThresholds& thresholds, bool passed);

// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace liftplan::io
