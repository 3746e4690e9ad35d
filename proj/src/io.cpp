#include "liftplan/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "liftplan/trajectory.hpp"

namespace liftplan::io {

using nlohmann::ordered_json;

double q_from_areal_weight(double grams_per_cm2, double width_m) {
  const double width_cm = width_m * 100.0;
  const double grams_per_cm = grams_per_cm2 * width_cm;
  const double kg_per_m = grams_per_cm * 100.0 * 1e-3;
  return kg_per_m * kStandardGravity;
}

namespace {

Preset table_preset(std::string name, std::string label, double weight, double k, double f) {
  MaterialSpec m;
  m.length_L = kTestStripLength;
  m.weight_q = q_from_areal_weight(weight, kTestStripWidth);
  m.friction_k_covering = k;
  m.friction_f_gripper = f;
  m.label = std::move(label);
  return {std::move(name), std::move(m), weight};
}

std::vector<Preset> build_catalog() {
  std::vector<Preset> presets;
  MaterialSpec demo;
  demo.length_L = 1.0;
  demo.weight_q = 1.0;
  demo.friction_k_covering = 0.2;
  demo.friction_f_gripper = 0.0;
  demo.label = "demo strip";
  presets.push_back({"demo", demo, std::nullopt});
  presets.push_back(table_preset("1", "thin denim cotton", 0.014, 1.54, 0.50));
  presets.push_back(table_preset("2", "600-denier cordura canvas", 0.031, 1.71, 0.57));
  presets.push_back(table_preset("3", "heavyweight denim cotton", 0.036, 1.49, 0.35));
  presets.push_back(table_preset("4", "heavyweight natural denim cotton", 0.031, 1.38, 0.44));
  return presets;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Number or null for JSON; NaN means "no value".
ordered_json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

std::string csv_number(double v) { return std::isnan(v) ? std::string() : format_number(v); }

}  // namespace

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = build_catalog();
  return catalog;
}

const Preset& find_preset(std::string_view name) {
  for (const Preset& p : preset_catalog()) {
    if (p.name == name) return p;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "jsonl") return Format::jsonl;
  throw ConfigError("unknown format '" + std::string(text) + "' (expected csv or jsonl)");
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, end);
  if (out.find_first_of(".ein") == std::string::npos) out += ".0";
  return out;
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

void write_waypoints(std::ostream& os, const std::vector<Waypoint>& waypoints, Format fmt) {
  if (fmt == Format::csv) {
    os << kWaypointHeader << '\n';
    for (const Waypoint& w : waypoints) {
      os << format_number(w.z1) << ',' << format_number(w.x) << ',' << format_number(w.z) << ','
         << format_number(w.alpha) << ',' << format_number(w.quat.w()) << ','
         << format_number(w.quat.x()) << ',' << format_number(w.quat.y()) << ','
         << format_number(w.quat.z()) << '\n';
    }
    return;
  }
  for (const Waypoint& w : waypoints) {
    ordered_json j;
    j["z1"] = w.z1;
    j["x"] = w.x;
    j["z"] = w.z;
    j["alpha_rad"] = w.alpha;
    j["qw"] = w.quat.w();
    j["qx"] = w.quat.x();
    j["qy"] = w.quat.y();
    j["qz"] = w.quat.z();
    os << j.dump() << '\n';
  }
}

std::vector<Waypoint> read_waypoints(std::istream& is, Format fmt) {
  std::vector<Waypoint> out;
  std::string line;
  if (fmt == Format::csv) {
    if (!std::getline(is, line) || line != kWaypointHeader) {
      throw ConfigError("waypoint CSV: missing or unexpected header");
    }
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    double v[8];
    if (fmt == Format::csv) {
      const auto fields = split(line, ',');
      if (fields.size() != 8) throw ConfigError("waypoint CSV: expected 8 fields");
      for (std::size_t i = 0; i < 8; ++i) v[i] = parse_number(fields[i]);
    } else {
      const auto j = nlohmann::json::parse(line);
      static constexpr const char* keys[8] = {"z1", "x", "z", "alpha_rad", "qw", "qx", "qy", "qz"};
      for (std::size_t i = 0; i < 8; ++i) v[i] = j.at(keys[i]).get<double>();
    }
    Waypoint w;
    w.z1 = v[0];
    w.x = v[1];
    w.z = v[2];
    w.alpha = v[3];
    w.edge_alpha = v[3];
    w.quat = Quat(v[4], v[5], v[6], v[7]);
    out.push_back(w);
  }
  return out;
}

void write_shapes(std::ostream& os, const std::vector<MaterialShape>& shapes, Format fmt) {
  if (fmt == Format::csv) os << "z1,mode,index,x,z\n";
  for (const MaterialShape& s : shapes) {
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
      const Vec2& p = s.samples[i];
      if (fmt == Format::csv) {
        os << format_number(s.z1) << ',' << to_string(s.mode) << ',' << i << ','
           << format_number(p.x()) << ',' << format_number(p.y()) << '\n';
      } else {
        ordered_json j;
        j["z1"] = s.z1;
        j["mode"] = to_string(s.mode);
        j["index"] = i;
        j["x"] = p.x();
        j["z"] = p.y();
        os << j.dump() << '\n';
      }
    }
  }
}

void write_sweep(std::ostream& os, const SweepTable& table, Format fmt) {
  if (fmt == Format::csv) {
    os << "k,z1,x,z,alpha_rad,ok,x_min,x_max,alpha_min,alpha_max\n";
  }
  for (std::size_t ik = 0; ik < table.k_values.size(); ++ik) {
    for (std::size_t iz = 0; iz < table.heights.size(); ++iz) {
      const SweepCell& c = table.at(ik, iz);
      const SweepEnvelope& e = table.envelopes[iz];
      const double nan = std::numeric_limits<double>::quiet_NaN();
      const double x = c.ok ? c.x : nan;
      const double z = c.ok ? c.z : nan;
      const double alpha = c.ok ? c.alpha : nan;
      if (fmt == Format::csv) {
        os << format_number(c.k) << ',' << format_number(c.z1) << ',' << csv_number(x) << ','
           << csv_number(z) << ',' << csv_number(alpha) << ',' << (c.ok ? 1 : 0) << ','
           << csv_number(e.x_min) << ',' << csv_number(e.x_max) << ','
           << csv_number(e.alpha_min) << ',' << csv_number(e.alpha_max) << '\n';
      } else {
        ordered_json j;
        j["k"] = c.k;
        j["z1"] = c.z1;
        j["x"] = json_number(x);
        j["z"] = json_number(z);
        j["alpha_rad"] = json_number(alpha);
        j["ok"] = c.ok;
        if (!c.ok) j["error"] = c.error;
        j["x_min"] = json_number(e.x_min);
        j["x_max"] = json_number(e.x_max);
        j["alpha_min"] = json_number(e.alpha_min);
        j["alpha_max"] = json_number(e.alpha_max);
        os << j.dump() << '\n';
      }
    }
  }
}

void write_presets(std::ostream& os, const std::vector<Preset>& presets, Format fmt) {
  if (fmt == Format::csv) os << "name,label,L,q,k,f,table_weight_g_per_cm2\n";
  for (const Preset& p : presets) {
    const MaterialSpec& m = p.material;
    const double raw = p.table_weight.value_or(std::numeric_limits<double>::quiet_NaN());
    if (fmt == Format::csv) {
      os << p.name << ',' << m.label << ',' << format_number(m.length_L) << ','
         << format_number(m.weight_q) << ',' << format_number(m.friction_k_covering) << ','
         << format_number(m.friction_f_gripper) << ',' << csv_number(raw) << '\n';
    } else {
      ordered_json j;
      j["name"] = p.name;
      j["label"] = m.label;
      j["L"] = m.length_L;
      j["q"] = m.weight_q;
      j["k"] = m.friction_k_covering;
      j["f"] = m.friction_f_gripper;
      j["table_weight_g_per_cm2"] = json_number(raw);
      os << j.dump() << '\n';
    }
  }
}

ordered_json report_to_json(const VerificationReport& report,
                            const VerificationThresholds& thresholds, bool passed) {
  ordered_json j;
  j["pass"] = passed;
  j["worst_pos_err"] = report.max_position_error;
  j["worst_ang_err"] = report.angle_error;
  j["tension_err"] = report.tension_error;
  j["checked"] = report.checked;
  j["skipped"] = report.skipped;
  j["thresholds"] = {{"position", thresholds.position},
                     {"angle", thresholds.angle},
                     {"tension", thresholds.tension}};
  return j;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + tmp.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw ConfigError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot rename into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace liftplan::io
