#include "rangeassign/instance_io.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rangeassign {

using nlohmann::json;

std::string format_instance(const Instance& instance) {
  json doc;
  doc["space"] = to_string(instance.space());
  if (instance.space() == Space::Metric) {
    json rows = json::array();
    for (std::size_t i = 0; i < instance.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < instance.size(); ++j) row.push_back(instance.dist(i, j));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  } else {
    json points = json::array();
    for (const auto& p : instance.points()) {
      if (instance.space() == Space::Line) {
        points.push_back(json::array({p.x}));
      } else {
        points.push_back(json::array({p.x, p.y}));
      }
    }
    doc["points"] = std::move(points);
  }
  return doc.dump(1) + "\n";
}

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("space")) {
    throw std::invalid_argument("instance: missing field 'space'");
  }
  const Space space = parse_space(doc.at("space").get<std::string>());
  if (space == Space::Metric) {
    if (!doc.contains("matrix")) throw std::invalid_argument("instance: missing field 'matrix'");
    return Instance::metric(doc.at("matrix").get<std::vector<std::vector<double>>>());
  }
  if (!doc.contains("points")) throw std::invalid_argument("instance: missing field 'points'");
  const auto raw = doc.at("points").get<std::vector<std::vector<double>>>();
  if (space == Space::Line) {
    std::vector<double> coords;
    for (const auto& p : raw) {
      if (p.size() != 1) throw std::invalid_argument("instance: line points need 1 coordinate");
      coords.push_back(p[0]);
    }
    return Instance::line(std::move(coords));
  }
  std::vector<Point2> points;
  for (const auto& p : raw) {
    if (p.size() != 2) throw std::invalid_argument("instance: plane points need 2 coordinates");
    points.push_back({p[0], p[1]});
  }
  return Instance::plane(std::move(points));
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file '" + path + "'");
  out << format_instance(instance);
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t hash = 1469598103934665603ULL;
  const auto mix = [&hash](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      hash ^= (word >> (8 * b)) & 0xffU;
      hash *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(instance.space()));
  mix(instance.size());
  if (instance.space() == Space::Metric) {
    for (double d : instance.matrix()) mix(std::bit_cast<std::uint64_t>(d));
  } else {
    for (const auto& p : instance.points()) {
      mix(std::bit_cast<std::uint64_t>(p.x));
      mix(std::bit_cast<std::uint64_t>(p.y));
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

}  // namespace rangeassign
