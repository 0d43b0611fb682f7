#pragma once

#include <iosfwd>
#include <string>

#include "rangeassign/core.hpp"

namespace rangeassign {

// JSON document: {"space": "line"|"plane"|"metric", "points": [[x], ...] or
// [[x, y], ...], "matrix": [[...], ...]}. Array order is arrival order.
std::string format_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

Instance read_instance_file(const std::string& path);
void write_instance_file(const Instance& instance, const std::string& path);

/// Stable hex digest of the instance contents (FNV-1a over the raw doubles).
std::string instance_digest(const Instance& instance);

}  // namespace rangeassign
