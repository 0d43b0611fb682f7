#include "rangeassign/lp_export.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "rangeassign/set_system.hpp"

namespace rangeassign {

namespace {

std::string number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

struct Column {
  CoverSet set;
  std::string name;
};

std::vector<Column> primal_columns(const Instance& instance) {
  std::vector<Column> columns;
  for (std::size_t i = 0; i + 1 < instance.size(); ++i) {
    const auto radii = candidate_ranges(instance, i);
    for (std::size_t k = 0; k < radii.size(); ++k) {
      columns.push_back({{i, radii[k]}, "x_" + std::to_string(i) + "_" + std::to_string(k)});
    }
  }
  return columns;
}

// LP files wrap long rows; each term goes on its own continuation line.
void write_sum(std::ostream& out, const std::vector<std::pair<double, std::string>>& terms) {
  if (terms.empty()) out << " 0";
  for (std::size_t t = 0; t < terms.size(); ++t) {
    out << (t == 0 ? " " : "\n   + ");
    if (terms[t].first != 1.0) out << number(terms[t].first) << ' ';
    out << terms[t].second;
  }
}

}  // namespace

void write_lp(std::ostream& out, const Instance& instance, double alpha, LpForm form) {
  require_alpha(alpha);
  const auto columns = primal_columns(instance);
  const std::size_t n = instance.size();
  out << "\\ broadcast range assignment, n = " << n << ", alpha = " << number(alpha) << '\n';

  if (form == LpForm::Primal) {
    out << "Minimize\n obj:";
    std::vector<std::pair<double, std::string>> objective;
    for (const auto& c : columns) objective.push_back({std::pow(c.set.radius, alpha), c.name});
    write_sum(out, objective);
    out << "\nSubject To\n";
    for (std::size_t j = 1; j < n; ++j) {
      std::vector<std::pair<double, std::string>> row;
      for (const auto& c : columns) {
        if (set_contains(instance, c.set, j)) row.push_back({1.0, c.name});
      }
      out << " cover_" << j << ':';
      write_sum(out, row);
      out << " >= 1\n";
    }
    out << "Bounds\n";
    for (const auto& c : columns) out << ' ' << c.name << " >= 0\n";
  } else {
    out << "Maximize\n obj:";
    std::vector<std::pair<double, std::string>> objective;
    for (std::size_t j = 1; j < n; ++j) objective.push_back({1.0, "y_" + std::to_string(j)});
    write_sum(out, objective);
    out << "\nSubject To\n";
    for (const auto& c : columns) {
      std::vector<std::pair<double, std::string>> row;
      for (std::size_t j = c.set.center + 1; j < n; ++j) {
        if (set_contains(instance, c.set, j)) row.push_back({1.0, "y_" + std::to_string(j)});
      }
      out << " pack_" << c.name.substr(2) << ':';
      write_sum(out, row);
      out << " <= " << number(std::pow(c.set.radius, alpha)) << '\n';
    }
    out << "Bounds\n";
    for (std::size_t j = 1; j < n; ++j) out << " y_" << j << " >= 0\n";
  }
  out << "End\n";
}

}  // namespace rangeassign
