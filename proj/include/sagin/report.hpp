#pragma once

#include <stdexcept>
#include <string>

#include "sagin/harness.hpp"

namespace sagin {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `users,framework,metric,mean,ci95` rows sorted by (users, framework, metric).
std::string format_csv(const SweepResult& result);
void write_csv(const SweepResult& result, const std::string& path);

/// Inverse of format_csv; throws IoError on malformed input.
SweepResult parse_csv(const std::string& text);

enum class PlotMetric { kCapacity, kEnergyEfficiency };

/// Self-contained SVG line chart: one polyline per framework with CI bars.
std::string render_svg(const SweepResult& result, PlotMetric metric);

/// Writes `<prefix>_capacity.svg` and `<prefix>_ee.svg`.
void emit_plot(const SweepResult& result, const std::string& path_prefix);

}  // namespace sagin
