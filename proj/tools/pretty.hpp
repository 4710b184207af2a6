#pragma once

#include <string>

namespace koszulkit_cli {

/// Text rendering of a JSON report: scalars as key/value lines, uniform object
/// arrays and integer matrices as tables, complexes as vertical arrow diagrams.
std::string render_pretty(const std::string& report_json);

} // namespace koszulkit_cli
