#pragma once

#include <string>
#include <vector>

#include "mnm/table_io.hpp"

namespace mnm {

/// Standalone SVG 1.1 scatter of P(k) against k (or ln P against ln k).
/// Each marker carries its plotted data coordinates in data-x / data-y.
std::string render_scatter_svg(const std::vector<TableRow>& rows, bool loglog);

}  // namespace mnm
