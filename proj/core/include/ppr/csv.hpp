#pragma once

#include <span>
#include <string>
#include <vector>

namespace ppr {

// 17 significant digits: enough for a double to round-trip exactly.
std::string format_double(double value);

// Result/golden file: header "node,ppr", one row per node.
void write_ppr_csv(const std::string& path, std::span<const double> values);
std::vector<double> read_ppr_csv(const std::string& path);

}  // namespace ppr
