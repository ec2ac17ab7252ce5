#include "ppr/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ppr {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_ppr_csv(const std::string& path, std::span<const double> values) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "node,ppr\n";
  for (std::size_t v = 0; v < values.size(); ++v)
    out << v << ',' << format_double(values[v]) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<double> read_ppr_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "node,ppr")
    throw std::runtime_error(path + ": missing node,ppr header");
  std::vector<double> values;
  std::uint64_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error(path + ": malformed row: " + line);
    if (std::stoull(line.substr(0, comma)) != expected)
      throw std::runtime_error(path + ": node ids must be consecutive from 0");
    values.push_back(std::stod(line.substr(comma + 1)));
    ++expected;
  }
  return values;
}

}  // namespace ppr
