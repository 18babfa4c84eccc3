#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lke/grid.hpp"
#include "lke/kernel.hpp"

namespace lke {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All writers emit UTF-8 CSV with 12-significant-digit values and rows in
// ascending axis order; identical inputs give byte-identical files.
std::string format_value(double v);

std::string grid_csv(const Grid2D& grid, const std::string& x_name = "x",
                     const std::string& y_name = "y",
                     const std::string& value_name = "value");

std::string pairs_csv(const std::vector<std::pair<double, double>>& rows,
                      const std::string& key_name,
                      const std::string& value_name);

std::string trace3_csv(const std::vector<TraceOut3Sample>& rows);

// Refuses to write empty content; I/O failures carry the path.
void write_file(const std::string& path, const std::string& content);

}  // namespace lke
