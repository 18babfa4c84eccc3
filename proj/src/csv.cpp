#include "lke/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lke {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string grid_csv(const Grid2D& grid, const std::string& x_name,
                     const std::string& y_name,
                     const std::string& value_name) {
  std::ostringstream os;
  os << x_name << "," << y_name << "," << value_name << "\n";
  for (std::size_t ix = 0; ix < grid.x_axis.count(); ++ix) {
    for (std::size_t iy = 0; iy < grid.y_axis.count(); ++iy) {
      os << format_value(grid.x_axis.at(ix)) << ","
         << format_value(grid.y_axis.at(iy)) << ","
         << format_value(grid.at(ix, iy)) << "\n";
    }
  }
  return os.str();
}

std::string pairs_csv(const std::vector<std::pair<double, double>>& rows,
                      const std::string& key_name,
                      const std::string& value_name) {
  std::ostringstream os;
  os << key_name << "," << value_name << "\n";
  for (const auto& [key, value] : rows) {
    os << format_value(key) << "," << format_value(value) << "\n";
  }
  return os.str();
}

std::string trace3_csv(const std::vector<TraceOut3Sample>& rows) {
  std::ostringstream os;
  os << "xx1,xx2,d\n";
  for (const auto& r : rows) {
    os << format_value(r.xx1) << "," << format_value(r.xx2) << ","
       << format_value(r.density) << "\n";
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (content.empty() || content.find('\n') == content.size() - 1) {
    throw IoError("refusing to write empty output: " + path);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out.good()) throw IoError("write failed: " + path);
}

}  // namespace lke
