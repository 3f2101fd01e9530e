#include "clusterlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace clusterlab {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Dataset read_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("dataset csv: empty input");
  const auto header = split_csv_line(line);
  if (header.empty() || header[0] != "x0")
    throw std::invalid_argument("dataset csv: header must start with x0");
  bool labeled = header.back() == "label";
  const int d = static_cast<int>(header.size()) - (labeled ? 1 : 0);
  for (int j = 0; j < d; ++j) {
    if (header[j] != "x" + std::to_string(j))
      throw std::invalid_argument("dataset csv: bad coordinate header");
  }

  std::vector<double> coords;
  std::vector<int> labels;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != d + (labeled ? 1 : 0))
      throw std::invalid_argument("dataset csv: wrong field count at row " +
                                  std::to_string(row));
    for (int j = 0; j < d; ++j) {
      std::size_t pos = 0;
      const double v = std::stod(fields[j], &pos);
      if (pos != fields[j].size())
        throw std::invalid_argument("dataset csv: bad number at row " +
                                    std::to_string(row));
      coords.push_back(v);
    }
    if (labeled) labels.push_back(std::stoi(fields[d]));
  }
  if (labeled) return Dataset(std::move(coords), d, std::move(labels));
  return Dataset(std::move(coords), d);
}

Dataset read_dataset_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dataset_csv(in);
}

void write_dataset_csv(const Dataset& ds, std::ostream& out) {
  for (int j = 0; j < ds.dim(); ++j) {
    if (j) out << ",";
    out << "x" << j;
  }
  if (ds.has_labels()) out << ",label";
  out << "\n";
  for (int i = 0; i < ds.size(); ++i) {
    const auto p = ds.point(i);
    for (int j = 0; j < ds.dim(); ++j) {
      if (j) out << ",";
      out << format_double(p[j]);
    }
    if (ds.has_labels()) out << "," << ds.labels()[i];
    out << "\n";
  }
}

void write_dataset_csv_file(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_dataset_csv(ds, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace clusterlab
