// Copyright 2026 The sfv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sfv/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sfv {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open for reading: " + path.string());
  return in;
}

// Splits leading '#' metadata lines; leaves `line` holding the first data line.
std::map<std::string, std::string> read_metadata(std::ifstream& in,
                                                 std::string& line) {
  std::map<std::string, std::string> meta;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') break;
    std::istringstream ss(line.substr(1));
    std::string key;
    ss >> key;
    std::string value;
    std::getline(ss, value);
    if (!value.empty() && value[0] == ' ') value.erase(0, 1);
    if (!key.empty()) meta[key] = value;
  }
  return meta;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw io_error("malformed number '" + s + "' in " + context);
  }
}

}  // namespace

void write_matrix(const std::filesystem::path& path, const Matrix& m,
                  const std::map<std::string, std::string>& metadata) {
  std::ofstream out = open_out(path);
  out << "# sfv-matrix v1\n";
  out << "# rows " << m.rows() << "\n";
  out << "# cols " << m.cols() << "\n";
  for (const auto& [k, v] : metadata) out << "# " << k << " " << v << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j).real()) << ','
          << format_double(m(i, j).imag());
    }
    out << '\n';
  }
}

MatrixFile read_matrix(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  MatrixFile file;
  file.metadata = read_metadata(in, line);
  auto rows_it = file.metadata.find("rows");
  auto cols_it = file.metadata.find("cols");
  if (rows_it == file.metadata.end() || cols_it == file.metadata.end())
    throw io_error("matrix file missing rows/cols header: " + path.string());
  int rows = std::stoi(rows_it->second);
  int cols = std::stoi(cols_it->second);
  file.matrix.resize(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (i > 0 && !std::getline(in, line))
      throw io_error("matrix file truncated: " + path.string());
    auto entries = split(line, ' ');
    if (static_cast<int>(entries.size()) != cols)
      throw io_error("matrix row has wrong entry count: " + path.string());
    for (int j = 0; j < cols; ++j) {
      auto pair = split(entries[j], ',');
      if (pair.size() != 2)
        throw io_error("matrix entry is not re,im: " + path.string());
      file.matrix(i, j) = cxd(parse_double(pair[0], path.string()),
                              parse_double(pair[1], path.string()));
    }
  }
  return file;
}

void write_mesh(const std::filesystem::path& path, const MZIMesh& mesh) {
  std::ofstream out = open_out(path);
  out << "# sfv-mesh v1\n";
  out << "dim " << mesh.dim << "\n";
  for (const auto& cell : mesh.cells)
    out << cell.mode << ',' << format_double(cell.theta) << ','
        << format_double(cell.phi) << '\n';
  out << "phases\n";
  for (double p : mesh.output_phases) out << format_double(p) << '\n';
}

MZIMesh read_mesh(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  read_metadata(in, line);
  MZIMesh mesh;
  if (line.rfind("dim ", 0) != 0)
    throw io_error("mesh file missing dim line: " + path.string());
  mesh.dim = std::stoi(line.substr(4));
  bool in_phases = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "phases") {
      in_phases = true;
      continue;
    }
    if (!in_phases) {
      auto parts = split(line, ',');
      if (parts.size() != 3)
        throw io_error("mesh cell line malformed: " + path.string());
      MZICell cell;
      cell.mode = std::stoi(parts[0]);
      cell.theta = parse_double(parts[1], path.string());
      cell.phi = parse_double(parts[2], path.string());
      mesh.cells.push_back(cell);
    } else {
      mesh.output_phases.push_back(parse_double(line, path.string()));
    }
  }
  return mesh;
}

void write_counts(const std::filesystem::path& path, const CountDataset& data) {
  std::ofstream out = open_out(path);
  out << "# sfv-counts v1\n";
  for (const auto& [k, v] : data.metadata) out << "# " << k << " " << v << "\n";
  for (const auto& rec : data.records) {
    for (std::size_t i = 0; i < rec.input_modes.size(); ++i)
      out << (i ? "," : "") << rec.input_modes[i];
    out << ';';
    for (std::size_t i = 0; i < rec.output_modes.size(); ++i)
      out << (i ? "," : "") << rec.output_modes[i];
    out << ';' << rec.counts << ';' << format_double(rec.integration_time)
        << '\n';
  }
}

CountDataset read_counts(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  CountDataset data;
  data.metadata = read_metadata(in, line);
  auto parse_record = [&](const std::string& text) {
    auto fields = split(text, ';');
    if (fields.size() != 4)
      throw io_error("count record malformed: " + path.string());
    CountRecord rec;
    for (const auto& s : split(fields[0], ','))
      if (!s.empty()) rec.input_modes.push_back(std::stoi(s));
    for (const auto& s : split(fields[1], ','))
      if (!s.empty()) rec.output_modes.push_back(std::stoi(s));
    rec.counts = std::stoull(fields[2]);
    rec.integration_time = parse_double(fields[3], path.string());
    data.records.push_back(rec);
  };
  if (!line.empty() && line[0] != '#') parse_record(line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    parse_record(line);
  }
  return data;
}

void write_grid(const std::filesystem::path& path, const ScanGrid& grid) {
  std::ofstream out = open_out(path);
  out << "theta,phi,re,im,abs\n";
  for (int i = 0; i < grid.resolution; ++i) {
    for (int j = 0; j < grid.resolution; ++j) {
      cxd v = grid.value(i, j);
      out << format_double(grid.thetas[i]) << ',' << format_double(grid.phis[j])
          << ',' << format_double(v.real()) << ',' << format_double(v.imag())
          << ',' << format_double(std::abs(v)) << '\n';
    }
  }
}

}  // namespace sfv
