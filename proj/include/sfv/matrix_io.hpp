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

#ifndef SFV_MATRIX_IO_HPP
#define SFV_MATRIX_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sfv/counts.hpp"
#include "sfv/mesh.hpp"
#include "sfv/types.hpp"
#include "sfv/vertex.hpp"

namespace sfv {

/// Shared matrix layout: '#'-prefixed "key value" metadata lines, then one
/// row per line with entries written as "re,im" pairs separated by single
/// spaces. All numbers carry 17 significant digits, so doubles round-trip
/// exactly.
struct MatrixFile {
  Matrix matrix;
  std::map<std::string, std::string> metadata;
};

void write_matrix(const std::filesystem::path& path, const Matrix& m,
                  const std::map<std::string, std::string>& metadata = {});
MatrixFile read_matrix(const std::filesystem::path& path);

/// Mesh layout: metadata, "dim N", one "m,theta,phi" line per cell in
/// application order, then "phases" and one output phase per line.
void write_mesh(const std::filesystem::path& path, const MZIMesh& mesh);
MZIMesh read_mesh(const std::filesystem::path& path);

/// Count dataset: metadata header (seed, noise model), then one record per
/// line as "input_modes;output_pattern;counts;seconds" with modes
/// comma-separated.
struct CountDataset {
  std::map<std::string, std::string> metadata;
  std::vector<CountRecord> records;
};

void write_counts(const std::filesystem::path& path, const CountDataset& data);
CountDataset read_counts(const std::filesystem::path& path);

/// Grid layout: "theta,phi,re,im,abs" header then one comma-separated row per
/// grid point, theta-major.
void write_grid(const std::filesystem::path& path, const ScanGrid& grid);

/// 17-significant-digit formatting used by every writer.
std::string format_double(double v);

}  // namespace sfv

#endif
