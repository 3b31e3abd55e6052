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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "sfv/matrix_io.hpp"
#include "sfv/mesh.hpp"
#include "sfv/rng.hpp"
#include "sfv/vertex.hpp"

using namespace sfv;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "sfv_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("matrix file round trip is bit exact") {
  Rng rng(41);
  Matrix m = haar_unitary(5, rng);
  auto path = temp_file("m.txt");
  write_matrix(path, m, {{"norm_scale", format_double(0.40824829046386296)},
                         {"convention", kVertexConvention}});
  MatrixFile file = read_matrix(path);
  CHECK(file.matrix.rows() == 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(file.matrix(i, j).real() == m(i, j).real());
      CHECK(file.matrix(i, j).imag() == m(i, j).imag());
    }
  CHECK(file.metadata.at("convention") == kVertexConvention);
  CHECK(std::stod(file.metadata.at("norm_scale")) == 0.40824829046386296);
}

TEST_CASE("matrix file errors") {
  CHECK_THROWS_AS(read_matrix(temp_file("missing.txt")), io_error);
  auto path = temp_file("bad.txt");
  std::ofstream(path) << "# sfv-matrix v1\n# rows 2\n# cols 2\n1,0\n";
  CHECK_THROWS_AS(read_matrix(path), io_error);
}

TEST_CASE("mesh file round trip") {
  Rng rng(43);
  MZIMesh mesh = clements_decompose(haar_unitary(6, rng));
  auto path = temp_file("mesh.txt");
  write_mesh(path, mesh);
  MZIMesh back = read_mesh(path);
  CHECK(back.dim == mesh.dim);
  REQUIRE(back.cells.size() == mesh.cells.size());
  for (std::size_t i = 0; i < mesh.cells.size(); ++i) {
    CHECK(back.cells[i].mode == mesh.cells[i].mode);
    CHECK(back.cells[i].theta == mesh.cells[i].theta);
    CHECK(back.cells[i].phi == mesh.cells[i].phi);
  }
  REQUIRE(back.output_phases.size() == mesh.output_phases.size());
  for (std::size_t i = 0; i < mesh.output_phases.size(); ++i)
    CHECK(back.output_phases[i] == mesh.output_phases[i]);
  Matrix a = clements_compose(mesh), b = clements_compose(back);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("count dataset round trip") {
  CountDataset data;
  data.metadata["seed"] = "99";
  data.metadata["noise"] = "phase_sigma=0.05";
  CountRecord r1;
  r1.input_modes = {0};
  r1.output_modes = {3};
  r1.counts = 123456;
  r1.integration_time = 60.0;
  CountRecord r2;
  r2.input_modes = {0, 1};
  r2.output_modes = {2, 5};
  r2.counts = 42;
  r2.integration_time = 60.0;
  data.records = {r1, r2};
  auto path = temp_file("counts.txt");
  write_counts(path, data);
  CountDataset back = read_counts(path);
  CHECK(back.metadata.at("seed") == "99");
  REQUIRE(back.records.size() == 2);
  CHECK(back.records[0].counts == 123456);
  CHECK(back.records[1].input_modes == std::vector<int>{0, 1});
  CHECK(back.records[1].output_modes == std::vector<int>{2, 5});
}

TEST_CASE("grid file: 2x2 grid writes header plus four rows") {
  Matrix m = gate_from_tensor(build_vertex_tensor());
  ScanGrid grid = scan_amplitudes(m, ScanSetup::all_equal(), 2);
  auto path = temp_file("grid.txt");
  write_grid(path, grid);
  std::ifstream in(path);
  std::string line;
  int rows = 0;
  REQUIRE(std::getline(in, line));
  CHECK(line == "theta,phi,re,im,abs");
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
}
