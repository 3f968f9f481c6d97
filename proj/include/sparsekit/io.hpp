// Copyright 2026 The sparsekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text and image emission: CSV with '#' metadata lines, binary PGM, and flat
// key=value configuration files.

#ifndef SPARSEKIT_IO_HPP
#define SPARSEKIT_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sparsekit/ensembles.hpp"

namespace sparsekit {

// 17 significant digits, so the text re-parses to the same double.
std::string format_double(double v);
double parse_double(const std::string& text);

struct CsvTable {
  std::vector<std::pair<std::string, std::string>> meta;  // "# key=value"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_meta(std::string key, std::string value) {
    meta.emplace_back(std::move(key), std::move(value));
  }
  std::size_t column(const std::string& name) const;  // throws Parse if absent
  double number(std::size_t row, const std::string& name) const;
};

std::string to_csv(const CsvTable& t);
CsvTable parse_csv(const std::string& text);
void write_csv(const std::string& path, const CsvTable& t);
CsvTable read_csv(const std::string& path);

// Matrix CSV: metadata rows, cols, ensemble, seed, normalized; one line per row.
CsvTable matrix_table(const SensingMatrix& m);
CsvTable matrix_table(const Matrix& m);
Matrix matrix_from_table(const CsvTable& t);
void write_matrix_csv(const std::string& path, const SensingMatrix& m);
Matrix read_matrix_csv(const std::string& path);

// 8-bit binary PGM, row-major, `pixels.size() == width * height`.
void write_pgm(const std::string& path, std::size_t width, std::size_t height,
               const std::vector<std::uint8_t>& pixels,
               const std::vector<std::string>& comments = {});
struct PgmImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};
PgmImage read_pgm(const std::string& path);

// Lines "key = value"; '#' starts a comment; blank lines skipped.
std::map<std::string, std::string> parse_key_values(const std::string& text);
std::map<std::string, std::string> read_key_values(const std::string& path);

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

}  // namespace sparsekit

#endif  // SPARSEKIT_IO_HPP
