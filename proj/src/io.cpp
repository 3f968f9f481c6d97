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

#include "sparsekit/io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sparsekit/error.hpp"

namespace sparsekit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string meta_value(const CsvTable& t, const std::string& key) {
  for (const auto& [k, v] : t.meta)
    if (k == key) return v;
  fail(ErrorCode::Parse, "missing metadata key '" + key + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) fail(ErrorCode::Parse, "empty numeric field");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) fail(ErrorCode::Parse, "not a number: '" + s + "'");
  return v;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  fail(ErrorCode::Parse, "missing column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  require(row < rows.size(), ErrorCode::InvalidArgument, "row index out of range");
  return parse_double(rows[row].at(column(name)));
}

std::string to_csv(const CsvTable& t) {
  std::ostringstream out;
  for (const auto& [k, v] : t.meta) out << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  if (!t.columns.empty()) out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos)
        t.add_meta(body, "");
      else
        t.add_meta(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
      continue;
    }
    auto cells = split(line, ',');
    if (!header_seen) {
      t.columns = std::move(cells);
      header_seen = true;
      continue;
    }
    if (cells.size() != t.columns.size())
      fail(ErrorCode::Parse, "row has " + std::to_string(cells.size()) + " fields, header has " +
                                 std::to_string(t.columns.size()));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::Io, "write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_csv(const std::string& path, const CsvTable& t) { write_text(path, to_csv(t)); }
CsvTable read_csv(const std::string& path) { return parse_csv(read_text(path)); }

CsvTable matrix_table(const Matrix& m) {
  CsvTable t;
  t.add_meta("rows", std::to_string(m.rows()));
  t.add_meta("cols", std::to_string(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) t.columns.push_back("c" + std::to_string(j));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    row.reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format_double(m(i, j)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable matrix_table(const SensingMatrix& m) {
  CsvTable t = matrix_table(m.entries());
  t.add_meta("ensemble", std::string(to_string(m.ensemble())));
  t.add_meta("seed", std::to_string(m.seed()));
  t.add_meta("normalized", m.column_normalized() ? "1" : "0");
  return t;
}

Matrix matrix_from_table(const CsvTable& t) {
  const auto rows = static_cast<Eigen::Index>(parse_double(meta_value(t, "rows")));
  const auto cols = static_cast<Eigen::Index>(parse_double(meta_value(t, "cols")));
  if (static_cast<Eigen::Index>(t.rows.size()) != rows ||
      static_cast<Eigen::Index>(t.columns.size()) != cols)
    fail(ErrorCode::Parse, "matrix CSV shape disagrees with its metadata");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = parse_double(t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

void write_matrix_csv(const std::string& path, const SensingMatrix& m) {
  write_csv(path, matrix_table(m));
}

Matrix read_matrix_csv(const std::string& path) { return matrix_from_table(read_csv(path)); }

void write_pgm(const std::string& path, std::size_t width, std::size_t height,
               const std::vector<std::uint8_t>& pixels, const std::vector<std::string>& comments) {
  require(width > 0 && height > 0, ErrorCode::InvalidArgument, "image must be non-empty");
  require(pixels.size() == width * height, ErrorCode::DimensionMismatch,
          "pixel count differs from width * height");
  std::string out = "P5\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  out += std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  write_text(path, out);
}

PgmImage read_pgm(const std::string& path) {
  const std::string data = read_text(path);
  std::size_t pos = 0;
  auto token = [&]() {
    while (pos < data.size()) {
      if (data[pos] == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(data[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
    const std::size_t start = pos;
    while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) ++pos;
    return data.substr(start, pos - start);
  };
  if (token() != "P5") fail(ErrorCode::Parse, "not a binary PGM file");
  PgmImage img;
  img.width = static_cast<std::size_t>(parse_double(token()));
  img.height = static_cast<std::size_t>(parse_double(token()));
  if (token() != "255") fail(ErrorCode::Parse, "only 8-bit PGM is supported");
  ++pos;  // single whitespace before the raster
  if (data.size() - pos != img.width * img.height)
    fail(ErrorCode::Parse, "PGM raster size mismatch");
  img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(pos), data.end());
  return img;
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || trim(line.substr(0, eq)).empty())
      fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  return parse_key_values(read_text(path));
}

}  // namespace sparsekit
