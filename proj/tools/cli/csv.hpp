// Copyright 2026 The strongcouple Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace strongcouple::cli {

/// Number formatting for every emitted table: shortest round-trip of the
/// value rounded to 12 significant digits, independent of the C locale.
std::string format_number(double value);

/// Comma-separated table with a header row and LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::initializer_list<double> values);
    void add_row(std::span<const double> values);
    void add_row(std::vector<std::string> cells);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

struct EmittedFile {
    std::string name;
    std::size_t rows = 0;  // data rows for CSV, lines for scripts
    std::string sha256;
};

/// Writes `contents` under `dir` and returns its manifest entry.
EmittedFile write_file(const std::filesystem::path& dir, const std::string& name, const std::string& contents,
                       std::size_t rows);

}  // namespace strongcouple::cli
