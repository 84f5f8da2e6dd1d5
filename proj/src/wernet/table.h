// Copyright 2026 The wernet Authors
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

#ifndef WERNET_TABLE_H
#define WERNET_TABLE_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wernet {

using Cell = std::variant<double, int64_t, std::string>;

/// A rectangular result table with ordered metadata.
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws std::invalid_argument if the row width differs from columns.
    void add_row(std::vector<Cell> row);
};

/// Doubles use %.12g; metadata lines are "# key: value".
std::string format_cell(const Cell &c);
void write_csv(std::ostream &out, const Table &t);
/// {"metadata": {...}, "columns": [...], "rows": [[...], ...]}.
void write_json(std::ostream &out, const Table &t);

std::string crc32_hex(const std::string &bytes);

struct ManifestOutput {
    std::string file;
    std::string crc32;
    uint64_t bytes;
};

/// Enough to re-run a command and check its outputs.
struct RunManifest {
    std::string command;
    /// Command-line arguments after the command name, without --out.
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::string>> parameters;
    uint64_t seed;
    std::string version;
    std::vector<ManifestOutput> outputs;
};

void write_manifest(std::ostream &out, const RunManifest &m);
/// Throws std::invalid_argument on malformed input.
RunManifest read_manifest(std::istream &in);

}  // namespace wernet

#endif
