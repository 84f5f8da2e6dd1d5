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

#include "wernet/table.h"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <boost/crc.hpp>
#include <json.hpp>

namespace wernet {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table::add_row: row width does not match columns");
    }
    rows.push_back(std::move(row));
}

std::string format_cell(const Cell &c) {
    if (const double *d = std::get_if<double>(&c)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", *d);
        return buf;
    }
    if (const int64_t *i = std::get_if<int64_t>(&c)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(c);
}

void write_csv(std::ostream &out, const Table &t) {
    for (const auto &[key, value] : t.metadata) {
        out << "# " << key << ": " << value << '\n';
    }
    for (size_t k = 0; k < t.columns.size(); k++) {
        out << (k ? "," : "") << t.columns[k];
    }
    out << '\n';
    for (const auto &row : t.rows) {
        for (size_t k = 0; k < row.size(); k++) {
            out << (k ? "," : "") << format_cell(row[k]);
        }
        out << '\n';
    }
}

void write_json(std::ostream &out, const Table &t) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[key, value] : t.metadata) {
        meta[key] = value;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cell &c : row) {
            std::visit([&](const auto &v) { r.push_back(v); }, c);
        }
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json doc;
    doc["metadata"] = std::move(meta);
    doc["columns"] = t.columns;
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

std::string crc32_hex(const std::string &bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%08x", crc.checksum());
    return buf;
}

void write_manifest(std::ostream &out, const RunManifest &m) {
    nlohmann::ordered_json doc;
    doc["command"] = m.command;
    doc["args"] = m.args;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto &[key, value] : m.parameters) {
        params[key] = value;
    }
    doc["parameters"] = std::move(params);
    doc["seed"] = m.seed;
    doc["version"] = m.version;
    nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
    for (const ManifestOutput &o : m.outputs) {
        outputs.push_back({{"file", o.file}, {"crc32", o.crc32}, {"bytes", o.bytes}});
    }
    doc["outputs"] = std::move(outputs);
    out << doc.dump(2) << '\n';
}

RunManifest read_manifest(std::istream &in) {
    RunManifest m;
    try {
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
        m.command = doc.at("command").get<std::string>();
        m.args = doc.at("args").get<std::vector<std::string>>();
        for (const auto &[key, value] : doc.at("parameters").items()) {
            m.parameters.emplace_back(key, value.get<std::string>());
        }
        m.seed = doc.at("seed").get<uint64_t>();
        m.version = doc.at("version").get<std::string>();
        for (const auto &o : doc.at("outputs")) {
            m.outputs.push_back(
                {o.at("file").get<std::string>(), o.at("crc32").get<std::string>(), o.at("bytes").get<uint64_t>()});
        }
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("read_manifest: ") + ex.what());
    }
    return m;
}

}  // namespace wernet
