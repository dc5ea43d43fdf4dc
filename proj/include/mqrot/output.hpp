#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace mqrot {

using ordered_json = nlohmann::ordered_json;

// A flat result table: ordered metadata plus uniform rows keyed by `columns`.
struct Table {
    ordered_json meta = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;
};

// Fixed 17-significant-digit representation; round-trips any double.
std::string format_double(double v);

// CSV: '#'-prefixed metadata comment lines, header row, comma-separated,
// '.' decimal, '\n' newlines.
void write_csv(std::ostream& os, const Table& t, bool include_meta);

// JSON: {"meta": {...}, "rows": [...]} with stable key order and
// shortest round-trip float formatting.
void write_json(std::ostream& os, const Table& t, bool include_meta);

Table table_from_json(const ordered_json& doc);

}  // namespace mqrot
