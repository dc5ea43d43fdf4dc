#include "mqrot/output.hpp"

#include <cstdio>

namespace mqrot {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string csv_cell(const ordered_json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

void write_csv(std::ostream& os, const Table& t, bool include_meta) {
    if (include_meta)
        for (const auto& [key, val] : t.meta.items())
            os << "# " << key << " = " << csv_cell(val) << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << csv_cell(row.at(t.columns[i]));
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& t, bool include_meta) {
    ordered_json doc;
    doc["meta"] = include_meta ? t.meta : ordered_json::object();
    doc["meta"]["columns"] = t.columns;
    doc["rows"] = t.rows;
    os << doc.dump(2) << "\n";
}

Table table_from_json(const ordered_json& doc) {
    Table t;
    t.meta = doc.at("meta");
    t.columns = t.meta.at("columns").get<std::vector<std::string>>();
    t.meta.erase("columns");
    for (const auto& row : doc.at("rows")) t.rows.push_back(row);
    return t;
}

}  // namespace mqrot
