#include "sft/report.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace sft {

namespace {

// RFC-style quoting; edge ids may carry commas (2-block ids like "(a,b)").
void append_csv_field(std::string& out, const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        out += field;
        return;
    }
    out += '"';
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
}

} // namespace

std::string emit_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        append_csv_field(out, t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::logic_error("emit_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_csv_field(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const Table& t) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    meta["report"] = t.name;
    for (const auto& [key, value] : t.meta) meta[key] = value;
    doc["meta"] = std::move(meta);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::logic_error("emit_json: row width does not match header");
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

std::string emit_report(const Table& t, ReportFormat format) {
    return format == ReportFormat::csv ? emit_csv(t) : emit_json(t);
}

} // namespace sft
