#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sft {

/// Flat report: a named table plus key/value metadata. Every cell is already
/// formatted (counts as decimal strings, floats via format_double), so the
/// emitters below are purely structural and deterministic.
struct Table {
    std::string name;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

enum class ReportFormat { csv, json };

/// Header line plus one line per row; metadata is not included.
std::string emit_csv(const Table& t);

/// {"meta": {...}, "rows": [...]} with rows keyed by column name.
std::string emit_json(const Table& t);

std::string emit_report(const Table& t, ReportFormat format);

} // namespace sft
