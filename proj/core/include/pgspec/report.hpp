#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pgspec {

/// One report cell; doubles are rendered full-precision in CSV mode.
using Cell = std::variant<std::string, double, long long>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool empty() const { return columns.empty(); }
};

struct Section {
    std::string title;
    std::vector<std::pair<std::string, Cell>> items;
    Table table;
};

/// Structured multi-section report, rendered either as aligned text or as
/// CSV. In CSV mode the first table is the payload (plain header + rows);
/// everything else is emitted as '#' comment lines so the stream stays a
/// single machine-readable CSV document.
struct ReportDocument {
    std::vector<Section> sections;

    Section& add_section(const std::string& title);
    std::string to_text() const;
    std::string to_csv() const;
};

/// Shortest decimal form that parses back to the same double.
std::string format_full(double x);

} // namespace pgspec
