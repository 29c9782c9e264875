#include "pgspec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pgspec {

std::string format_full(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    double parsed = 0.0;
    std::sscanf(buf, "%lg", &parsed);
    if (parsed == x) {
        // try to shorten without losing the value
        for (int prec = 15; prec <= 16; ++prec) {
            char shorter[64];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
            std::sscanf(shorter, "%lg", &parsed);
            if (parsed == x) return shorter;
        }
    }
    return buf;
}

namespace {

std::string format_text(const Cell& cell)
{
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", std::get<double>(cell));
    return buf;
}

std::string format_csv(const Cell& cell)
{
    if (const auto* s = std::get_if<std::string>(&cell)) {
        if (s->find_first_of(",\"\n") == std::string::npos) return *s;
        std::string quoted = "\"";
        for (char c : *s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        quoted += '"';
        return quoted;
    }
    if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    return format_full(std::get<double>(cell));
}

void render_table_text(std::ostringstream& out, const Table& table)
{
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(format_text(row[c]));
            if (c < width.size()) width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << table.columns[c];
        if (c + 1 < table.columns.size())
            out << std::string(width[c] - table.columns[c].size() + 2, ' ');
    }
    out << "\n";
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << line[c];
            if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << "\n";
    }
}

std::string csv_row(const std::vector<Cell>& row)
{
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) line += ',';
        line += format_csv(row[c]);
    }
    return line;
}

} // namespace

Section& ReportDocument::add_section(const std::string& title)
{
    sections.push_back(Section{title, {}, {}});
    return sections.back();
}

std::string ReportDocument::to_text() const
{
    std::ostringstream out;
    bool first = true;
    for (const Section& section : sections) {
        if (!first) out << "\n";
        first = false;
        out << "# " << section.title << "\n";
        for (const auto& [key, value] : section.items)
            out << key << " = " << format_text(value) << "\n";
        if (!section.table.empty()) render_table_text(out, section.table);
    }
    return out.str();
}

std::string ReportDocument::to_csv() const
{
    std::ostringstream out;
    bool payload_done = false;
    for (const Section& section : sections) {
        out << "# " << section.title << "\n";
        for (const auto& [key, value] : section.items)
            out << "# " << key << " = " << format_csv(value) << "\n";
        if (section.table.empty()) continue;
        const bool commented = payload_done;
        const std::string prefix = commented ? "# " : "";
        std::vector<Cell> header;
        for (const auto& name : section.table.columns) header.emplace_back(name);
        out << prefix << csv_row(header) << "\n";
        for (const auto& row : section.table.rows) out << prefix << csv_row(row) << "\n";
        payload_done = true;
    }
    return out.str();
}

} // namespace pgspec
