#include "lendist/format.hpp"

#include <algorithm>
#include <sstream>

namespace lendist {

std::string render_table(const Table& t) {
    std::vector<std::size_t> widths(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    };
    widen(t.header);
    for (const auto& row : t.rows) widen(row);

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << "  ";
            if (c == 0) {
                os << row[c];
                if (c + 1 < row.size()) os << std::string(widths[c] - row[c].size(), ' ');
            } else {
                os << std::string(widths[c] - row[c].size(), ' ') << row[c];
            }
        }
        os << '\n';
    };
    emit(t.header);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << ',';
            os << row[c];
        }
        os << '\n';
    };
    emit(t.header);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        if (first) {
            t.header = std::move(cells);
            first = false;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

}  // namespace lendist
