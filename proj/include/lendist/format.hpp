#pragma once

#include <string>
#include <vector>

namespace lendist {

/// Rectangular text output: a header plus string-valued rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Aligned text rendering: first column left-aligned, the rest right-aligned.
std::string render_table(const Table& t);

/// CSV rendering: header row, comma separators, LF line endings, no quoting
/// (cells never contain commas or newlines).
std::string render_csv(const Table& t);

/// Inverse of render_csv for round-trip checks and golden-file parsing.
Table parse_csv(const std::string& text);

}  // namespace lendist
