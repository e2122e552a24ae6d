#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "khicalc/knot.hpp"

namespace khicalc {

// RFC 4180 flavored CSV: comma separated, UTF-8, double-quote quoting with
// "" escapes, header row required.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const; // SchemaError when absent
};

CsvTable parse_csv(std::istream& in);

// Parses one knot table row. Columns: name, four_ball_genus, signature,
// two_bridge, alexander ("exp:coeff" pairs joined by ';'), family,
// exception_flag ("", "T2:<n>", "P-2,3:<n>", "K3:<q>:<p>", "composite").
// The Seifert genus is the degree of the normalized Alexander polynomial.
KnotRecord knot_record_from_row(const CsvTable& table, std::size_t row_index);

std::map<int, long> parse_alexander_cell(const std::string& cell);

} // namespace khicalc
