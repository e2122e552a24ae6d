#include "khicalc/csv.hpp"

#include <istream>
#include <sstream>

#include "khicalc/error.hpp"

namespace khicalc {

namespace {

std::vector<std::vector<std::string>> parse_records(std::istream& in)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false, any = false, row_open = false;
    char ch;
    while (in.get(ch)) {
        any = true;
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get(ch);
                    cur += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                cur += ch;
            }
            continue;
        }
        switch (ch) {
        case '"':
            if (!cur.empty())
                throw Error(Errc::schema_error, "csv: quote inside an unquoted field");
            in_quotes = true;
            row_open = true;
            break;
        case ',':
            fields.push_back(std::move(cur));
            cur.clear();
            row_open = true;
            break;
        case '\r':
            break;
        case '\n':
            if (row_open || !cur.empty()) {
                fields.push_back(std::move(cur));
                cur.clear();
                records.push_back(std::move(fields));
                fields.clear();
                row_open = false;
            }
            break;
        default:
            cur += ch;
            row_open = true;
        }
    }
    if (in_quotes)
        throw Error(Errc::schema_error, "csv: unterminated quoted field");
    if (row_open || !cur.empty()) {
        fields.push_back(std::move(cur));
        records.push_back(std::move(fields));
    }
    if (!any)
        throw Error(Errc::schema_error, "csv: empty input, header row required");
    return records;
}

long parse_long(const std::string& s, const std::string& what)
{
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(Errc::schema_error, "csv: bad integer '" + s + "' in " + what);
    }
}

} // namespace

std::size_t CsvTable::column(const std::string& name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw Error(Errc::schema_error, "csv: missing required column '" + name + "'");
}

CsvTable parse_csv(std::istream& in)
{
    auto records = parse_records(in);
    CsvTable t;
    t.header = records.front();
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != t.header.size())
            throw Error(Errc::schema_error,
                        "csv: row " + std::to_string(r) + " has " +
                            std::to_string(records[r].size()) + " fields, header has " +
                            std::to_string(t.header.size()));
        t.rows.push_back(std::move(records[r]));
    }
    return t;
}

std::map<int, long> parse_alexander_cell(const std::string& cell)
{
    std::map<int, long> coeffs;
    std::stringstream ss(cell);
    std::string item;
    bool got = false;
    while (std::getline(ss, item, ';')) {
        if (item.empty())
            continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::schema_error, "alexander cell: missing ':' in '" + item + "'");
        int e = static_cast<int>(parse_long(item.substr(0, colon), "alexander exponent"));
        long v = parse_long(item.substr(colon + 1), "alexander coefficient");
        if (coeffs.count(e))
            throw Error(Errc::schema_error, "alexander cell: duplicate exponent " + std::to_string(e));
        coeffs[e] = v;
        got = true;
    }
    if (!got)
        throw Error(Errc::schema_error, "alexander cell: empty");
    return coeffs;
}

KnotRecord knot_record_from_row(const CsvTable& t, std::size_t r)
{
    const auto& row = t.rows.at(r);
    auto cell = [&](const std::string& name) -> const std::string& {
        return row.at(t.column(name));
    };

    KnotRecord rec;
    rec.name = cell("name");
    if (rec.name.empty())
        throw Error(Errc::schema_error, "csv: empty knot name");
    if (!cell("four_ball_genus").empty())
        rec.four_ball_genus = static_cast<int>(parse_long(cell("four_ball_genus"), "four_ball_genus"));
    rec.signature = static_cast<int>(parse_long(cell("signature"), "signature"));
    rec.two_bridge = cell("two_bridge");
    rec.alexander = AlexanderPolynomial::normalized(parse_alexander_cell(cell("alexander")));
    rec.genus = rec.alexander.degree();

    auto fam = family_from_name(cell("family"));
    if (!fam)
        throw Error(Errc::schema_error, "csv: unknown family '" + cell("family") + "'");
    rec.family = *fam;

    const std::string& flag = cell("exception_flag");
    if (!flag.empty()) {
        if (flag == "composite") {
            rec.flags.composite = true;
        } else if (flag.rfind("T2:", 0) == 0) {
            rec.flags.t2_torus_n = parse_long(flag.substr(3), "T2 flag");
        } else if (flag.rfind("P-2,3:", 0) == 0) {
            rec.flags.pretzel_n = parse_long(flag.substr(6), "pretzel flag");
        } else if (flag.rfind("K3:", 0) == 0) {
            auto rest = flag.substr(3);
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw Error(Errc::schema_error, "csv: K3 flag needs two parameters");
            rec.flags.k3_qp = std::make_pair(parse_long(rest.substr(0, colon), "K3 q"),
                                             parse_long(rest.substr(colon + 1), "K3 p"));
        } else {
            throw Error(Errc::schema_error, "csv: unknown exception flag '" + flag + "'");
        }
    }
    return rec;
}

} // namespace khicalc
