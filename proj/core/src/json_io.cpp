#include "khicalc/json_io.hpp"

#include <json.hpp>

#include "khicalc/error.hpp"

namespace khicalc {

namespace {

using nlohmann::ordered_json;

ordered_json parse_json(const std::string& text)
{
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(Errc::schema_error, "json: parse failure");
    return j;
}

Field field_from_json(const ordered_json& j, std::optional<Field> override_field)
{
    if (override_field)
        return *override_field;
    if (!j.contains("field"))
        return Field::rationals();
    std::string name = j.at("field").get<std::string>();
    if (name == "rational")
        return Field::rationals();
    if (name.rfind("prime:", 0) == 0)
        return Field::prime(static_cast<std::uint32_t>(std::stoul(name.substr(6))));
    throw Error(Errc::schema_error, "json: unknown field '" + name + "'");
}

Scalar entry_from_json(Field f, const ordered_json& e)
{
    if (e.is_string())
        return f.parse(e.get<std::string>());
    if (e.is_number_integer())
        return f.integer(e.get<long>());
    throw Error(Errc::schema_error, "json: matrix entries must be strings or integers");
}

Matrix matrix_from_json(Field f, const ordered_json& m)
{
    if (!m.is_array())
        throw Error(Errc::schema_error, "json: matrix must be an array of rows");
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m.at(0).size();
    Matrix out(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!m.at(i).is_array() || m.at(i).size() != cols)
            throw Error(Errc::schema_error, "json: ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            out.at(i, j) = entry_from_json(f, m.at(i).at(j));
    }
    return out;
}

PieceKey block_key(const GradedSpace& space, const std::string& key)
{
    std::string zs = key;
    std::optional<int> parity;
    auto colon = key.find(':');
    if (colon != std::string::npos) {
        zs = key.substr(0, colon);
        parity = std::stoi(key.substr(colon + 1));
    }
    int z;
    try {
        z = std::stoi(zs);
    } catch (const std::exception&) {
        throw Error(Errc::schema_error, "json: bad block key '" + key + "'");
    }
    if (parity)
        return {z, *parity};
    bool p0 = space.piece_dim(z, 0) > 0, p1 = space.piece_dim(z, 1) > 0;
    if (p0 && p1)
        throw Error(Errc::schema_error,
                    "json: block key '" + key + "' is ambiguous, use \"z:parity\"");
    if (!p0 && !p1)
        throw Error(Errc::schema_error, "json: block key '" + key + "' hits no piece");
    return {z, p0 ? 0 : 1};
}

} // namespace

LoadedComplex load_complex_json(const std::string& text, std::optional<Field> field_override)
{
    ordered_json j = parse_json(text);
    LoadedComplex lc;
    try {
        lc.field = field_from_json(j, field_override);
        lc.q = j.value("q", 1u);
        if (lc.q == 0)
            throw Error(Errc::schema_error, "json: q must be positive");
        if (j.contains("genus"))
            lc.genus = j.at("genus").get<int>();

        if (!j.contains("gradings") || !j.at("gradings").is_array())
            throw Error(Errc::schema_error, "json: 'gradings' array required");
        for (const auto& g : j.at("gradings")) {
            int z = g.at("z").get<int>();
            int parity = g.value("parity", 0);
            std::size_t dim = g.at("dim").get<std::size_t>();
            std::vector<std::string> labels;
            if (g.contains("labels"))
                labels = g.at("labels").get<std::vector<std::string>>();
            if (lc.space.piece_dim(z, parity) > 0)
                throw Error(Errc::schema_error, "json: duplicate grading entry");
            lc.space.add_piece(z, parity, dim, std::move(labels));
            lc.levels[{z, parity}] = g.value("level", z);
        }

        const ordered_json maps = j.value("maps", ordered_json::array());
        for (const auto& m : maps) {
            std::string name = m.at("name").get<std::string>();
            int zs = m.at("z_shift").get<int>();
            int ps = m.value("parity_shift", 1);
            GradedMap gm(lc.space, lc.space, zs, ps, lc.field);
            const ordered_json blocks = m.value("blocks", ordered_json::object());
            for (const auto& [key, block] : blocks.items()) {
                PieceKey from = block_key(lc.space, key);
                try {
                    gm.set_block(from, matrix_from_json(lc.field, block));
                } catch (const Error& e) {
                    if (e.code() == Errc::shape_mismatch)
                        throw Error(Errc::schema_error, std::string("json: ") + e.what());
                    throw;
                }
            }
            lc.maps.push_back({std::move(name), std::move(gm)});
        }
    } catch (const ordered_json::exception& e) {
        throw Error(Errc::schema_error, std::string("json: ") + e.what());
    }
    return lc;
}

KhiProfile profile_from_loaded(const LoadedComplex& lc)
{
    int max_abs = 0;
    for (const auto& [k, p] : lc.space.pieces()) {
        if (lc.space.piece_dim(k.z, 1 - k.parity) > 0)
            throw Error(Errc::schema_error,
                        "profile: both parities present at grading " + std::to_string(k.z));
        max_abs = std::max(max_abs, std::abs(k.z));
    }
    KhiProfile p(lc.field, lc.genus.value_or(max_abs), lc.q);
    for (const auto& [k, piece] : lc.space.pieces())
        p.set_piece(k.z, piece.dim, k.parity, piece.labels);

    bool saw_plus = false, saw_minus = false;
    for (const auto& nm : lc.maps) {
        bool plus = nm.name == "d_plus";
        bool minus = nm.name == "d_minus";
        if (!plus && !minus)
            throw Error(Errc::schema_error, "profile: unexpected map '" + nm.name + "'");
        saw_plus = saw_plus || plus;
        saw_minus = saw_minus || minus;
        for (const auto& [k, piece] : lc.space.pieces()) {
            Matrix b = nm.map.block(k);
            if (b.rows() == 0 || b.is_zero())
                continue;
            int to_z = k.z + nm.map.z_shift();
            try {
                if (plus)
                    p.set_dplus_block(k.z, to_z, std::move(b));
                else
                    p.set_dminus_block(k.z, to_z, std::move(b));
            } catch (const Error&) {
                throw Error(Errc::schema_error,
                            "profile: " + nm.name + " block with illegal shift from grading " +
                                std::to_string(k.z));
            }
        }
    }
    if (!saw_plus || !saw_minus)
        throw Error(Errc::schema_error, "profile: maps d_plus and d_minus are both required");
    try {
        p.validate();
    } catch (const Error& e) {
        throw Error(Errc::schema_error, std::string("profile: ") + e.what());
    }
    return p;
}

FilteredComplex filtered_from_loaded(const LoadedComplex& lc)
{
    std::size_t n = lc.space.total_dim();
    Matrix d(lc.field, n, n);
    for (const auto& nm : lc.maps)
        d = d + nm.map.total();
    std::vector<int> levels(n, 0);
    for (const auto& [k, piece] : lc.space.pieces()) {
        std::size_t off = lc.space.offset(k);
        int lvl = lc.levels.count(k) ? lc.levels.at(k) : k.z;
        for (std::size_t i = 0; i < piece.dim; ++i)
            levels[off + i] = lvl;
    }
    try {
        return FilteredComplex(std::move(d), std::move(levels));
    } catch (const std::invalid_argument& e) {
        throw Error(Errc::schema_error, std::string("filtered complex: ") + e.what());
    }
}

std::string profile_to_json(const KhiProfile& p, bool pretty)
{
    ordered_json j;
    j["field"] = p.field().name();
    j["q"] = p.q();
    j["genus"] = p.genus();
    j["gradings"] = ordered_json::array();
    for (const auto& [z, piece] : p.pieces()) {
        ordered_json g;
        g["z"] = z;
        g["parity"] = piece.parity;
        g["dim"] = piece.dim;
        if (!piece.labels.empty())
            g["labels"] = piece.labels;
        j["gradings"].push_back(std::move(g));
    }
    auto emit = [&](const char* name, const std::map<std::pair<int, int>, Matrix>& blocks) {
        // group blocks of one differential by their shift
        std::map<int, ordered_json> by_shift;
        for (const auto& [ft, b] : blocks) {
            if (b.is_zero())
                continue;
            int shift = ft.second - ft.first;
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < b.rows(); ++i) {
                ordered_json row = ordered_json::array();
                for (std::size_t jj = 0; jj < b.cols(); ++jj)
                    row.push_back(b.at(i, jj).str());
                rows.push_back(std::move(row));
            }
            by_shift[shift][std::to_string(ft.first)] = std::move(rows);
        }
        for (auto& [shift, blocks_json] : by_shift) {
            ordered_json m;
            m["name"] = name;
            m["z_shift"] = shift;
            m["parity_shift"] = 1;
            m["blocks"] = std::move(blocks_json);
            j["maps"].push_back(std::move(m));
        }
    };
    j["maps"] = ordered_json::array();
    emit("d_plus", p.dplus_blocks());
    emit("d_minus", p.dminus_blocks());
    return pretty ? j.dump(2) : j.dump();
}

UnrolledCouple couple_from_json(const std::string& text, std::optional<Field> field_override)
{
    ordered_json j = parse_json(text);
    try {
        Field f = field_from_json(j, field_override);
        int s1 = j.at("s1").get<int>();
        int s2 = j.at("s2").get<int>();
        auto a_dims = j.at("a_dims").get<std::vector<std::size_t>>();
        auto e_dims = j.at("e_dims").get<std::vector<std::size_t>>();
        // degenerate shapes like 0 x n cannot be spelled as nested arrays;
        // coerce empty inputs to the expected shape when it is degenerate
        auto mat_list = [&](const char* key, auto&& expected) {
            std::vector<Matrix> ms;
            std::size_t idx = 0;
            for (const auto& m : j.at(key)) {
                Matrix parsed = matrix_from_json(f, m);
                auto [r, c] = expected(idx++);
                if (parsed.rows() * parsed.cols() == 0 && r * c == 0)
                    parsed = Matrix(f, r, c);
                ms.push_back(std::move(parsed));
            }
            return ms;
        };
        auto a_at = [&](int s) { return a_dims.at(static_cast<std::size_t>(s - (s1 - 1))); };
        auto e_at = [&](int s) { return e_dims.at(static_cast<std::size_t>(s - s1)); };
        auto i_shape = [&](std::size_t n) {
            int s = s1 - 1 + static_cast<int>(n);
            return std::pair<std::size_t, std::size_t>(a_at(s), a_at(s + 1));
        };
        auto j_shape = [&](std::size_t n) {
            int s = s1 + static_cast<int>(n);
            return std::pair<std::size_t, std::size_t>(e_at(s), a_at(s));
        };
        auto k_shape = [&](std::size_t n) {
            int s = s1 + static_cast<int>(n);
            return std::pair<std::size_t, std::size_t>(a_at(s + 1), e_at(s));
        };
        return UnrolledCouple(s1, s2, f, a_dims, e_dims, mat_list("i", i_shape),
                              mat_list("j", j_shape), mat_list("k", k_shape));
    } catch (const ordered_json::exception& e) {
        throw Error(Errc::schema_error, std::string("json couple: ") + e.what());
    }
}

} // namespace khicalc
