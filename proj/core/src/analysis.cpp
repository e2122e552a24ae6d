#include "khicalc/analysis.hpp"

#include <json.hpp>

#include "khicalc/csv.hpp"
#include "khicalc/error.hpp"
#include "khicalc/filtered_lift.hpp"
#include "khicalc/json_io.hpp"
#include "khicalc/knot.hpp"

namespace khicalc {

namespace {

using nlohmann::ordered_json;

ordered_json alexander_json(const AlexanderPolynomial& p)
{
    ordered_json pairs = ordered_json::array();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        pairs.push_back(ordered_json::array({it->first, it->second}));
    return pairs;
}

ordered_json verdict_json(const Su2Verdict& v)
{
    ordered_json j;
    j["verdict"] = verdict_name(v.verdict);
    j["reasons"] = v.reasons;
    return j;
}

std::optional<int> nu_sharp_of(const KnotRecord& rec, const ThinProfile& thin)
{
    if (thin.case_tag == GenusOneCase::two_a_plus_one)
        return 0;
    if (rec.signature != 0 && rec.signature % 2 == 0) {
        int nu = -rec.signature / 2;
        if (nu == 1 || nu == -1)
            return nu;
    }
    return std::nullopt;
}

ordered_json analyze_row(const KnotRecord& rec)
{
    ordered_json row;
    row["name"] = rec.name;
    row["alexander"] = alexander_json(rec.alexander);
    row["alexander_str"] = rec.alexander.str();
    row["genus"] = rec.genus;
    row["signature"] = rec.signature;

    auto det = determinant_bound_check(rec.alexander, rec.genus);
    row["determinant"] = det.det;
    row["determinant_bound"] = det.bound;
    row["determinant_ok"] = det.ok;

    auto form = lspace_form_check(rec.alexander, rec.genus);
    if (form) {
        ordered_json fj;
        fj["k"] = form->k;
        fj["gaps"] = form->gaps;
        KhiProfile prof = lspace_profile(*form);
        ordered_json dims = ordered_json::array();
        for (const auto& [z, piece] : prof.pieces())
            dims.push_back(ordered_json::array({z, piece.dim}));
        fj["profile_dims"] = dims;
        fj["positive_chain"] = is_positive_chain(prof, 0);
        row["lspace_form"] = std::move(fj);
    } else {
        row["lspace_form"] = nullptr;
    }

    row["grading_shift_consistent"] = jn_consistency(1, 0, rec.genus, 2 * rec.genus + 1);

    if (rec.genus == 1) {
        ThinProfile thin = thin_profile(rec.alexander);
        ordered_json tj;
        tj["a"] = thin.a;
        tj["case"] = thin.case_tag == GenusOneCase::two_a_plus_one ? "2a+1" : "2a-1";
        tj["dims"] = thin.dims;
        tj["parities"] = thin.parities;
        row["thin_profile"] = std::move(tj);

        auto nu = nu_sharp_of(rec, thin);
        row["nu_sharp"] = nu ? ordered_json(*nu) : ordered_json(nullptr);
        if (nu) {
            std::optional<Subcase> sub;
            if (thin.case_tag == GenusOneCase::two_a_minus_one)
                sub = (*nu == 1) ? Subcase::a : Subcase::b;
            GenusOnePipelineReport rep = genus_one_pipeline(thin.a, thin.case_tag, sub);
            ordered_json pj;
            pj["dim_h_a0"] = rep.dim_h_a0;
            pj["isharp_minus3"] = rep.dim_isharp_minus3;
            pj["isharp_plus3"] = rep.dim_isharp_plus3;
            row["pipeline"] = std::move(pj);
            long at_minus3 = surgery_dim(thin.case_tag, thin.a, -3, 1, *nu);
            long at_plus3 = surgery_dim(thin.case_tag, thin.a, 3, 1, *nu);
            ordered_json sx;
            sx["-3/1"] = at_minus3;
            sx["3/1"] = at_plus3;
            row["surgery_examples"] = std::move(sx);

            // dimension self-check across the two routes
            if (static_cast<std::size_t>(at_minus3) != rep.dim_isharp_minus3 ||
                static_cast<std::size_t>(at_plus3) != rep.dim_isharp_plus3)
                throw std::logic_error("analyze: surgery formulas disagree with the pipeline");
        } else {
            row["pipeline"] = nullptr;
            row["surgery_examples"] = nullptr;
        }

        // tensoring with the one-generator profile must reproduce the dims
        KhiProfile shell(Field::rationals(), 1, 1);
        shell.set_piece(1, thin.dims[0], thin.parities[0]);
        shell.set_piece(0, thin.dims[1], thin.parities[1]);
        shell.set_piece(-1, thin.dims[2], thin.parities[2]);
        KhiProfile unknot(Field::rationals(), 0, 1);
        unknot.set_piece(0, 1, 0);
        GradedSpace sum = connected_sum_profile(shell, unknot);
        row["kunneth_identity"] = sum == shell.graded_space();
    } else {
        row["thin_profile"] = nullptr;
        row["nu_sharp"] = nullptr;
        row["pipeline"] = nullptr;
        row["surgery_examples"] = nullptr;
        row["kunneth_identity"] = nullptr;
    }

    row["verdict"] = verdict_json(su2_verdict(rec));
    return row;
}

} // namespace

AnalyzeOutcome analyze_knot_table(std::istream& csv, bool pretty)
{
    CsvTable table = parse_csv(csv);
    for (const char* col : {"name", "four_ball_genus", "signature", "two_bridge", "alexander",
                            "family", "exception_flag"})
        table.column(col); // missing columns are a table-level schema error
    ordered_json out;
    out["rows"] = ordered_json::array();
    out["errors"] = ordered_json::array();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        try {
            KnotRecord rec = knot_record_from_row(table, r);
            out["rows"].push_back(analyze_row(rec));
        } catch (const Error& e) {
            ordered_json err;
            err["row"] = r + 1; // 1-based data row
            err["error"] = e.what();
            out["errors"].push_back(std::move(err));
        }
    }
    AnalyzeOutcome o;
    o.exit_code = out["errors"].empty() ? 0 : 2;
    o.json = pretty ? out.dump(2) : out.dump();
    return o;
}

namespace {

std::pair<long, long> parse_slope(const std::string& slope)
{
    try {
        auto slash = slope.find('/');
        long u = std::stol(slope.substr(0, slash));
        long v = slash == std::string::npos ? 1 : std::stol(slope.substr(slash + 1));
        return {u, v};
    } catch (const std::exception&) {
        throw Error(Errc::bad_slope, "surgery: cannot parse slope '" + slope + "'");
    }
}

} // namespace

std::string surgery_query(std::istream& csv, const std::string& knot, const std::string& slope,
                          std::optional<int> nu_override, bool pretty)
{
    CsvTable table = parse_csv(csv);
    std::optional<KnotRecord> rec;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        KnotRecord candidate = knot_record_from_row(table, r);
        if (candidate.name == knot) {
            rec = std::move(candidate);
            break;
        }
    }
    if (!rec)
        throw Error(Errc::unknown_knot, "surgery: no row named '" + knot + "'");
    if (rec->genus != 1)
        throw Error(Errc::not_applicable, "surgery: '" + knot + "' is not a genus-one thin row");

    ThinProfile thin = thin_profile(rec->alexander);
    std::optional<int> nu = nu_override ? nu_override : nu_sharp_of(*rec, thin);
    if (!nu)
        throw Error(Errc::not_applicable,
                    "surgery: vanishing signature in the 2a-1 case needs an explicit nu_sharp");
    auto [u, v] = parse_slope(slope);
    long dim = surgery_dim(thin.case_tag, thin.a, u, v, *nu);

    ordered_json j;
    j["knot"] = knot;
    j["slope"] = std::to_string(u) + "/" + std::to_string(v);
    j["case"] = thin.case_tag == GenusOneCase::two_a_plus_one ? "2a+1" : "2a-1";
    j["a"] = thin.a;
    j["nu_sharp"] = *nu;
    if (thin.case_tag == GenusOneCase::two_a_plus_one)
        j["formula"] = "2av+|u|";
    else
        j["formula"] = (*nu == 1) ? "(2a-1)v+|u-v|" : "(2a-1)v+|u+v|";
    j["dim"] = dim;
    return pretty ? j.dump(2) : j.dump();
}

std::string bent_query(const std::string& complex_json, std::optional<int> s,
                       std::optional<long> surgery_n, std::optional<Field> field_override,
                       bool pretty)
{
    LoadedComplex lc = load_complex_json(complex_json, field_override);
    KhiProfile prof = profile_from_loaded(lc);
    ordered_json j;
    j["field"] = prof.field().name();
    if (s) {
        j["s"] = *s;
        j["dim_bent"] = build_bent(prof, *s).homology_dim();
        j["dim_dual_bent"] = build_dual_bent(prof, *s).homology_dim();
    }
    if (surgery_n) {
        SurgeryDimReport rep = large_surgery_dims(prof, *surgery_n);
        ordered_json sj;
        sj["n"] = rep.n;
        sj["s_min"] = rep.s_min;
        sj["s_max"] = rep.s_max;
        sj["classes"] = ordered_json::array();
        for (std::size_t c = 0; c < rep.class_dims.size(); ++c)
            sj["classes"].push_back(ordered_json::array({c, rep.class_dims[c]}));
        sj["total"] = rep.total;
        j["surgery"] = std::move(sj);
    }
    if (!s && !surgery_n)
        throw Error(Errc::not_applicable, "bent: need --s or --surgery");
    return pretty ? j.dump(2) : j.dump();
}

std::string ss_query(const std::string& complex_json, std::optional<Field> field_override,
                     bool pretty)
{
    LoadedComplex lc = load_complex_json(complex_json, field_override);
    FilteredComplex fc = filtered_from_loaded(lc);
    UnrolledCouple couple = UnrolledCouple::from_filtered(fc);

    ordered_json j;
    j["field"] = fc.field().name();
    j["s1"] = couple.s1();
    j["s2"] = couple.s2();
    j["total_homology_dim"] = fc.homology_dim();
    j["pages"] = ordered_json::array();
    int m = couple.s2() - couple.s1();
    for (int r = 1; r <= m + 1; ++r) {
        Page pg = couple.page(r);
        ordered_json pj;
        pj["r"] = r;
        ordered_json dims = ordered_json::array();
        for (int sidx = couple.s1(); sidx <= couple.s2(); ++sidx)
            dims.push_back(ordered_json::array({sidx, pg.dim(sidx)}));
        pj["dims"] = std::move(dims);
        j["pages"].push_back(std::move(pj));
    }
    Page einf = couple.page(m + 1);
    ordered_json ej = ordered_json::array();
    for (int sidx = couple.s1(); sidx <= couple.s2(); ++sidx)
        ej.push_back(ordered_json::array({sidx, einf.dim(sidx)}));
    j["e_infinity"] = std::move(ej);
    j["e_infinity_total"] = einf.total_dim();

    ConvergenceReport conv = couple.converge();
    ordered_json cj;
    cj["direction"] = conv.direction == ConvergenceReport::Direction::lower ? "lower" : "upper";
    cj["total"] = conv.total;
    ordered_json gj = ordered_json::array();
    for (const auto& [sidx, d] : conv.graded_dims)
        gj.push_back(ordered_json::array({sidx, d}));
    cj["graded"] = std::move(gj);
    j["convergence"] = std::move(cj);

    RoundtripReport rt = roundtrip_check(couple);
    ordered_json rj;
    rj["ok"] = rt.ok;
    rj["mismatches"] = rt.mismatches;
    j["roundtrip"] = std::move(rj);
    return pretty ? j.dump(2) : j.dump();
}

} // namespace khicalc
