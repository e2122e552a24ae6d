// Batch front end: ingest knot CSVs and chain-complex JSON fixtures, run the
// analyses, emit JSON reports.
//
// Exit codes: 0 success, 1 I/O failure, 2 partial data failure, 3 schema
// violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "khicalc/analysis.hpp"
#include "khicalc/error.hpp"

namespace {

using khicalc::Errc;
using khicalc::Error;
using khicalc::Field;

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case Errc::io_error:
        return 1;
    case Errc::schema_error:
        return 3;
    default:
        return 2; // data-level failure
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::io_error, "cannot write '" + path + "'");
    out << text << "\n";
}

Field parse_field(const std::string& spec)
{
    if (spec == "rational" || spec.empty())
        return Field::rationals();
    if (spec.rfind("prime:", 0) == 0) {
        try {
            return Field::prime(static_cast<std::uint32_t>(std::stoul(spec.substr(6))));
        } catch (const std::exception& e) {
            throw Error(Errc::schema_error, std::string("bad --field value: ") + e.what());
        }
    }
    throw Error(Errc::schema_error, "bad --field value '" + spec + "' (rational | prime:<p>)");
}

// --field beats KHICALC_FIELD beats the fixture's own "field" entry
std::optional<Field> field_override(const std::string& flag_spec)
{
    if (!flag_spec.empty())
        return parse_field(flag_spec);
    const char* env = std::getenv("KHICALC_FIELD");
    if (env && *env)
        return parse_field(env);
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"computational toolkit for exact-couple spectral sequences, bent complexes and "
                 "knot surgery dimensions"};
    app.require_subcommand(1);

    std::string output;
    std::string field_spec;
    bool pretty = false;
    app.add_option("--output", output, "write the report to this file instead of stdout");
    app.add_option("--field", field_spec, "coefficient field: rational | prime:<p>");
    app.add_flag("--json-pretty", pretty, "indent the JSON output");

    auto* analyze = app.add_subcommand("analyze", "per-row analysis of a knot CSV table");
    std::string analyze_csv_path;
    analyze->add_option("csv", analyze_csv_path, "knot table")->required();

    auto* surgery = app.add_subcommand("surgery", "closed-form surgery dimension for one knot");
    std::string surgery_csv_path, surgery_knot, surgery_slope;
    std::optional<int> nu_override;
    surgery->add_option("csv", surgery_csv_path, "knot table")->required();
    surgery->add_option("--knot", surgery_knot, "row name")->required();
    surgery->add_option("--slope", surgery_slope, "surgery slope u/v")->required();
    surgery->add_option("--nu-sharp", nu_override,
                        "override the concordance invariant when the signature vanishes");

    auto* bent = app.add_subcommand("bent", "bent-complex homology of a profile fixture");
    std::string bent_json_path;
    std::optional<int> bent_s;
    std::optional<long> bent_n;
    bent->add_option("json", bent_json_path, "chain-complex fixture")->required();
    bent->add_option("--s", bent_s, "single grading-class parameter s");
    bent->add_option("--surgery", bent_n, "large-surgery parameter n");

    auto* ss = app.add_subcommand("ss", "spectral sequence of a filtered complex fixture");
    std::string ss_json_path;
    ss->add_option("json", ss_json_path, "filtered chain-complex fixture")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<Field> field = field_override(field_spec);
        if (analyze->parsed()) {
            std::ifstream in(analyze_csv_path);
            if (!in)
                throw Error(Errc::io_error, "cannot open '" + analyze_csv_path + "'");
            auto outcome = khicalc::analyze_knot_table(in, pretty);
            write_output(output, outcome.json);
            return outcome.exit_code;
        }
        if (surgery->parsed()) {
            std::ifstream in(surgery_csv_path);
            if (!in)
                throw Error(Errc::io_error, "cannot open '" + surgery_csv_path + "'");
            write_output(output,
                         khicalc::surgery_query(in, surgery_knot, surgery_slope, nu_override, pretty));
            return 0;
        }
        if (bent->parsed()) {
            write_output(output, khicalc::bent_query(read_file(bent_json_path), bent_s, bent_n,
                                                     field, pretty));
            return 0;
        }
        if (ss->parsed()) {
            write_output(output, khicalc::ss_query(read_file(ss_json_path), field, pretty));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
