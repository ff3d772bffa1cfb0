#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rcperiod/catalog.hpp"
#include "rcperiod/config.hpp"
#include "rcperiod/error.hpp"
#include "rcperiod/period.hpp"
#include "rcperiod/report.hpp"
#include "rcperiod/verify.hpp"

using namespace rcp;
using nlohmann::json;

namespace {

constexpr int exit_check = 1;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::ConfigError, path + ": cannot write");
    out << text;
}

Complex parse_s(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        j = text;
    }
    return parse_number(j, "--s");
}

int cmd_verify(const std::string& filter, const std::string& fixtures, const std::string& json_out)
{
    VerifyOptions opts;
    opts.filter = filter;
    if (!fixtures.empty())
        opts.fixture_dir = fixtures;
    const auto results = run_verification(opts);
    const CriterionResult* first_fail = nullptr;
    for (const auto& r : results) {
        std::cout << format_result(r) << '\n';
        if (!r.passed && !first_fail)
            first_fail = &r;
    }
    if (!json_out.empty())
        write_file(json_out, verification_json(results).dump(1) + "\n");
    if (first_fail) {
        std::cerr << "verify: first failing check: " << first_fail->name << ": " << first_fail->detail << '\n';
        return exit_check;
    }
    return 0;
}

int cmd_period(const std::string& config, const std::string& s_value)
{
    RunConfig c = load_config(config);
    if (!s_value.empty())
        c.samples = {parse_s(s_value)};
    if (c.samples.empty())
        throw Error(Errc::ConfigError, "$.samples: missing (or pass --s)");
    const Hypersurface X = build_hypersurface(c);
    const CurveFamily fam = build_family(c);
    const MultiPoly P = build_polynomial(c, X.nvars());
    const PeriodOptions opts = build_options(c);
    const SweepResult sw = sweep(X, P, fam, c.samples, opts);

    const std::string csv = period_csv(sw, opts.vanish_tol);
    json js = period_json(sw, opts.vanish_tol, opts.quadrature_nodes);
    js["config"] = to_json(c);
    if (c.reference_zeta) {
        const ClosedFormRef ref{zeta5(*c.reference_zeta), fam.anchor};
        const ComparisonReport cmp =
            compare_closed_form(sw, [&](Complex s) { return closed_form_g(s, ref); }, c.tolerances.comparison);
        js["comparison"] = comparison_json(cmp);
        std::cerr << "comparison: " << verdict_name(cmp.verdict) << " (max relative deviation "
                  << format_sci(cmp.max_rel_deviation) << ", tolerance " << cmp.tolerance << ")\n";
    }
    if (sw.vanishes_identically)
        std::cerr << "VANISHES_IDENTICALLY over " << sw.samples.size() << " samples\n";
    if (c.csv_out.empty())
        std::cout << csv;
    else
        write_file(c.csv_out, csv);
    if (!c.json_out.empty())
        write_file(c.json_out, js.dump(1) + "\n");
    return 0;
}

int cmd_scan(const std::string& config, int degree, unsigned threads)
{
    const RunConfig c = load_config(config);
    if (c.samples.empty())
        throw Error(Errc::ConfigError, "$.samples: missing");
    const Hypersurface X = build_hypersurface(c);
    const CurveFamily fam = build_family(c);
    const PeriodOptions opts = build_options(c);
    const ScanTable table = monomial_scan(X, fam, c.samples, degree, opts, threads);
    const std::string csv = scan_csv(table);
    if (c.csv_out.empty())
        std::cout << csv;
    else
        write_file(c.csv_out, csv);
    if (!c.json_out.empty()) {
        json js = scan_json(table, opts.vanish_tol);
        js["config"] = to_json(c);
        write_file(c.json_out, js.dump(1) + "\n");
    }
    int nonvanishing = 0;
    for (const auto& r : table.rows)
        nonvanishing += r.vanishes ? 0 : 1;
    std::cerr << table.rows.size() << " monomials, " << nonvanishing << " non-vanishing\n";
    return 0;
}

int cmd_catalog(bool as_json)
{
    const auto entries = catalog_entries();
    if (as_json) {
        json arr = json::array();
        for (const auto& e : entries)
            arr.push_back({{"id", e.id}, {"kind", e.kind}, {"description", e.description}});
        std::cout << arr.dump(1) << '\n';
        return 0;
    }
    for (const auto& e : entries)
        std::cout << e.kind << '\t' << e.id << '\t' << e.description << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Periods of first-order families of rational curves on hypersurfaces"};
    app.require_subcommand(1);

    std::string filter, fixtures, verify_json;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--filter", filter, "criterion name or number");
    verify->add_option("--fixtures", fixtures, "golden fixture directory");
    verify->add_option("--json", verify_json, "write the report bundle as JSON");

    std::string config, s_value;
    auto* period = app.add_subcommand("period", "evaluate the period over the configured samples");
    period->add_option("--config", config, "run configuration (JSON)")->required();
    period->add_option("--s", s_value, "single sample: number, [re, im] or \"p/q\"");

    int degree = 5;
    unsigned threads = 0;
    auto* scan = app.add_subcommand("scan", "periods of every monomial of a degree");
    scan->add_option("--config", config, "run configuration (JSON)")->required();
    scan->add_option("--degree", degree, "monomial degree")->required();
    scan->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

    bool catalog_json = false;
    auto* catalog = app.add_subcommand("catalog", "list catalog identifiers");
    catalog->add_flag("--json", catalog_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config;
    }

    try {
        if (*verify)
            return cmd_verify(filter, fixtures, verify_json);
        if (*period)
            return cmd_period(config, s_value);
        if (*scan)
            return cmd_scan(config, degree, threads);
        return cmd_catalog(catalog_json);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
        switch (e.code()) {
        case Errc::DegreeError:
        case Errc::IndexError:
        case Errc::ConfigError:
        case Errc::ParseError:
        case Errc::InputError:
            return exit_config;
        case Errc::NonConvergence:
            return exit_numeric;
        default:
            return exit_check;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_check;
    }
}
