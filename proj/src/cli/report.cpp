#include "rcperiod/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rcp {

using nlohmann::json;

namespace {

json cjson(Complex c)
{
    return json::array({c.real(), c.imag()});
}

json finite_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

} // namespace

std::string format_sci(double v)
{
    if (v == 0.0)
        v = 0.0; // drop the sign of -0.0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    std::string s(buf);
    for (auto& ch : s)
        if (ch == ',')
            ch = '.';
    return s;
}

std::string period_csv(const SweepResult& sw, double vanish_tol)
{
    std::ostringstream out;
    out << "s_re,s_im,total_re,total_im,abs,vanishes,scale,backend_max_disagreement,dual_max,collisions,skipped_pairs\n";
    for (const auto& r : sw.samples) {
        const auto& d = r.diagnostics;
        out << format_sci(r.s.real()) << ',' << format_sci(r.s.imag()) << ',' << format_sci(r.total.real()) << ','
            << format_sci(r.total.imag()) << ',' << format_sci(std::abs(r.total)) << ','
            << (r.vanishes(vanish_tol) ? "VANISHES" : "") << ',' << format_sci(r.scale()) << ','
            << format_sci(d.backend_max_disagreement) << ',' << format_sci(d.dual_max) << ',' << d.collisions << ','
            << d.skipped_pairs << '\n';
    }
    return out.str();
}

json period_json(const SweepResult& sw, double vanish_tol, int quadrature_nodes)
{
    json samples = json::array();
    for (const auto& r : sw.samples) {
        json pairs = json::array();
        for (const auto& p : r.pairs) {
            json sites = json::array();
            for (const auto& s : p.sites)
                sites.push_back({{"location", s.site.location ? cjson(*s.site.location) : json("inf")},
                                 {"order", s.site.order},
                                 {"residue", cjson(s.site.residue)},
                                 {"quadrature", cjson(s.quadrature)},
                                 {"disagreement", s.disagreement},
                                 {"collision", s.collision}});
            json pj = {{"pair", {p.j0, p.j1}},
                       {"value", cjson(p.value)},
                       {"partner_sum", cjson(p.partner_sum)},
                       {"dual_check", p.dual_check},
                       {"numerator_rel", p.numerator_rel},
                       {"skipped", p.skipped},
                       {"sites", sites}};
            if (!p.note.empty())
                pj["note"] = p.note;
            pairs.push_back(pj);
        }
        const auto& d = r.diagnostics;
        samples.push_back({{"s", cjson(r.s)},
                           {"total", cjson(r.total)},
                           {"abs", std::abs(r.total)},
                           {"scale", r.scale()},
                           {"vanishes", {{"value", r.vanishes(vanish_tol)}, {"tolerance", vanish_tol}}},
                           {"diagnostics",
                            {{"min_pole_separation", finite_or_null(d.min_pole_separation)},
                             {"backend_max_disagreement", {{"value", d.backend_max_disagreement}, {"tolerance", 1e-8}}},
                             {"dual_max", {{"value", d.dual_max}, {"tolerance", 1e-8}}},
                             {"numerator_rel_max", d.numerator_rel_max},
                             {"collisions", d.collisions},
                             {"skipped_pairs", d.skipped_pairs},
                             {"quadrature_nodes", quadrature_nodes}}},
                           {"pairs", pairs}});
    }
    return {{"family", sw.family},
            {"polynomial", sw.polynomial},
            {"vanishes_identically", {{"value", sw.vanishes_identically}, {"tolerance", vanish_tol}}},
            {"samples", samples}};
}

std::string scan_csv(const ScanTable& table)
{
    std::ostringstream out;
    out << "monomial";
    for (std::size_t k = 0; k < table.samples.size(); ++k)
        out << ",abs_" << k << ",phase_" << k;
    out << ",vanishes\n";
    for (const auto& row : table.rows) {
        out << monomial_string(row.monomial);
        for (const auto& v : row.values)
            out << ',' << format_sci(std::abs(v)) << ',' << format_sci(v == 0.0 ? 0.0 : std::arg(v));
        out << ',' << (row.vanishes ? "VANISHES" : "") << '\n';
    }
    return out.str();
}

json scan_json(const ScanTable& table, double vanish_tol)
{
    json rows = json::array();
    for (const auto& row : table.rows) {
        json vals = json::array();
        for (const auto& v : row.values)
            vals.push_back(cjson(v));
        rows.push_back({{"monomial", monomial_string(row.monomial)},
                        {"exponent", row.monomial},
                        {"values", vals},
                        {"vanishes", row.vanishes}});
    }
    json samples = json::array();
    for (const auto& s : table.samples)
        samples.push_back(cjson(s));
    return {{"family", table.family}, {"samples", samples}, {"vanish_tolerance", vanish_tol}, {"rows", rows}};
}

json comparison_json(const ComparisonReport& c)
{
    json ratios = json::array();
    for (const auto& r : c.ratios)
        ratios.push_back(cjson(r));
    return {{"ratios", ratios},
            {"constant", cjson(c.constant)},
            {"max_rel_deviation", finite_or_null(c.max_rel_deviation)},
            {"tolerance", c.tolerance},
            {"verdict", verdict_name(c.verdict)}};
}

} // namespace rcp
