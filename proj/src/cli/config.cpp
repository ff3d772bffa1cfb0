#include "rcperiod/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "rcperiod/error.hpp"
#include "rcperiod/expression.hpp"

namespace rcp {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw Error(Errc::ConfigError, path + ": " + msg);
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys)
{
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            fail(path + "." + it.key(), "unknown field");
}

double parse_real(const json& j, const std::string& path)
{
    if (j.is_number())
        return j.get<double>();
    if (!j.is_string())
        fail(path, "expected a number or a \"p/q\" string");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    const auto parse_part = [&](std::string_view part) {
        double v = 0.0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (res.ec != std::errc{} || res.ptr != part.data() + part.size() || part.empty())
            fail(path, "cannot read '" + s + "' as a rational number");
        return v;
    };
    if (slash == std::string::npos)
        return parse_part(s);
    const double p = parse_part(std::string_view(s).substr(0, slash));
    const double q = parse_part(std::string_view(s).substr(slash + 1));
    if (q == 0.0)
        fail(path, "zero denominator in '" + s + "'");
    return p / q;
}

int parse_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

std::string parse_string(const json& j, const std::string& path)
{
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

std::vector<Complex> parse_samples(const json& j, const std::string& path)
{
    std::vector<Complex> out;
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            out.push_back(parse_number(j[i], path + "[" + std::to_string(i) + "]"));
    } else if (j.is_object()) {
        const std::string kind = parse_string(j.value("path", json()), path + ".path");
        if (!j.contains("count"))
            fail(path + ".count", "missing");
        const int n = parse_int(j["count"], path + ".count");
        if (n < 1)
            fail(path + ".count", "must be positive");
        if (kind == "segment") {
            only_keys(j, path, {"path", "from", "to", "count"});
            const Complex a = parse_number(j.value("from", json()), path + ".from");
            const Complex b = parse_number(j.value("to", json()), path + ".to");
            for (int k = 0; k < n; ++k)
                out.push_back(n == 1 ? a : a + (b - a) * (static_cast<double>(k) / (n - 1)));
        } else if (kind == "circle") {
            only_keys(j, path, {"path", "center", "radius", "phase", "count"});
            const Complex c = j.contains("center") ? parse_number(j["center"], path + ".center") : Complex{};
            const double r = parse_real(j.value("radius", json()), path + ".radius");
            const double ph = j.contains("phase") ? parse_real(j["phase"], path + ".phase") : 0.0;
            for (int k = 0; k < n; ++k)
                out.push_back(c + std::polar(r, ph + 2.0 * std::numbers::pi * k / n));
        } else {
            fail(path + ".path", "expected \"segment\" or \"circle\"");
        }
    } else {
        fail(path, "expected a list of numbers or a path descriptor");
    }
    if (out.empty())
        fail(path, "no samples");
    return out;
}

} // namespace

Complex parse_number(const json& j, const std::string& path)
{
    if (j.is_array()) {
        if (j.size() != 2)
            fail(path, "complex numbers are written [re, im]");
        return {parse_real(j[0], path + "[0]"), parse_real(j[1], path + "[1]")};
    }
    return parse_real(j, path);
}

json number_json(Complex c)
{
    return json::array({c.real(), c.imag()});
}

RunConfig parse_config(const json& j)
{
    if (!j.is_object())
        fail("$", "config must be an object");
    only_keys(j, "$", {"hypersurface", "family", "polynomial", "samples", "tolerances", "sign_convention", "collisions",
                       "reference", "output"});
    RunConfig c;

    if (!j.contains("hypersurface"))
        fail("$.hypersurface", "missing");
    const json& h = j["hypersurface"];
    if (h.is_string()) {
        c.hypersurface.id = h.get<std::string>();
    } else if (h.is_object()) {
        only_keys(h, "$.hypersurface", {"nvars", "terms"});
        c.hypersurface.nvars = parse_int(h.value("nvars", json()), "$.hypersurface.nvars");
        const json& terms = h.value("terms", json());
        if (!terms.is_array() || terms.empty())
            fail("$.hypersurface.terms", "expected a nonempty list");
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string p = "$.hypersurface.terms[" + std::to_string(i) + "]";
            if (!terms[i].is_object())
                fail(p, "expected {\"monomial\": [...], \"coeff\": ...}");
            only_keys(terms[i], p, {"monomial", "coeff"});
            const json& m = terms[i].value("monomial", json());
            if (!m.is_array() || static_cast<int>(m.size()) != c.hypersurface.nvars)
                fail(p + ".monomial", "expected " + std::to_string(c.hypersurface.nvars) + " exponents");
            Exponent e;
            for (std::size_t k = 0; k < m.size(); ++k) {
                const int v = parse_int(m[k], p + ".monomial[" + std::to_string(k) + "]");
                if (v < 0)
                    fail(p + ".monomial", "negative exponent");
                e.push_back(v);
            }
            c.hypersurface.terms.emplace_back(e, parse_number(terms[i].value("coeff", json()), p + ".coeff"));
        }
    } else {
        fail("$.hypersurface", "expected a catalog id or an explicit term list");
    }

    if (!j.contains("family"))
        fail("$.family", "missing");
    const json& f = j["family"];
    if (f.is_string()) {
        c.family.id = f.get<std::string>();
    } else if (f.is_object()) {
        only_keys(f, "$.family", {"coordinates", "degree", "zeta", "anchor"});
        const json& co = f.value("coordinates", json());
        if (!co.is_array() || co.empty())
            fail("$.family.coordinates", "expected a nonempty list of expressions");
        for (std::size_t i = 0; i < co.size(); ++i) {
            const std::string p = "$.family.coordinates[" + std::to_string(i) + "]";
            const std::string text = parse_string(co[i], p);
            try {
                c.family.coordinates.push_back(Expr::parse(text).to_string());
            } catch (const Error& e) {
                fail(p, e.what());
            }
        }
        if (f.contains("degree"))
            c.family.degree = parse_int(f["degree"], "$.family.degree");
        if (f.contains("zeta"))
            c.family.zeta = parse_number(f["zeta"], "$.family.zeta");
        if (f.contains("anchor"))
            c.family.anchor = parse_number(f["anchor"], "$.family.anchor");
    } else {
        fail("$.family", "expected a catalog id or an object with coordinates");
    }

    c.polynomial = parse_string(j.value("polynomial", json()), "$.polynomial");
    try {
        c.polynomial = Expr::parse(c.polynomial).to_string();
    } catch (const Error& e) {
        fail("$.polynomial", e.what());
    }

    if (j.contains("samples"))
        c.samples = parse_samples(j["samples"], "$.samples");

    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        if (!t.is_object())
            fail("$.tolerances", "expected an object");
        only_keys(t, "$.tolerances", {"vanish", "comparison", "quadrature_nodes"});
        if (t.contains("vanish"))
            c.tolerances.vanish = parse_real(t["vanish"], "$.tolerances.vanish");
        if (t.contains("comparison"))
            c.tolerances.comparison = parse_real(t["comparison"], "$.tolerances.comparison");
        if (t.contains("quadrature_nodes"))
            c.tolerances.quadrature_nodes = parse_int(t["quadrature_nodes"], "$.tolerances.quadrature_nodes");
        if (!(c.tolerances.vanish > 0.0) || !(c.tolerances.comparison > 0.0))
            fail("$.tolerances", "tolerances must be positive");
        if (c.tolerances.quadrature_nodes < 8)
            fail("$.tolerances.quadrature_nodes", "at least 8 nodes");
    }

    if (j.contains("sign_convention")) {
        const std::string s = parse_string(j["sign_convention"], "$.sign_convention");
        if (s == "cocycle")
            c.sign = SignConvention::Cocycle;
        else if (s == "displayed")
            c.sign = SignConvention::Displayed;
        else
            fail("$.sign_convention", "expected \"cocycle\" or \"displayed\"");
    }
    if (j.contains("collisions")) {
        const std::string s = parse_string(j["collisions"], "$.collisions");
        if (s == "include")
            c.collisions = CollisionPolicy::Include;
        else if (s == "error")
            c.collisions = CollisionPolicy::Error;
        else
            fail("$.collisions", "expected \"include\" or \"error\"");
    }
    if (j.contains("reference")) {
        const json& r = j["reference"];
        if (!r.is_object())
            fail("$.reference", "expected {\"zeta_index\": k}");
        only_keys(r, "$.reference", {"zeta_index"});
        const int k = parse_int(r.value("zeta_index", json()), "$.reference.zeta_index");
        if (k < 0 || k > 4)
            fail("$.reference.zeta_index", "must be in 0..4");
        c.reference_zeta = k;
    }
    if (j.contains("output")) {
        const json& o = j["output"];
        if (!o.is_object())
            fail("$.output", "expected an object");
        only_keys(o, "$.output", {"csv", "json"});
        if (o.contains("csv"))
            c.csv_out = parse_string(o["csv"], "$.output.csv");
        if (o.contains("json"))
            c.json_out = parse_string(o["json"], "$.output.json");
    }
    return c;
}

RunConfig load_config(const std::string& file)
{
    std::ifstream in(file);
    if (!in)
        throw Error(Errc::ConfigError, file + ": cannot open");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::ConfigError, file + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(const RunConfig& c)
{
    json j;
    if (!c.hypersurface.id.empty()) {
        j["hypersurface"] = c.hypersurface.id;
    } else {
        json terms = json::array();
        for (const auto& [e, v] : c.hypersurface.terms)
            terms.push_back({{"monomial", e}, {"coeff", number_json(v)}});
        j["hypersurface"] = {{"nvars", c.hypersurface.nvars}, {"terms", terms}};
    }
    if (!c.family.id.empty()) {
        j["family"] = c.family.id;
    } else {
        j["family"] = {{"coordinates", c.family.coordinates},
                       {"degree", c.family.degree},
                       {"zeta", number_json(c.family.zeta)},
                       {"anchor", number_json(c.family.anchor)}};
    }
    j["polynomial"] = c.polynomial;
    if (!c.samples.empty()) {
        json s = json::array();
        for (const auto& v : c.samples)
            s.push_back(number_json(v));
        j["samples"] = s;
    }
    j["tolerances"] = {{"vanish", c.tolerances.vanish},
                       {"comparison", c.tolerances.comparison},
                       {"quadrature_nodes", c.tolerances.quadrature_nodes}};
    j["sign_convention"] = c.sign == SignConvention::Cocycle ? "cocycle" : "displayed";
    j["collisions"] = c.collisions == CollisionPolicy::Include ? "include" : "error";
    if (c.reference_zeta)
        j["reference"] = {{"zeta_index", *c.reference_zeta}};
    if (!c.csv_out.empty() || !c.json_out.empty()) {
        json o = json::object();
        if (!c.csv_out.empty())
            o["csv"] = c.csv_out;
        if (!c.json_out.empty())
            o["json"] = c.json_out;
        j["output"] = o;
    }
    return j;
}

Hypersurface build_hypersurface(const RunConfig& c)
{
    if (!c.hypersurface.id.empty()) {
        try {
            return resolve_hypersurface(c.hypersurface.id);
        } catch (const Error& e) {
            fail("$.hypersurface", e.what());
        }
    }
    MultiPoly F(c.hypersurface.nvars);
    for (const auto& [e, v] : c.hypersurface.terms)
        F.add_term(e, v);
    try {
        return Hypersurface(F, "explicit");
    } catch (const Error& e) {
        fail("$.hypersurface", e.what());
    }
}

CurveFamily build_family(const RunConfig& c)
{
    if (!c.family.id.empty()) {
        try {
            return resolve_family(c.family.id);
        } catch (const Error& e) {
            fail("$.family", e.what());
        }
    }
    std::vector<Expr> coords;
    for (const auto& text : c.family.coordinates)
        coords.push_back(Expr::parse(text));
    return expression_family("explicit", coords, c.family.degree, c.family.zeta, c.family.anchor);
}

MultiPoly build_polynomial(const RunConfig& c, int nvars)
{
    Env consts;
    consts.zeta = c.family.zeta;
    try {
        return Expr::parse(c.polynomial).to_multipoly(nvars, consts);
    } catch (const Error& e) {
        fail("$.polynomial", e.what());
    }
}

PeriodOptions build_options(const RunConfig& c)
{
    PeriodOptions o;
    o.sign = c.sign;
    o.collisions = c.collisions;
    o.quadrature_nodes = c.tolerances.quadrature_nodes;
    o.vanish_tol = c.tolerances.vanish;
    return o;
}

} // namespace rcp
