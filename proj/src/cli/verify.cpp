#include "rcperiod/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "rcperiod/catalog.hpp"
#include "rcperiod/checks.hpp"
#include "rcperiod/error.hpp"
#include "rcperiod/expression.hpp"
#include "rcperiod/griffiths.hpp"
#include "rcperiod/period.hpp"
#include "rcperiod/report.hpp"

namespace rcp {

using nlohmann::json;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double unit(std::mt19937_64& g)
{
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

Complex random_complex(std::mt19937_64& g, double radius)
{
    return {radius * (2.0 * unit(g) - 1.0), radius * (2.0 * unit(g) - 1.0)};
}

const MultiPoly& example_polynomial()
{
    static const MultiPoly P = MultiPoly::monomial({0, 3, 2, 0, 0});
    return P;
}

std::vector<Complex> regression_samples()
{
    std::vector<Complex> out;
    for (int k = 0; k < 8; ++k)
        out.push_back(std::polar(0.3 * (k + 1) / 8.0, std::numbers::pi * k / 4.0));
    return out;
}

json load_fixture(const std::string& dir, const std::string& name)
{
    const std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ConfigError, "fixture " + path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::ConfigError, "fixture " + path + ": " + e.what());
    }
}

// typed access that names the fixture on failure
struct FixtureReader {
    std::string path;
    const json& root;

    const json& at(const json& j, const std::string& key) const
    {
        if (!j.is_object() || !j.contains(key))
            throw Error(Errc::ConfigError, "fixture " + path + ": missing field '" + key + "'");
        return j[key];
    }
    double real(const json& j, const std::string& key) const
    {
        const json& v = at(j, key);
        if (!v.is_number())
            throw Error(Errc::ConfigError, "fixture " + path + ": field '" + key + "' is not a number");
        return v.get<double>();
    }
    Complex complex(const json& j, const std::string& key) const
    {
        const json& v = at(j, key);
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw Error(Errc::ConfigError, "fixture " + path + ": field '" + key + "' is not [re, im]");
        return {v[0].get<double>(), v[1].get<double>()};
    }
    std::string string(const json& j, const std::string& key) const
    {
        const json& v = at(j, key);
        if (!v.is_string())
            throw Error(Errc::ConfigError, "fixture " + path + ": field '" + key + "' is not a string");
        return v.get<std::string>();
    }
    const json& array(const json& j, const std::string& key) const
    {
        const json& v = at(j, key);
        if (!v.is_array() || v.empty())
            throw Error(Errc::ConfigError, "fixture " + path + ": field '" + key + "' is not a nonempty list");
        return v;
    }
};

Outcome check_contraction()
{
    long checked = 0, bad = 0;
    for (int m = 2; m <= 5; ++m) {
        const int n = m + 2;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> J;
            for (int k = 0; k < n; ++k)
                if (mask & (1 << k))
                    J.push_back(k);
            if (J.size() > 4)
                continue;
            const auto a = contraction_sign(J, m);
            const auto b = contract_bruteforce(J, m);
            ++checked;
            if (a.sign != b.sign || a.complement != b.complement)
                ++bad;
        }
    }
    return {bad == 0, std::to_string(checked) + " index lists, " + std::to_string(bad) + " mismatches (exact)"};
}

Outcome check_residue()
{
    std::mt19937_64 g(20240601);
    double worst_gap = 0.0, worst_sum = 0.0;
    int cases = 0, pole_mismatch = 0;
    while (cases < 500) {
        // poles separated by at least 1e-2, total degree <= 8
        const int npoles = 1 + static_cast<int>(unit(g) * 4.0);
        std::vector<Complex> poles;
        std::vector<int> mult;
        int deg = 0;
        while (static_cast<int>(poles.size()) < npoles) {
            const Complex p = random_complex(g, 1.5);
            bool ok = true;
            for (const auto& q : poles)
                ok = ok && std::abs(p - q) >= 1e-2;
            if (!ok)
                continue;
            const int k = 1 + static_cast<int>(unit(g) * 3.0);
            if (deg + k > 8)
                break;
            poles.push_back(p);
            mult.push_back(k);
            deg += k;
        }
        if (poles.empty())
            continue;
        std::vector<Complex> roots;
        for (std::size_t i = 0; i < poles.size(); ++i)
            for (int k = 0; k < mult[i]; ++k)
                roots.push_back(poles[i]);
        const UniPoly den = UniPoly::from_roots(roots, random_complex(g, 1.0) + Complex(1.0, 0.0));
        const int ndeg = static_cast<int>(unit(g) * 9.0);
        std::vector<Complex> nc;
        for (int k = 0; k <= ndeg; ++k)
            nc.push_back(random_complex(g, 1.0));
        const RationalFunction f(UniPoly(nc), den);
        ++cases;

        const auto found = finite_poles(f);
        if (found.size() != poles.size())
            ++pole_mismatch;
        std::vector<Complex> locs;
        for (const auto& p : found)
            locs.push_back(*p.location);
        Complex total = residue_at_infinity(f);
        double scale = std::max(1.0, std::abs(total));
        for (std::size_t i = 0; i < found.size(); ++i) {
            std::vector<Complex> others;
            for (std::size_t k = 0; k < locs.size(); ++k)
                if (k != i)
                    others.push_back(locs[k]);
            const double r = quadrature_radius(locs[i], others);
            const auto q = residue_quadrature([&f](Complex t) { return f(t); }, locs[i], r, others);
            const Complex a = found[i].residue;
            const double denom = std::max(std::abs(a), q.magnitude);
            if (denom > 0.0)
                worst_gap = std::max(worst_gap, std::abs(a - q.value) / denom);
            total += a;
            scale = std::max(scale, std::abs(a));
        }
        worst_sum = std::max(worst_sum, std::abs(total) / scale);
    }
    const bool ok = worst_gap < 1e-8 && worst_sum < 1e-8 && pole_mismatch == 0;
    return {ok, std::to_string(cases) + " functions; max backend gap " + num(worst_gap) + " (tol 1e-8); max |sum incl. inf|/scale "
                    + num(worst_sum) + " (tol 1e-8); pole count mismatches " + std::to_string(pole_mismatch)};
}

Outcome check_geometry()
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const CurveFamily corrected = paper_line_slice(1, SliceMode::Corrected);
    const CurveFamily literal = paper_line_slice(1, SliceMode::PaperLiteral);
    double cont = 0.0, tang = 0.0, lit = std::numeric_limits<double>::infinity();
    for (const auto& s : standard_samples()) {
        const CurveJet jet = corrected(s);
        cont = std::max(cont, containment_residual(X, jet));
        tang = std::max(tang, tangency_residual(X, jet));
        lit = std::min(lit, containment_residual(X, literal(s)));
    }
    return {cont < 1e-10 && tang < 1e-10 && lit > 0.1,
            "corrected containment " + num(cont) + " tangency " + num(tang) + " (tol 1e-10); literal containment min "
                + num(lit) + " (must exceed 0.1)"};
}

Outcome check_nullity()
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const MultiPoly& P = example_polynomial();
    double worst_num = 0.0, worst_period = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const CurveFamily fam = mobius_null_family(seed);
        for (const auto& s : standard_samples()) {
            const CurveJet jet = fam(s);
            for (int j0 = 0; j0 < 5; ++j0)
                for (int j1 = j0 + 1; j1 < 5; ++j1) {
                    const PairIntegrand in = pair_integrand(X, P, jet, j0, j1);
                    if (in.degenerate || in.numerator_scale == 0.0)
                        continue;
                    worst_num = std::max(worst_num, in.numerator.scale() / in.numerator_scale);
                }
            worst_period = std::max(worst_period, std::abs(period_at_jet(X, P, jet).total));
        }
    }
    return {worst_num < 1e-10 && worst_period < 1e-9,
            "5 seeded PSL2 paths x 5 samples: max numerator coeff/scale " + num(worst_num) + " (tol 1e-10); max |period| "
                + num(worst_period) + " (tol 1e-9)"};
}

Outcome check_invariance()
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const CurveFamily fam = paper_line_slice(1, SliceMode::Corrected);
    std::mt19937_64 g(77);
    MobiusMap A{random_complex(g, 1.0), random_complex(g, 1.0), random_complex(g, 1.0), random_complex(g, 1.0)};
    const CurveFamily moved = mobius_reparam(fam, A);
    double worst = 0.0;
    for (const auto& s : regression_samples()) {
        const Complex a = period_at(X, example_polynomial(), fam, s).total;
        const Complex b = period_at(X, example_polynomial(), moved, s).total;
        worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    }
    return {worst < 1e-8, "8 samples, max relative change " + num(worst) + " (tol 1e-8)"};
}

Outcome check_linearity()
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const CurveFamily fam = paper_line_slice(1, SliceMode::Corrected);
    const auto monos = monomials_of_degree(5, 5);
    std::mt19937_64 g(4242);
    double worst = 0.0;
    int trials = 0, nonzero_trials = 0;
    const Complex ca = 2.0, cb = Complex(0.0, -3.0);
    std::vector<PreparedJet> jets;
    for (const auto& s : standard_samples())
        jets.push_back(prepare_jet(X, fam(s)));
    // most monomials give identically zero periods here; keep drawing until
    // five pairs with a nonzero period have been exercised
    while (nonzero_trials < 5 && trials < 200) {
        const auto& e1 = monos[static_cast<std::size_t>(unit(g) * monos.size())];
        const auto& e2 = monos[static_cast<std::size_t>(unit(g) * monos.size())];
        const MultiPoly P1 = MultiPoly::monomial(e1), P2 = MultiPoly::monomial(e2);
        const MultiPoly P = ca * P1 + cb * P2;
        ++trials;
        bool any = false;
        for (const auto& jet : jets) {
            const Complex v = evaluate_period(X, jet, P).total;
            const Complex v1 = evaluate_period(X, jet, P1).total;
            const Complex v2 = evaluate_period(X, jet, P2).total;
            const double scale = std::abs(ca * v1) + std::abs(cb * v2);
            if (scale == 0.0) {
                worst = std::max(worst, std::abs(v));
                continue;
            }
            any = true;
            worst = std::max(worst, std::abs(v - (ca * v1 + cb * v2)) / scale);
        }
        nonzero_trials += any ? 1 : 0;
    }
    return {worst < 1e-9 && nonzero_trials == 5,
            std::to_string(trials) + " seeded monomial pairs x 5 samples (" + std::to_string(nonzero_trials)
                + " with nonzero periods): max relative defect " + num(worst) + " (tol 1e-9)"};
}

Outcome check_regression(const std::string& dir)
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    std::ostringstream detail;
    bool ok = true;
    double worst_backend = 0.0, worst_value = 0.0;
    for (const std::string mode : {"corrected", "literal"}) {
        const std::string name = "regression_" + mode + ".json";
        const json root = load_fixture(dir, name);
        const FixtureReader fx{dir + "/" + name, root};
        const CurveFamily fam = resolve_family(fx.string(root, "family"));
        const MultiPoly P = Expr::parse(fx.string(root, "polynomial")).to_multipoly(5);
        const double tol = fx.real(root, "tolerance");
        const double cmp_tol = fx.real(root, "comparison_tolerance");
        const std::string frozen_verdict = fx.string(root, "verdict");
        std::vector<Complex> s_list, frozen, frozen_displayed;
        for (const auto& row : fx.array(root, "samples")) {
            s_list.push_back(fx.complex(row, "s"));
            frozen.push_back(fx.complex(row, "total"));
            frozen_displayed.push_back(fx.complex(row, "total_displayed"));
        }
        const SweepResult sw = sweep(X, P, fam, s_list);
        PeriodOptions displayed;
        displayed.sign = SignConvention::Displayed;
        const SweepResult swd = sweep(X, P, fam, s_list, displayed);
        for (std::size_t i = 0; i < s_list.size(); ++i) {
            worst_backend = std::max(worst_backend, sw.samples[i].diagnostics.backend_max_disagreement);
            worst_value = std::max(worst_value, std::abs(sw.samples[i].total - frozen[i]) / std::max(1.0, std::abs(frozen[i])));
            worst_value = std::max(worst_value, std::abs(swd.samples[i].total - frozen_displayed[i])
                                                    / std::max(1.0, std::abs(frozen_displayed[i])));
        }
        const ComparisonReport cmp = compare_closed_form(sw, [&](Complex s) { return closed_form_g(s, {zeta5(1)}); }, cmp_tol);
        const bool verdict_ok = frozen_verdict == verdict_name(cmp.verdict);
        ok = ok && verdict_ok && worst_value < tol;
        detail << mode << ": verdict " << verdict_name(cmp.verdict) << " (frozen " << frozen_verdict << ", deviation "
               << num(cmp.max_rel_deviation) << " vs tol " << num(cmp_tol) << "); ";
    }
    {
        const std::string name = "period_corrected_s0.1.json";
        const json root = load_fixture(dir, name);
        const FixtureReader fx{dir + "/" + name, root};
        const CurveFamily fam = resolve_family(fx.string(root, "family"));
        const MultiPoly P = Expr::parse(fx.string(root, "polynomial")).to_multipoly(5);
        const double tol = fx.real(root, "tolerance");
        const PeriodReport rep = period_at(X, P, fam, fx.complex(root, "s"));
        double worst = std::abs(rep.total - fx.complex(root, "total")) / std::max(1.0, std::abs(rep.total));
        for (const auto& pr : fx.array(root, "pairs")) {
            const json& ij = fx.at(pr, "pair");
            const auto& pc = rep.pair(ij.at(0).get<int>(), ij.at(1).get<int>());
            worst = std::max(worst, std::abs(pc.value - fx.complex(pr, "value")));
        }
        worst_backend = std::max(worst_backend, rep.diagnostics.backend_max_disagreement);
        worst_value = std::max(worst_value, worst);
        ok = ok && worst < tol;
    }
    ok = ok && worst_backend < 1e-8;
    detail << "max backend gap " << num(worst_backend) << " (tol 1e-8); max deviation from frozen values "
           << num(worst_value) << " (tol 1e-8)";
    return {ok, detail.str()};
}

Outcome check_scan(const std::string& dir)
{
    const std::string name = "scan_corrected.json";
    const json root = load_fixture(dir, name);
    const FixtureReader fx{dir + "/" + name, root};
    const Hypersurface X = fermat_hypersurface(3, 5);
    const CurveFamily fam = resolve_family(fx.string(root, "family"));
    std::vector<Complex> s_list;
    for (std::size_t k = 0; k < fx.array(root, "samples").size(); ++k) {
        const json& v = root["samples"][k];
        if (!v.is_array() || v.size() != 2)
            throw Error(Errc::ConfigError, "fixture " + fx.path + ": samples[" + std::to_string(k) + "] is not [re, im]");
        s_list.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    const double tol = fx.real(root, "tolerance");

    const auto t0 = std::chrono::steady_clock::now();
    const ScanTable first = monomial_scan(X, fam, s_list, 5);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const ScanTable second = monomial_scan(X, fam, s_list, 5, {}, 1);
    const std::string csv1 = scan_csv(first), csv2 = scan_csv(second);

    const json& rows = fx.array(root, "rows");
    if (rows.size() != first.rows.size())
        throw Error(Errc::ConfigError, "fixture " + fx.path + ": expected " + std::to_string(first.rows.size()) + " rows");
    double worst = 0.0;
    int nonvanishing = 0, flag_mismatch = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = first.rows[i];
        nonvanishing += row.vanishes ? 0 : 1;
        const bool frozen_zero = fx.string(rows[i], "symbolic") == "0";
        if (frozen_zero != row.vanishes)
            ++flag_mismatch;
        const json& vals = fx.array(rows[i], "values");
        for (std::size_t k = 0; k < row.values.size() && k < vals.size(); ++k) {
            const Complex f{vals[k].at(0).get<double>(), vals[k].at(1).get<double>()};
            worst = std::max(worst, std::abs(row.values[k] - f) / std::max(1.0, std::abs(f)));
        }
        const json& e = fx.at(rows[i], "monomial");
        if (e.get<Exponent>() != row.monomial)
            throw Error(Errc::ConfigError, "fixture " + fx.path + ": row " + std::to_string(i) + " has a different monomial");
    }
    const bool ok = secs < 10.0 && csv1 == csv2 && nonvanishing > 0 && worst < tol && flag_mismatch == 0;
    return {ok, std::to_string(first.rows.size()) + " x " + std::to_string(s_list.size()) + " in " + num(secs)
                    + " s (limit 10); CSV " + (csv1 == csv2 ? "byte-identical" : "DIFFERS") + " across thread counts; "
                    + std::to_string(nonvanishing) + " non-vanishing rows; max deviation from oracle " + num(worst)
                    + " (tol " + num(tol) + "); flag mismatches " + std::to_string(flag_mismatch)};
}

Outcome check_catalog()
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const auto fams = line_families();
    std::set<std::string> ids;
    double worst = 0.0, worst_abc = 0.0;
    for (const auto& d : fams) {
        ids.insert(d.id());
        const CurveFamily fam = line_family(d);
        for (const auto& s : standard_samples()) {
            worst = std::max(worst, containment_residual(X, fam(s)));
            const AbcPoint p = abc_path(s);
            worst_abc = std::max(worst_abc, std::abs(std::pow(p.a, 5) + std::pow(p.b, 5) + std::pow(p.c, 5)));
        }
    }
    std::mt19937_64 g(99);
    int gm_bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(unit(g) * 3.0); // N = 2n + 3
        const int N = 2 * n + 3;
        const int d = 2 + static_cast<int>(unit(g) * 5.0);
        const int k = (N + d - 1) / d + static_cast<int>(unit(g) * 3.0);
        const int degP = k * d - N;
        const auto pmonos = monomials_of_degree(N, degP);
        const auto bmonos = monomials_of_degree(N, d);
        MultiPoly P(N);
        for (int t = 0; t < 3; ++t)
            P.add_term(pmonos[static_cast<std::size_t>(unit(g) * pmonos.size())], random_complex(g, 1.0) + 2.0);
        const Exponent& beta = bmonos[static_cast<std::size_t>(unit(g) * bmonos.size())];
        const GaussManinStep st = gm_monomial_derivative(P, k, beta);
        if (st.k != k + 1 || !st.P.is_homogeneous() || st.P.total_degree() != st.k * d - N)
            ++gm_bad;
    }
    const bool ok = fams.size() == 50 && ids.size() == 50 && worst < 1e-10 && worst_abc < 1e-12 && gm_bad == 0;
    return {ok, std::to_string(fams.size()) + " families (" + std::to_string(ids.size()) + " distinct); max containment "
                    + num(worst) + " (tol 1e-10); max |a^5+b^5+c^5| " + num(worst_abc)
                    + " (tol 1e-12); Gauss-Manin degree failures " + std::to_string(gm_bad) + "/100"};
}

} // namespace

const std::vector<std::string>& criterion_names()
{
    static const std::vector<std::string> names = {"contraction", "residue",    "geometry", "nullity", "invariance",
                                                   "linearity",   "regression", "scan",     "catalog"};
    return names;
}

CriterionResult run_criterion(int id, const VerifyOptions& opts)
{
    const auto& names = criterion_names();
    if (id < 1 || id > static_cast<int>(names.size()))
        throw Error(Errc::InputError, "no criterion " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.name = names[static_cast<std::size_t>(id - 1)];
    const double limit = (id == 1) ? 1.0 : (id == 2 ? 10.0 : 0.0);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Outcome o;
        switch (id) {
        case 1: o = check_contraction(); break;
        case 2: o = check_residue(); break;
        case 3: o = check_geometry(); break;
        case 4: o = check_nullity(); break;
        case 5: o = check_invariance(); break;
        case 6: o = check_linearity(); break;
        case 7: o = check_regression(opts.fixture_dir); break;
        case 8: o = check_scan(opts.fixture_dir); break;
        default: o = check_catalog(); break;
        }
        r.passed = o.passed;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0.0 && r.seconds >= limit) {
        r.passed = false;
        r.detail += "; runtime " + num(r.seconds) + " s exceeds " + num(limit) + " s";
    }
    return r;
}

std::vector<CriterionResult> run_verification(const VerifyOptions& opts)
{
    const auto& names = criterion_names();
    std::vector<CriterionResult> out;
    for (int id = 1; id <= static_cast<int>(names.size()); ++id) {
        if (!opts.filter.empty() && opts.filter != names[static_cast<std::size_t>(id - 1)] && opts.filter != std::to_string(id))
            continue;
        out.push_back(run_criterion(id, opts));
    }
    if (out.empty())
        throw Error(Errc::InputError, "filter '" + opts.filter + "' matches no criterion");
    return out;
}

std::string format_result(const CriterionResult& r)
{
    char head[96];
    std::snprintf(head, sizeof head, "[%s] %d %-11s %7.3f s  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    return head + r.detail;
}

json verification_json(const std::vector<CriterionResult>& results)
{
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        all = all && r.passed;
    }
    return {{"passed", all}, {"criteria", arr}};
}

} // namespace rcp
