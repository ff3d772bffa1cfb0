#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "rcperiod/config.hpp"
#include "rcperiod/error.hpp"
#include "rcperiod/report.hpp"
#include "rcperiod/verify.hpp"

using namespace rcp;
using nlohmann::json;

namespace {

const std::string data_dir = RCPERIOD_TEST_DATA_DIR;

std::string config_error(const json& j)
{
    try {
        parse_config(j);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConfigError);
        return e.what();
    }
    FAIL("config accepted");
    return {};
}

json base_config()
{
    return json::parse(R"({"hypersurface": "fermat-quintic", "family": "fermat-slice/zeta=1/corrected",
                           "polynomial": "x1^3*x2^2", "samples": [0.1]})");
}

} // namespace

TEST_CASE("number parsing")
{
    CHECK(parse_number(json(1.5), "$") == Complex(1.5));
    CHECK(parse_number(json("3/4"), "$") == Complex(0.75));
    CHECK(parse_number(json("-2"), "$") == Complex(-2.0));
    CHECK(parse_number(json::array({1, -2}), "$") == Complex(1.0, -2.0));
    CHECK_THROWS_AS(parse_number(json("1/0"), "$"), Error);
    CHECK_THROWS_AS(parse_number(json::array({1, 2, 3}), "$"), Error);
}

TEST_CASE("config errors name the field")
{
    json j = base_config();
    j["samples"] = json::array({0.1, 0.2, "abc"});
    CHECK(config_error(j).find("$.samples[2]") != std::string::npos);
    j = base_config();
    j["polynomial"] = "x1^^2";
    CHECK(config_error(j).find("$.polynomial") != std::string::npos);
    j = base_config();
    j["colour"] = 1;
    CHECK(config_error(j).find("colour") != std::string::npos);
    j = base_config();
    j.erase("family");
    CHECK(config_error(j).find("$.family") != std::string::npos);
    j = base_config();
    j["tolerances"] = {{"vanish", -1.0}};
    CHECK(config_error(j).find("$.tolerances") != std::string::npos);
}

TEST_CASE("config round trip")
{
    for (const char* name : {"worked_period.json", "line_scan.json", "explicit.json"}) {
        const RunConfig c = load_config(data_dir + "/" + name);
        const json once = to_json(c);
        CHECK(to_json(parse_config(once)) == once);
    }
    const RunConfig e = load_config(data_dir + "/explicit.json");
    CHECK(e.samples.size() == 4);
    CHECK(e.hypersurface.terms.size() == 5);
    CHECK_THROWS_AS(load_config(data_dir + "/missing.json"), Error);
}

TEST_CASE("explicit config reproduces the catalog slice")
{
    const RunConfig a = load_config(data_dir + "/explicit.json");
    RunConfig b = a;
    b.hypersurface = {"fermat-quintic", 0, {}};
    b.family = FamilySpec{"fermat-slice/zeta=1/corrected"};
    const Hypersurface Xa = build_hypersurface(a), Xb = build_hypersurface(b);
    const auto Pa = build_polynomial(a, Xa.nvars());
    const auto sa = sweep(Xa, Pa, build_family(a), a.samples, build_options(a));
    const auto sb = sweep(Xb, Pa, build_family(b), b.samples, build_options(b));
    for (std::size_t i = 0; i < sa.samples.size(); ++i)
        CHECK(std::abs(sa.samples[i].total - sb.samples[i].total) < 1e-7);
}

TEST_CASE("report formatting")
{
    CHECK(format_sci(0.0) == "0.0000000000000000e+00");
    CHECK(format_sci(-0.0) == "0.0000000000000000e+00");
    CHECK(format_sci(1.5) == "1.5000000000000000e+00");
    const RunConfig c = load_config(data_dir + "/worked_period.json");
    const Hypersurface X = build_hypersurface(c);
    const auto sw = sweep(X, build_polynomial(c, X.nvars()), build_family(c), c.samples, build_options(c));
    const std::string csv = period_csv(sw, 1e-9);
    CHECK(csv.starts_with("s_re,s_im,total_re,total_im,abs,vanishes"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    const json j = period_json(sw, 1e-9, 256);
    CHECK(j.dump().find("tolerance") != std::string::npos);
}

TEST_CASE("verify filter and fixture corruption")
{
    VerifyOptions opts;
    opts.filter = "contraction";
    const auto r = run_verification(opts);
    REQUIRE(r.size() == 1);
    CHECK(r[0].passed);
    CHECK(format_result(r[0]).starts_with("[PASS] 1 contraction"));
    opts.filter = "nonsense";
    CHECK_THROWS_AS(run_verification(opts), Error);

    const auto dir = std::filesystem::temp_directory_path() / "rcperiod_corrupt_fixtures";
    std::filesystem::create_directories(dir);
    for (const auto& f : std::filesystem::directory_iterator(RCPERIOD_FIXTURE_DIR))
        std::filesystem::copy_file(f.path(), dir / f.path().filename(),
                                   std::filesystem::copy_options::overwrite_existing);
    std::ofstream(dir / "regression_corrected.json") << "{ not json";
    opts.filter = "regression";
    opts.fixture_dir = dir.string();
    const auto broken = run_verification(opts);
    REQUIRE(broken.size() == 1);
    CHECK_FALSE(broken[0].passed);
    CHECK(broken[0].detail.find("regression_corrected.json") != std::string::npos);
    std::filesystem::remove_all(dir);
}
