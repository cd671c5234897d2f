#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace offsetsing;
using testsupport::ints;

namespace {

std::string message_of(const std::string& text)
{
    try {
        parse_curve_text(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("curve file parsing")
{
    auto c = parse_curve_text(R"({"name": "cardioid", "X": [0,0,0,-1024], "Y": [0,0,128,0,-2048], "W": [1,0,32,0,256], "d": "1"})");
    auto ref = testsupport::cardioid();
    CHECK(c.name == "cardioid");
    CHECK(c.X == ref.X);
    CHECK(c.Y == ref.Y);
    CHECK(c.W == ref.W);
    CHECK(c.d == 1);

    CHECK(parse_curve_text(R"({"X": [0,1], "Y": [0,0,1], "W": [1], "d": "3/10"})").d == testsupport::frac(3, 10));
    CHECK(parse_curve_text(R"({"X": [0,1], "Y": [0,0,"100000000000000000000"], "W": [1], "d": 2})").d == 2);

    CHECK(message_of(R"({"X": [0,1], "Y": [0,0,1], "W": [1], "d": "0"})") == "distance must be positive");
    CHECK(message_of(R"({"X": [], "Y": [0,0,1], "W": [1], "d": "1"})").find("syntax error in field 'X'") == 0);
    CHECK(message_of(R"({"X": [0,1], "Y": [0,0.5], "W": [1], "d": "1"})").find("field 'Y[1]'") != std::string::npos);
    CHECK(message_of(R"({"X": [0,1], "Y": [0,1], "W": [0], "d": "1"})").find("W") != std::string::npos);
    CHECK(message_of(R"({"X": [0,1], "Y": [0,1], "W": [1], "d": "x"})").find("field 'd'") != std::string::npos);
    CHECK(message_of(R"({"X": [0,1], )").find("syntax error") == 0);
    CHECK(message_of(R"({"Y": [0,1], "W": [1], "d": "1"})").find("missing field 'X'") != std::string::npos);
    CHECK_THROWS_AS(parse_curve_file("/nonexistent/curve.json"), InputError);
}

TEST_CASE("curve file round trip")
{
    for (const char* stem : {"cardioid", "parabola", "c05_d03", "c08", "c13"}) {
        auto c = testsupport::corpus_curve(stem);
        std::string once = emit_curve_file(c);
        auto again = parse_curve_text(once);
        CHECK(again.X == c.X);
        CHECK(again.Y == c.Y);
        CHECK(again.W == c.W);
        CHECK(again.d == c.d);
        CHECK(again.name == c.name);
        CHECK(emit_curve_file(again) == once);
    }
    // Non-normalized input comes back in canonical form.
    auto scaled = parse_curve_text(R"({"name": "p", "X": [0,2,0], "Y": [0,0,2], "W": [2], "d": "1"})");
    CHECK(emit_curve_file(scaled) == "{\"name\":\"p\",\"X\":[0,1],\"Y\":[0,0,1],\"W\":[1],\"d\":\"1\"}\n");
}

TEST_CASE("decimal strings")
{
    CHECK(decimal_string(Rat(1, 3), 4) == "0.3333");
    CHECK(decimal_string(Rat(-2, 3), 3) == "-0.667");
    CHECK(decimal_string(Rat(5), 2) == "5.00");
    CHECK(decimal_string(Rat(-1, 1000), 2) == "0.00");
    CHECK(decimal_string(Rat(7, 2), 0) == "4");
}

TEST_CASE("reports")
{
    auto an = analyze(testsupport::cardioid());
    const Report& r = an.report;
    CHECK(r.n_p == 4);
    CHECK(r.delta_t == 12);
    CHECK(r.deg_t_P == 3);
    CHECK(r.deg_t_Q == 4);
    REQUIRE(r.roots.size() == 4);
    const double expect[] = {-0.08699, -0.04772, 0.04772, 0.08699};
    for (int i = 0; i < 4; ++i) CHECK(std::stod(r.roots[static_cast<std::size_t>(i)].approx) == doctest::Approx(expect[i]).epsilon(1e-4));
    CHECK(!r.wall_time_ms.has_value());

    std::string a = emit_report(r), b = emit_report(analyze(testsupport::cardioid()).report);
    CHECK(a == b);
    auto doc = nlohmann::ordered_json::parse(a);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys.front() == "name");
    CHECK(keys.back() == "flags");
    CHECK(doc["roots"][0]["kind"] == "self_intersection");
    CHECK(doc["roots"][0]["partners"][0] == 3);

    auto c1 = analyze(testsupport::corpus_curve("c01_lemniscate")).report;
    CHECK(c1.n_p == 10);
    CHECK(c1.delta_t == 30);
    CHECK(c1.deg_t_P == 6);
    CHECK(c1.deg_t_Q == 4);

    auto circ = analyze(testsupport::circle()).report;
    CHECK(circ.flags.reducible_rejected);
    CHECK(circ.roots.empty());
    CHECK(circ.n_p == 0);
    CHECK(!circ.delta_t.has_value());

    AnalyzeOptions timed;
    timed.timing = true;
    CHECK(analyze(testsupport::parabola(), timed).report.wall_time_ms.has_value());

    AnalyzeOptions mob;
    mob.mobius = std::array<Rat, 4>{1, 0, 0, 1};
    CHECK(analyze(testsupport::parabola(), mob).report.n_p == 4);
}

TEST_CASE("svg")
{
    auto an = analyze(testsupport::cardioid());
    std::string svg = emit_svg(an.curve, an.result->sys, an.report, std::nullopt, 800);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("id=\"generator\"") != std::string::npos);
    CHECK(svg.find("id=\"offset-plus\"") != std::string::npos);
    CHECK(svg.find("id=\"offset-minus\"") != std::string::npos);
    std::size_t markers = 0;
    for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++markers;
    CHECK(markers == 4);
    CHECK(svg.find("href") == std::string::npos);

    auto c7 = analyze(testsupport::corpus_curve("c07"));
    std::string s7 = emit_svg(c7.curve, c7.result->sys, c7.report, Window{-6, -4, 4, 4});
    CHECK(s7.find("(superfluous)") != std::string::npos);

    CHECK_THROWS_AS(emit_svg(an.curve, an.result->sys, an.report, Window{0, 0, 0, 1}), InputError);
}
