#include <string>

#include "doctest.h"
#include "nckit/report.hpp"

using namespace nckit;

namespace {
std::string scene(const std::string& name) { return std::string(NCKIT_SCENE_DIR) + "/" + name; }

Outcome run(const std::string& file, const std::string& command, RunOptions opts = {}) {
    return run_scene_file(scene(file), command, opts);
}
}  // namespace

TEST_CASE("scene files produce the documented exit codes") {
    struct Case {
        const char* file;
        const char* command;
        int code;
    };
    const Case cases[] = {
        {"hilbmatrix.toml", "hilbmatrix", 0},
        {"hexagon.toml", "hexagon", 0},
        {"cremona.toml", "cremona", 0},
        {"cremona_collinear.toml", "cremona", 2},
        {"recognize.toml", "recognize", 0},
        {"recognize_bad_1b.toml", "recognize", 2},
        {"recognize_bad_2.toml", "recognize", 2},
        {"quadric.toml", "quadric", 0},
        {"quadric_singular.toml", "quadric", 2},
        {"quadric_inconsistent.toml", "quadric", 2},
        {"zalg_normalize.toml", "zalg-normalize", 0},
        {"zalg_solve.toml", "zalg-solve", 0},
        {"zalg_solve_need1.toml", "zalg-solve", 2},
        {"product_table.toml", "product-table", 0},
        {"bad_syntax.toml", "hilbmatrix", 1},
        {"bad_reference.toml", "cremona", 1},
    };
    for (const auto& c : cases) {
        auto o = run(c.file, c.command);
        CHECK_MESSAGE(o.exit_code == c.code, c.file, ": ", o.report.dump());
    }
}

TEST_CASE("error reports name the failed check") {
    auto o = run("recognize_bad_1b.toml", "recognize");
    CHECK(o.report["verdict"] == "failed");
    CHECK(o.report["error"]["code"] == "hypothesis-failed(1b)");
    CHECK(o.report["error"]["rule"] == "two-point-recognition");
    auto q = run("quadric_singular.toml", "quadric");
    CHECK(q.report["error"]["code"] == "not-smooth");
    auto bad = run("bad_syntax.toml", "hilbmatrix");
    CHECK(bad.report["verdict"] == "input-error");
}

TEST_CASE("command mismatch is an input error") {
    auto o = run("hilbmatrix.toml", "cremona");
    CHECK(o.exit_code == 1);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
    for (const char* file : {"cremona.toml", "quadric.toml"}) {
        const std::string cmd = file == std::string("cremona.toml") ? "cremona" : "quadric";
        auto a = emit_report(run(file, cmd));
        auto b = emit_report(run(file, cmd));
        CHECK(a == b);
        CHECK(Json::parse(a).dump(2) + "\n" == a);
    }
}

TEST_CASE("hilbmatrix report") {
    RunOptions opts;
    opts.series_terms = 5;
    auto o = run("hilbmatrix.toml", "hilbmatrix", opts);
    REQUIRE(o.exit_code == 0);
    CHECK(o.report["reference_match"] == true);
    CHECK(o.report["matrix"][1][1]["series"] == "(1+7s+s^2)/(1-s)^3");
    CHECK(o.report["matrix"][1][1]["coefficients"].size() == 5);
}

TEST_CASE("text format renders the hexagon grid") {
    RunOptions opts;
    opts.format = "text";
    auto o = run("hexagon.toml", "hexagon", opts);
    REQUIRE(o.exit_code == 0);
    auto text = emit_report(o);
    CHECK(text.rfind("nckit hexagon: ok", 0) == 0);
    CHECK(text.find("-1") != std::string::npos);
}

TEST_CASE("field errors carry a position") {
    auto o = run_scene_text("command = \"hilbmatrix\"\ngenerators = [\"a\"]\nnormalization = \"sum_L_zero\"\n"
                            "[hilbmatrix]\na = \"b + 1\"\n",
                            "inline.toml", "hilbmatrix");
    CHECK(o.exit_code == 1);
    CHECK(o.report["error"]["detail"].get<std::string>().find("5:") != std::string::npos);
}
