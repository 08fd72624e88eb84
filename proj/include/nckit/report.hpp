#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "nckit/surface_engine.hpp"
#include "nckit/tcr_hom.hpp"
#include "nckit/zalgebra.hpp"

namespace nckit {

using Json = nlohmann::json;

Json to_json(const Point& p);
Json to_json(const Divisor& d);
Json to_json(const SheafClass& l);
Json to_json(const HilbertSeries& h, long terms);
Json to_json(const LineClass& l);
Json to_json(const EllipticAlgebra& r);
Json to_json(const SklyaninData& s);
Json to_json(const SolverResult& s);
Json to_json(const StandardZAlgebra& a);

struct RunOptions {
    std::optional<std::string> format;  // json | text; overrides the scene
    std::optional<long> series_terms;
};

struct Outcome {
    int exit_code = 0;
    std::string format = "json";
    Json report;
};

inline constexpr const char* kCommands[] = {"hilbmatrix", "hexagon",        "cremona",
                                            "recognize",  "quadric",        "zalg-normalize",
                                            "zalg-solve", "product-table"};

// Parse a TOML scene and run one command. Never throws for scene or
// verdict failures; they become reports with exit codes 1 and 2.
Outcome run_scene_text(std::string_view toml_text, const std::string& source,
                       const std::string& command, const RunOptions& opts = {});
Outcome run_scene_file(const std::string& path, const std::string& command,
                       const RunOptions& opts = {});

// Deterministic rendering: sorted keys, trailing newline.
std::string emit_report(const Outcome& outcome);

}  // namespace nckit
