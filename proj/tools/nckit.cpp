#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nckit/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"nckit: divisor, Hilbert series and intersection calculus for elliptic algebras"};
    std::string command, scene, report_path, format;
    long series_terms = 0;
    std::vector<std::string> names(std::begin(nckit::kCommands), std::end(nckit::kCommands));
    app.add_option("command", command, "command to run")->required()->check(CLI::IsMember(names));
    app.add_option("scene", scene, "scene file (TOML)")->required();
    app.add_option("--report", report_path, "write the report here instead of stdout");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--series-terms", series_terms, "coefficients shown per series")
        ->check(CLI::Range(1, 1000));
    app.footer("NCKIT_SEED is reserved and ignored; every command is deterministic.\n"
               "Exit codes: 0 success, 1 input error, 2 failed hypothesis or verification.");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    nckit::RunOptions opts;
    if (!format.empty()) opts.format = format;
    if (series_terms > 0) opts.series_terms = series_terms;
    nckit::Outcome out = nckit::run_scene_file(scene, command, opts);
    const std::string text = nckit::emit_report(out);
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) {
            std::cerr << "nckit: cannot write " << report_path << "\n";
            return 1;
        }
        f << text;
    }
    if (out.exit_code != 0 && out.report.contains("error"))
        std::cerr << "nckit: " << out.report["error"]["code"].get<std::string>() << " ["
                  << out.report["error"]["rule"].get<std::string>() << "]: "
                  << out.report["error"]["detail"].get<std::string>() << "\n";
    return out.exit_code;
}
