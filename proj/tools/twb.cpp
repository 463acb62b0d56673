#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twb/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Twisted Bernoulli numbers, symmetry identities and Volkenborn sums"};
    std::string config_path;
    std::string out_path;
    std::string format;
    unsigned jobs = 0;
    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--out", out_path, "write the result here instead of stdout");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto* jobs_opt = app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    twb::cli::RunOptions options;
    if (!format.empty())
        options.format = format == "csv" ? twb::cli::Format::Csv : twb::cli::Format::Json;
    if (jobs_opt->count() > 0) {
        options.jobs = jobs;
    } else if (const char* env = std::getenv("TWB_JOBS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024)
            options.jobs = static_cast<unsigned>(v);
    }

    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "config error at '--config': cannot read " << config_path << "\n";
        return 2;
    }
    std::stringstream text;
    text << in.rdbuf();

    const auto result = twb::cli::run_text(text.str(), options);
    std::cerr << result.diagnostics;
    if (result.exit_code == 2)
        return 2;

    const std::string target = !out_path.empty() ? out_path : result.out_path.value_or("");
    if (target.empty() || target == "-") {
        std::cout << result.output;
    } else {
        std::ofstream out(target, std::ios::binary);
        out << result.output;
        if (!out) {
            std::cerr << "cannot write " << target << "\n";
            return 2;
        }
    }
    return result.exit_code;
}
