#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dp1/harness.hpp"

namespace {

void write_json(std::string const& path, nlohmann::json const& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

int run_verify(std::string const& target, std::uint64_t seed, std::string const& json_path) {
    auto claims = dp1::verify_claims(target, seed);
    for (auto const& c : claims) {
        char const* tag = c.status == "pass" ? "PASS" : (c.status == "flagged" ? "NOTE" : "FAIL");
        std::printf("[%s] %-28s %s (%.2fs)\n", tag, c.id.c_str(), c.paper.c_str(), c.runtime_sec);
        if (c.status == "fail") std::printf("       %s\n", c.details.dump().c_str());
    }
    if (!json_path.empty()) write_json(json_path, dp1::claims_to_json(claims, seed));
    return dp1::claims_exit_code(claims);
}

int run_count(std::vector<double> const& heights, int curves, std::string const& json_path) {
    auto report = dp1::count_report(heights, curves);
    for (auto const& h : report["heights"]) {
        char key[32];
        std::snprintf(key, sizeof(key), "%g", h.get<double>());
        std::printf("T=%-6s surface points: %-6ld exceptional: %ld on %ld curves\n", key,
                    report["surface"]["counts"][key].get<long>(),
                    report["exceptional_counts"][key].get<long>(),
                    report["curves_with_points"][key].get<long>());
    }
    for (auto const& c : report["curves"]) {
        std::string counts;
        for (auto const& [t, n] : c["counts"].items())
            counts += "N(" + t + ")=" + std::to_string(n.get<long>()) + " ";
        std::printf("curve %-18s %s\n", c["label"].get<std::string>().c_str(), counts.c_str());
    }
    if (!json_path.empty()) write_json(json_path, report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for a degree-1 del Pezzo surface over Q(zeta)"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string json_path;
    std::string target = "all";

    auto* verify = app.add_subcommand("verify", "run verification claims");
    verify->add_option("target", target, "all|picard|identity|section|rank|family")
        ->check(CLI::IsMember({"all", "picard", "identity", "section", "rank", "family"}));
    verify->add_option("--seed", seed, "seed for the sampled checks");
    verify->add_option("--json", json_path, "write the JSON report here");

    std::vector<double> heights{4, 16, 64};
    int curves = 5;
    auto* count = app.add_subcommand("count", "count rational points by height");
    count->add_option("--heights", heights, "height bounds")->delimiter(',');
    count->add_option("--curves", curves, "curve budget for the exceptional set");
    count->add_option("--json", json_path, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(target, seed, json_path);
        if (count->parsed()) return run_count(heights, curves, json_path);
    } catch (std::exception const& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
