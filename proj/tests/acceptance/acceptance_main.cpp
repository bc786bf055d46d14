// Acceptance suite runner: one pass/fail line per criterion.
//
//   acceptance [--criterion N] [--cli PATH] [--fixtures DIR]
//
// Exits 0 iff every selected criterion passes.

#include <cstring>
#include <iostream>
#include <string>

#include "siegelhecke/acceptance.hpp"

int main(int argc, char** argv) {
    int criterion = 0;
    hecke::AcceptanceOptions options;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << arg << "\n";
                std::exit(1);
            }
            return argv[++i];
        };
        if (arg == "--criterion")
            criterion = std::stoi(next());
        else if (arg == "--cli")
            options.cli_path = next();
        else if (arg == "--fixtures")
            options.fixtures_dir = next();
        else {
            std::cerr << "unknown argument: " << arg << "\n";
            return 1;
        }
    }

    bool all_pass = true;
    if (criterion != 0) {
        hecke::CriterionResult result = hecke::run_criterion(criterion, options);
        std::cout << hecke::format_result(result) << "\n";
        all_pass = result.pass;
    } else {
        for (const auto& result : hecke::run_all_acceptance(options)) {
            std::cout << hecke::format_result(result) << "\n";
            all_pass = all_pass && result.pass;
        }
    }
    return all_pass ? 0 : 1;
}
