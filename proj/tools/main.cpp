#include "hilbert/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    try {
        const auto config = hilbert::cli::parse_command_line(argc, argv, std::cout);
        if (!config) return 0;
        return hilbert::cli::run(*config, std::cout, std::cerr);
    } catch (const hilbert::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hilbert::cli::kExitUsage;
    }
}
