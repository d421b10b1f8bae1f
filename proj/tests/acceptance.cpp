// Acceptance suite driver: one pass/fail line per criterion, exit 0 only when
// every criterion holds.

#include "kcut/verify.hpp"

#include <cstring>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    kcut::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--criteria" && i + 1 < argc) {
            // comma-separated ids
            const std::string list = argv[++i];
            std::size_t pos = 0;
            while (pos < list.size()) {
                opt.only.push_back(std::atoi(list.c_str() + pos));
                const auto comma = list.find(',', pos);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            std::cerr << "usage: kcut_acceptance [--seed S] [--criteria 1,2,...]\n";
            return 2;
        }
    }
    const auto results = kcut::run_acceptance(opt, &std::cout);
    const bool ok = kcut::all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << results.size()
              << " run)\n";
    return ok ? 0 : 1;
}
