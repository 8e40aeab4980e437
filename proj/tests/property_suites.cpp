// Runs every property suite and prints one line per suite.

#include <iostream>

#include "properties.hpp"

using namespace circ::properties;

int main() {
    const std::vector<SuiteResult> suites{
        partition_monotonicity(100), key_round_trip(72),   multiplier_action(72),    reduction_consistency(12),
        key_preservation(16),        fast_path_soundness(16), orbit_invariance(10), witness_families(100, 50),
    };
    int failed = 0;
    for (const auto& s : suites) {
        failed += !s.ok();
        std::cout << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.checked << " checks, " << s.failures.size()
                  << " failures" << std::endl;
        for (std::size_t i = 0; i < s.failures.size() && i < 5; ++i) std::cout << "  " << s.failures[i] << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
