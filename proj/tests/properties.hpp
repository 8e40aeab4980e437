#pragma once

// Exhaustive property suites shared by the unit tests and the acceptance run.

#include <string>
#include <vector>

#include "circ/zn.hpp"

namespace circ::properties {

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// k <= m  <=>  Sigma(k) refines Sigma(m), for all key pairs, n <= n_max.
SuiteResult partition_monotonicity(Int n_max);
/// key_of_partition(Sigma(k)) = k for every k, n <= n_max.
SuiteResult key_round_trip(Int n_max);
/// Every member of P(k) is a bijection of Z_n that maps Sigma(k) classes
/// onto Sigma(k) classes, n <= n_max.
SuiteResult multiplier_action(Int n_max);
/// Full scan in Z_n and the scan inside <S> agree, both modes, n <= n_max.
SuiteResult reduction_consistency(Int n_max);
/// Every member of isomorphism_class(S) has the key of S, n <= n_max.
SuiteResult key_preservation(Int n_max);
/// Every CI verdict from a fast path is confirmed by the full scan.
SuiteResult fast_path_soundness(Int n_max);
/// is_ci(S) = is_ci(uS) for every unit u.
SuiteResult orbit_invariance(Int n_max);
/// Every applicable witness family is non-CI.
SuiteResult witness_families(Int n_max_digraph, Int n_max_graph);

}  // namespace circ::properties
