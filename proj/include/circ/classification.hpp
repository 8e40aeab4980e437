#pragma once

// Exhaustive m-DCI / m-CI sweeps over Z_n, the closed-form classification
// predicates they are checked against, and explicit non-CI constructions.

#include <optional>
#include <string>
#include <vector>

#include "circ/ci_engine.hpp"

namespace circ {

/// Neither 8 | n nor p^2 | n for any odd prime p < m. Stated for m >= 3 only;
/// smaller m throws std::domain_error.
bool predicate_mdci(Int n, Int m);
/// n in {8, 9, 18}, or neither 8 | n nor p^2 | n for an odd prime p < (m-1)/2.
/// Stated for m >= 6 only.
bool predicate_mci(Int n, Int m);
/// n = k or 2k with k square-free.
bool predicate_dci_group(Int n);
bool predicate_ci_group(Int n);

/// The predicate that covers an m-group question, if any: predicate_mdci
/// for digraphs with m >= 3, predicate_mci for graphs with m >= 6.
std::optional<bool> group_predicate(Int n, Int m, Mode mode);

struct Counterexample {
    ConnectionSet set;
    ConnectionSet witness;
};

struct ClassificationReport {
    Int n = 0;
    Int m = 0;
    Mode mode = Mode::digraph;
    bool property_holds = true;
    std::vector<Counterexample> counterexamples;
    std::optional<bool> predicate_value;
    bool agreement = true;
    /// For m-group reports: the first valency whose property fails.
    std::optional<Int> failing_valency;
    std::size_t sets_checked = 0;
};

struct SweepOptions {
    unsigned workers = 1;
    EngineCache* engines = nullptr;  // default_engines() when null
};

/// Lexicographically least member of every Aut-orbit of size-m connection
/// sets (inverse-closed ones only in graph mode), in lexicographic order.
std::vector<ConnectionSet> orbit_representatives(Int n, Int m, Mode mode);

/// Is every Cayley (di)graph of valency exactly m on Z_n CI?
ClassificationReport m_property(Int n, Int m, Mode mode, const SweepOptions& options = {});

/// i-property for every i <= m; valencies above n - 1 have no connection
/// sets and hold vacuously. Stops at the first failing valency.
ClassificationReport is_m_group(Int n, Int m, Mode mode, const SweepOptions& options = {});

struct WitnessFamily {
    std::string name;
    ConnectionSet set;
};

/// Known non-CI constructions that apply to Z_n in the given mode.
std::vector<WitnessFamily> witnesses(Int n, Mode mode);

/// Every cell n in 2..n_max, m in [first applicable m, m_max] with
/// is_m_group compared to group_predicate.
std::vector<ClassificationReport> verify_theorems(Int n_max, Int m_max, Mode mode, const SweepOptions& options = {});

}  // namespace circ
