#pragma once

// Isomorphism of circulants through keys and solving sets, and CI testing of
// connection sets built on top of it.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "circ/cayley.hpp"
#include "circ/connection_set.hpp"
#include "circ/keyspace.hpp"
#include "circ/multiplier.hpp"

namespace circ {

enum class IsoReason { key_mismatch, multiplier_found, exhausted };
std::string_view to_string(IsoReason reason);

struct IsoVerdict {
    bool isomorphic = false;
    IsoReason reason = IsoReason::exhausted;
    Key key_s;
    Key key_t;
    std::optional<GenuineMultiplier> witness_multiplier;
};

enum class FastPath { none, zero_key, coset_case_i, coset_case_ii, coset_case_iii, reduction };
std::string_view to_string(FastPath path);

struct CiVerdict {
    bool is_ci = true;
    /// Present iff !is_ci: a T with Cay(S) ~ Cay(T) outside the Aut-orbit of S.
    std::optional<ConnectionSet> witness;
    FastPath fast_path = FastPath::none;
};

enum class CosetShape { none, case_i, case_ii, case_iii };
std::string_view to_string(CosetShape shape);

/// case_i:   S = H + s, H any subgroup.
/// case_ii:  S = (P + s) u (P - s), |P| an odd prime, P + s != P - s.
/// case_iii: S = (P + s) u (P - s) u {n/2}, same conditions on P and s.
struct CosetCase {
    CosetShape shape = CosetShape::none;
    ResidueSet subgroup;
    Int s = 0;
    /// Whether the shape alone certifies CI. Always true for cases i and ii;
    /// case iii additionally needs p^2 | n and <S> = Z_n.
    bool certifies_ci = false;
};

/// Per-modulus state: the key space, the unit group and lazily built
/// solving sets. Safe to share between threads.
class CiEngine {
public:
    explicit CiEngine(Int n, std::size_t materialize_limit = SolvingSet::default_materialize_limit);

    Int n() const { return keyspace_.n(); }
    const KeySpace& keyspace() const { return keyspace_; }
    const std::vector<Int>& units() const { return units_; }

    const SolvingSet& solving_set(const Key& k) const;

    Key key_of_set(const ConnectionSet& s) const;
    bool in_orbit(const ConnectionSet& s, const ConnectionSet& t) const;

    IsoVerdict muzychuk_isomorphic(const ConnectionSet& s, const ConnectionSet& t) const;

    /// {S^f : f in P(k(S))}, sorted. Every member is checked to share the key of S.
    std::vector<ConnectionSet> isomorphism_class(const ConnectionSet& s) const;

    /// Full solving-set scan in Z_n; never takes a fast path.
    CiVerdict is_ci(const ConnectionSet& s) const;

    std::optional<CiVerdict> zero_key_fast_path(const ConnectionSet& s) const;
    CosetCase recognize_coset_case(const ConnectionSet& s) const;

private:
    KeySpace keyspace_;
    std::vector<Int> units_;
    std::size_t materialize_limit_;
    mutable std::mutex mutex_;
    mutable std::map<Key, std::unique_ptr<SolvingSet>> solving_sets_;
};

/// Engines keyed by modulus, created on first use.
class EngineCache {
public:
    explicit EngineCache(std::size_t materialize_limit = SolvingSet::default_materialize_limit)
        : materialize_limit_(materialize_limit) {}

    const CiEngine& get(Int n);

private:
    std::size_t materialize_limit_;
    std::mutex mutex_;
    std::map<Int, std::unique_ptr<CiEngine>> engines_;
};

/// Process-wide cache used by the free-function forms below.
EngineCache& default_engines();

/// Decides CI inside <S> ~ Z_{n'} and lifts any witness back into Z_n.
CiVerdict is_ci_reduced(const ConnectionSet& s, EngineCache& engines);

/// Zero-key test, then coset shapes, then is_ci_reduced.
CiVerdict decide_ci(const ConnectionSet& s, EngineCache& engines);

IsoVerdict muzychuk_isomorphic(const ConnectionSet& s, const ConnectionSet& t);
std::vector<ConnectionSet> isomorphism_class(const ConnectionSet& s);
CiVerdict is_ci(const ConnectionSet& s);
CiVerdict is_ci_reduced(const ConnectionSet& s);
CiVerdict decide_ci(const ConnectionSet& s);
std::optional<CiVerdict> zero_key_fast_path(const ConnectionSet& s);
CosetCase recognize_coset_case(const ConnectionSet& s);

}  // namespace circ
