#pragma once

// Cayley digraphs over Z_n, Aut(Z_n)-orbits of connection sets, and an
// isomorphism oracle that knows nothing about keys or multipliers.

#include <optional>
#include <stdexcept>
#include <vector>

#include "circ/connection_set.hpp"

namespace circ {

class CayleyDigraph {
public:
    explicit CayleyDigraph(ConnectionSet s);

    Int n() const { return s_.n(); }
    const ConnectionSet& connection() const { return s_; }
    Mode mode() const { return s_.mode(); }

    bool has_arc(Int from, Int to) const {
        return adjacency_[static_cast<std::size_t>(from * n() + to)] != 0;
    }
    const std::vector<Int>& out_neighbors(Int g) const { return out_[static_cast<std::size_t>(g)]; }
    const std::vector<Int>& in_neighbors(Int g) const { return in_[static_cast<std::size_t>(g)]; }
    std::size_t arc_count() const { return static_cast<std::size_t>(n()) * s_.size(); }

private:
    ConnectionSet s_;
    std::vector<char> adjacency_;  // row-major n x n
    std::vector<std::vector<Int>> out_;
    std::vector<std::vector<Int>> in_;
};

inline CayleyDigraph build_cayley(ConnectionSet s) { return CayleyDigraph(std::move(s)); }

struct AutOrbit {
    std::vector<ConnectionSet> orbit;  // sorted, distinct
    ConnectionSet representative;      // lexicographically least member

    bool contains(const ConnectionSet& s) const;
};

/// {u*S : u a unit mod n}.
AutOrbit aut_orbit(const ConnectionSet& s);

/// True iff S is the lexicographically least member of its orbit.
bool is_orbit_representative(const ConnectionSet& s, std::span<const Int> units);

class OracleCutoffExceeded : public std::runtime_error {
public:
    OracleCutoffExceeded(Int n, Int cutoff);
};

struct OracleResult {
    bool isomorphic = false;
    std::optional<std::vector<Int>> bijection;  // vertex of a -> vertex of b
    std::size_t nodes = 0;                      // search-tree nodes visited
};

inline constexpr Int default_oracle_cutoff = 12;

/// Exact digraph isomorphism by individualization and colour refinement.
/// Throws std::domain_error when n or mode differ and OracleCutoffExceeded
/// when n > cutoff.
OracleResult brute_force_isomorphic(const CayleyDigraph& a, const CayleyDigraph& b,
                                    Int cutoff = default_oracle_cutoff);

}  // namespace circ
