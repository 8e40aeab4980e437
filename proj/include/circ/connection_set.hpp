#pragma once

#include <string>
#include <string_view>

#include "circ/zn.hpp"

namespace circ {

enum class Mode { digraph, graph };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// A subset of Z_n \ {0} defining a circulant. In graph mode the set must be
/// inverse-closed.
class ConnectionSet {
public:
    ConnectionSet() = default;

    /// Reduces members mod n, sorts and dedupes. Throws std::domain_error when
    /// 0 is a member or, in graph mode, when S != -S.
    ConnectionSet(Int n, std::vector<Int> members, Mode mode = Mode::digraph);

    /// Parses "1,2,5" (empty string is the empty set). With close_inverses,
    /// -s is added for every s before the graph-mode check.
    static ConnectionSet parse(Int n, std::string_view text, Mode mode, bool close_inverses = false);

    Int n() const { return n_; }
    Mode mode() const { return mode_; }
    const ResidueSet& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Int x) const;
    bool inverse_closed() const;

    /// {u*s : s in S}; u must be a unit mod n.
    ConnectionSet scaled(Int u) const;

    std::string to_string() const;

    bool operator==(const ConnectionSet& o) const { return n_ == o.n_ && members_ == o.members_; }
    auto operator<=>(const ConnectionSet& o) const { return members_ <=> o.members_; }

private:
    Int n_ = 0;
    ResidueSet members_;
    Mode mode_ = Mode::digraph;
};

}  // namespace circ
