#include "circ/connection_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace circ {

std::string_view to_string(Mode mode) { return mode == Mode::graph ? "graph" : "digraph"; }

Mode parse_mode(std::string_view text) {
    if (text == "graph") return Mode::graph;
    if (text == "digraph") return Mode::digraph;
    throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected graph or digraph)");
}

ConnectionSet::ConnectionSet(Int n, std::vector<Int> members, Mode mode) : n_(n), mode_(mode) {
    if (n < 2) throw std::domain_error("modulus must be at least 2");
    for (Int& s : members) s = mod(s, n);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.front() == 0)
        throw std::domain_error("connection set must not contain 0");
    members_ = std::move(members);
    if (mode_ == Mode::graph && !inverse_closed())
        throw std::domain_error("graph-mode connection set " + to_string() + " is not inverse-closed mod " +
                                std::to_string(n_));
}

ConnectionSet ConnectionSet::parse(Int n, std::string_view text, Mode mode, bool close_inverses) {
    std::vector<Int> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("bad residue '" + std::string(token) + "' in set '" + std::string(text) + "'");
        if (v < 0 || v >= n)
            throw std::invalid_argument("residue " + std::to_string(v) + " is outside 0.." + std::to_string(n - 1));
        values.push_back(v);
        pos = end + 1;
    }
    if (close_inverses) {
        const std::size_t count = values.size();
        for (std::size_t i = 0; i < count; ++i) values.push_back(mod(-values[i], n));
    }
    return ConnectionSet(n, std::move(values), mode);
}

bool ConnectionSet::contains(Int x) const { return std::binary_search(members_.begin(), members_.end(), x); }

bool ConnectionSet::inverse_closed() const {
    return std::all_of(members_.begin(), members_.end(), [&](Int s) { return contains(mod(-s, n_)); });
}

ConnectionSet ConnectionSet::scaled(Int u) const {
    std::vector<Int> image;
    image.reserve(members_.size());
    for (Int s : members_) image.push_back(s * u % n_);
    return ConnectionSet(n_, std::move(image), mode_);
}

std::string ConnectionSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

}  // namespace circ
