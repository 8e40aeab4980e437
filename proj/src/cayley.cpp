#include "circ/cayley.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace circ {

CayleyDigraph::CayleyDigraph(ConnectionSet s) : s_(std::move(s)) {
    const Int n = s_.n();
    adjacency_.assign(static_cast<std::size_t>(n * n), 0);
    out_.resize(static_cast<std::size_t>(n));
    in_.resize(static_cast<std::size_t>(n));
    for (Int g = 0; g < n; ++g) {
        for (Int x : s_.members()) {
            const Int h = (x + g) % n;  // arc (g, s + g)
            adjacency_[static_cast<std::size_t>(g * n + h)] = 1;
            out_[static_cast<std::size_t>(g)].push_back(h);
            in_[static_cast<std::size_t>(h)].push_back(g);
        }
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
}

bool AutOrbit::contains(const ConnectionSet& s) const { return std::binary_search(orbit.begin(), orbit.end(), s); }

AutOrbit aut_orbit(const ConnectionSet& s) {
    AutOrbit result;
    for (Int u : units(s.n())) result.orbit.push_back(s.scaled(u));
    std::sort(result.orbit.begin(), result.orbit.end());
    result.orbit.erase(std::unique(result.orbit.begin(), result.orbit.end()), result.orbit.end());
    result.representative = result.orbit.front();
    return result;
}

bool is_orbit_representative(const ConnectionSet& s, std::span<const Int> unit_list) {
    const Int n = s.n();
    ResidueSet image(s.size());
    for (Int u : unit_list) {
        for (std::size_t i = 0; i < s.size(); ++i) image[i] = s.members()[i] * u % n;
        std::sort(image.begin(), image.end());
        if (image < s.members()) return false;
    }
    return true;
}

OracleCutoffExceeded::OracleCutoffExceeded(Int n, Int cutoff)
    : std::runtime_error("oracle cutoff exceeded: n = " + std::to_string(n) + " > " + std::to_string(cutoff)) {}

namespace {

// Colours live on the disjoint union: vertex v of `a` is v, vertex w of `b`
// is n + w. Refinement ranks signatures jointly so both sides stay comparable.
class IsoSearch {
public:
    IsoSearch(const CayleyDigraph& a, const CayleyDigraph& b) : a_(a), b_(b), n_(a.n()) {}

    OracleResult run() {
        OracleResult result;
        std::vector<int> colours(static_cast<std::size_t>(2 * n_), 0);
        result.isomorphic = search(colours, result);
        return result;
    }

private:
    const std::vector<Int>& out(Int v) const { return v < n_ ? a_.out_neighbors(v) : b_.out_neighbors(v - n_); }
    const std::vector<Int>& in(Int v) const { return v < n_ ? a_.in_neighbors(v) : b_.in_neighbors(v - n_); }

    // Returns false when the two sides end up with different colour counts.
    bool refine(std::vector<int>& colours) const {
        std::size_t classes = 0;
        while (true) {
            using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
            std::vector<Signature> sig(colours.size());
            for (Int v = 0; v < 2 * n_; ++v) {
                const Int offset = v < n_ ? 0 : n_;
                std::vector<int> o, i;
                for (Int w : out(v)) o.push_back(colours[static_cast<std::size_t>(w + offset)]);
                for (Int w : in(v)) i.push_back(colours[static_cast<std::size_t>(w + offset)]);
                std::sort(o.begin(), o.end());
                std::sort(i.begin(), i.end());
                sig[static_cast<std::size_t>(v)] = {colours[static_cast<std::size_t>(v)], std::move(o), std::move(i)};
            }
            std::map<Signature, int> rank;
            for (const auto& s : sig) rank.emplace(s, 0);
            int next = 0;
            for (auto& [s, r] : rank) r = next++;
            for (std::size_t v = 0; v < colours.size(); ++v) colours[v] = rank[sig[v]];

            std::vector<int> balance(rank.size(), 0);
            for (Int v = 0; v < 2 * n_; ++v) balance[static_cast<std::size_t>(colours[static_cast<std::size_t>(v)])] += v < n_ ? 1 : -1;
            if (std::any_of(balance.begin(), balance.end(), [](int c) { return c != 0; })) return false;
            if (rank.size() == classes) return true;
            classes = rank.size();
        }
    }

    bool search(std::vector<int> colours, OracleResult& result) {
        ++result.nodes;
        if (!refine(colours)) return false;

        std::map<int, std::vector<Int>> cells_a, cells_b;
        for (Int v = 0; v < n_; ++v) cells_a[colours[static_cast<std::size_t>(v)]].push_back(v);
        for (Int w = 0; w < n_; ++w) cells_b[colours[static_cast<std::size_t>(w + n_)]].push_back(w);

        const std::vector<Int>* target = nullptr;
        int target_colour = -1;
        for (const auto& [c, cell] : cells_a) {
            if (cell.size() > 1 && (!target || cell.size() < target->size())) {
                target = &cell;
                target_colour = c;
            }
        }
        if (!target) {
            std::vector<Int> map(static_cast<std::size_t>(n_));
            for (const auto& [c, cell] : cells_a) map[static_cast<std::size_t>(cell[0])] = cells_b[c][0];
            for (Int v = 0; v < n_; ++v)
                for (Int w = 0; w < n_; ++w)
                    if (a_.has_arc(v, w) != b_.has_arc(map[static_cast<std::size_t>(v)], map[static_cast<std::size_t>(w)]))
                        return false;
            result.bijection = std::move(map);
            return true;
        }

        const Int v = target->front();
        const int fresh = static_cast<int>(cells_a.size());
        for (Int w : cells_b[target_colour]) {
            std::vector<int> next = colours;
            next[static_cast<std::size_t>(v)] = fresh;
            next[static_cast<std::size_t>(w + n_)] = fresh;
            if (search(std::move(next), result)) return true;
        }
        return false;
    }

    const CayleyDigraph& a_;
    const CayleyDigraph& b_;
    Int n_;
};

}  // namespace

OracleResult brute_force_isomorphic(const CayleyDigraph& a, const CayleyDigraph& b, Int cutoff) {
    if (a.n() != b.n()) throw std::domain_error("oracle needs digraphs on the same vertex set");
    if (a.mode() != b.mode()) throw std::domain_error("oracle needs both sides in the same mode");
    if (a.n() > cutoff) throw OracleCutoffExceeded(a.n(), cutoff);
    if (a.connection().size() != b.connection().size()) return {};
    return IsoSearch(a, b).run();
}

}  // namespace circ
