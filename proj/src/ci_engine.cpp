#include "circ/ci_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace circ {

std::string_view to_string(IsoReason reason) {
    switch (reason) {
        case IsoReason::key_mismatch: return "key-mismatch";
        case IsoReason::multiplier_found: return "multiplier-found";
        case IsoReason::exhausted: return "exhausted";
    }
    return "?";
}

std::string_view to_string(FastPath path) {
    switch (path) {
        case FastPath::none: return "none";
        case FastPath::zero_key: return "zero-key";
        case FastPath::coset_case_i: return "coset-case-i";
        case FastPath::coset_case_ii: return "coset-case-ii";
        case FastPath::coset_case_iii: return "coset-case-iii";
        case FastPath::reduction: return "reduction";
    }
    return "?";
}

std::string_view to_string(CosetShape shape) {
    switch (shape) {
        case CosetShape::none: return "none";
        case CosetShape::case_i: return "case-i";
        case CosetShape::case_ii: return "case-ii";
        case CosetShape::case_iii: return "case-iii";
    }
    return "?";
}

namespace {

void require_comparable(const ConnectionSet& s, const ConnectionSet& t) {
    if (s.n() != t.n()) throw std::domain_error("connection sets live in different groups");
    if (s.mode() != t.mode()) throw std::domain_error("connection sets have different modes");
}

ResidueSet shifted(const ResidueSet& base, Int shift, Int n) {
    ResidueSet out;
    out.reserve(base.size());
    for (Int h : base) out.push_back(mod(h + shift, n));
    std::sort(out.begin(), out.end());
    return out;
}

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// (P + s) u (P - s) with |P| an odd prime and P + s != P - s, if S has that shape.
std::optional<CosetCase> match_double_coset(const ResidueSet& members, Int n) {
    if (members.empty()) return std::nullopt;
    for (const Factorization f = Factorization::of(n); const auto& pp : f.parts()) {
        const Int p = pp.p;
        if (p == 2 || static_cast<Int>(members.size()) != 2 * p) continue;
        const auto subgroup = subgroup_of_order(n, p);
        const Int s = members.front();
        const auto plus = shifted(subgroup, s, n);
        const auto minus = shifted(subgroup, -s, n);
        if (plus == minus) continue;
        if (set_union(plus, minus) == members) return CosetCase{CosetShape::case_ii, subgroup, s, true};
    }
    return std::nullopt;
}

}  // namespace

CiEngine::CiEngine(Int n, std::size_t materialize_limit)
    : keyspace_(n), units_(circ::units(n)), materialize_limit_(materialize_limit) {}

const SolvingSet& CiEngine::solving_set(const Key& k) const {
    if (k.n() != n()) throw std::domain_error("key belongs to a different group");
    std::lock_guard lock(mutex_);
    auto it = solving_sets_.find(k);
    if (it == solving_sets_.end()) it = solving_sets_.emplace(k, std::make_unique<SolvingSet>(k, materialize_limit_)).first;
    return *it->second;
}

Key CiEngine::key_of_set(const ConnectionSet& s) const {
    if (s.n() != n()) throw std::domain_error("connection set belongs to a different group");
    return keyspace_.key_of_set(s);
}

bool CiEngine::in_orbit(const ConnectionSet& s, const ConnectionSet& t) const {
    if (s.size() != t.size()) return false;
    ResidueSet image(s.size());
    for (Int u : units_) {
        for (std::size_t i = 0; i < s.size(); ++i) image[i] = s.members()[i] * u % n();
        std::sort(image.begin(), image.end());
        if (image == t.members()) return true;
    }
    return false;
}

IsoVerdict CiEngine::muzychuk_isomorphic(const ConnectionSet& s, const ConnectionSet& t) const {
    require_comparable(s, t);
    Key ks = key_of_set(s);
    Key kt = key_of_set(t);
    if (ks != kt) return {false, IsoReason::key_mismatch, std::move(ks), std::move(kt), std::nullopt};
    const SolvingSet& solving = solving_set(ks);
    for (std::size_t i = 0; i < solving.size(); ++i) {
        if (solving.image(i, s.members()) == t.members())
            return {true, IsoReason::multiplier_found, std::move(ks), std::move(kt), solving.at(i)};
    }
    return {false, IsoReason::exhausted, std::move(ks), std::move(kt), std::nullopt};
}

std::vector<ConnectionSet> CiEngine::isomorphism_class(const ConnectionSet& s) const {
    const Key k = key_of_set(s);
    const SolvingSet& solving = solving_set(k);
    std::set<ResidueSet> images;
    for (std::size_t i = 0; i < solving.size(); ++i) images.insert(solving.image(i, s.members()));
    std::vector<ConnectionSet> out;
    out.reserve(images.size());
    for (const auto& img : images) {
        if (keyspace_.key_of_set(img) != k)
            throw std::logic_error("solving-set image of " + s.to_string() + " changed its key");
        out.emplace_back(n(), img, s.mode());
    }
    return out;
}

CiVerdict CiEngine::is_ci(const ConnectionSet& s) const {
    if (s.n() != n()) throw std::domain_error("connection set belongs to a different group");
    if (s.empty()) return {true, std::nullopt, FastPath::none};
    const Key k = key_of_set(s);
    const SolvingSet& solving = solving_set(k);
    const AutOrbit orbit = aut_orbit(s);
    for (std::size_t i = 0; i < solving.size(); ++i) {
        ResidueSet img = solving.image(i, s.members());
        if (std::binary_search(orbit.orbit.begin(), orbit.orbit.end(), ConnectionSet(n(), img, s.mode()))) continue;
        if (keyspace_.key_of_set(img) != k)
            throw std::logic_error("solving-set image of " + s.to_string() + " changed its key");
        return {false, ConnectionSet(n(), std::move(img), s.mode()), FastPath::none};
    }
    return {true, std::nullopt, FastPath::none};
}

std::optional<CiVerdict> CiEngine::zero_key_fast_path(const ConnectionSet& s) const {
    const Key k = key_of_set(s);
    const Factorization& f = keyspace_.factorization();
    if (k.is_zero() || (n() % 8 == 4 && k == almost_zero_key(f))) return CiVerdict{true, std::nullopt, FastPath::zero_key};
    return std::nullopt;
}

CosetCase CiEngine::recognize_coset_case(const ConnectionSet& s) const {
    const Int N = n();
    const auto& members = s.members();
    if (members.empty()) return {};

    // case i: S is a single coset of its stabilizer.
    ResidueSet stabilizer;
    for (Int h = 0; h < N; ++h)
        if (shifted(members, h, N) == members) stabilizer.push_back(h);
    if (stabilizer.size() == members.size()) return {CosetShape::case_i, stabilizer, members.front(), true};

    if (auto c = match_double_coset(members, N)) return *c;

    if (N % 2 == 0 && s.contains(N / 2)) {
        ResidueSet rest;
        std::copy_if(members.begin(), members.end(), std::back_inserter(rest), [&](Int x) { return x != N / 2; });
        if (auto c = match_double_coset(rest, N)) {
            const Int p = static_cast<Int>(c->subgroup.size());
            const bool certified = N % (p * p) == 0 && subgroup_generator(N, members) == 1;
            return {CosetShape::case_iii, c->subgroup, c->s, certified};
        }
    }
    return {};
}

const CiEngine& EngineCache::get(Int n) {
    std::lock_guard lock(mutex_);
    auto it = engines_.find(n);
    if (it == engines_.end()) it = engines_.emplace(n, std::make_unique<CiEngine>(n, materialize_limit_)).first;
    return *it->second;
}

EngineCache& default_engines() {
    static EngineCache cache;
    return cache;
}

CiVerdict is_ci_reduced(const ConnectionSet& s, EngineCache& engines) {
    if (s.empty()) return {true, std::nullopt, FastPath::none};
    const Int n = s.n();
    const Int g = subgroup_generator(n, s.members());
    if (g == 1) return engines.get(n).is_ci(s);

    std::vector<Int> reduced;
    for (Int x : s.members()) reduced.push_back(x / g);
    CiVerdict v = engines.get(n / g).is_ci(ConnectionSet(n / g, std::move(reduced), s.mode()));
    v.fast_path = FastPath::reduction;
    if (v.witness) {
        std::vector<Int> lifted;
        for (Int x : v.witness->members()) lifted.push_back(x * g);
        v.witness = ConnectionSet(n, std::move(lifted), s.mode());
    }
    return v;
}

CiVerdict decide_ci(const ConnectionSet& s, EngineCache& engines) {
    if (s.empty()) return {true, std::nullopt, FastPath::none};
    const CiEngine& engine = engines.get(s.n());
    if (auto v = engine.zero_key_fast_path(s)) return *v;
    const CosetCase c = engine.recognize_coset_case(s);
    if (c.certifies_ci) {
        switch (c.shape) {
            case CosetShape::case_i: return {true, std::nullopt, FastPath::coset_case_i};
            case CosetShape::case_ii: return {true, std::nullopt, FastPath::coset_case_ii};
            case CosetShape::case_iii: return {true, std::nullopt, FastPath::coset_case_iii};
            case CosetShape::none: break;
        }
    }
    return is_ci_reduced(s, engines);
}

IsoVerdict muzychuk_isomorphic(const ConnectionSet& s, const ConnectionSet& t) {
    require_comparable(s, t);
    return default_engines().get(s.n()).muzychuk_isomorphic(s, t);
}

std::vector<ConnectionSet> isomorphism_class(const ConnectionSet& s) {
    return default_engines().get(s.n()).isomorphism_class(s);
}

CiVerdict is_ci(const ConnectionSet& s) { return default_engines().get(s.n()).is_ci(s); }
CiVerdict is_ci_reduced(const ConnectionSet& s) { return is_ci_reduced(s, default_engines()); }
CiVerdict decide_ci(const ConnectionSet& s) { return decide_ci(s, default_engines()); }

std::optional<CiVerdict> zero_key_fast_path(const ConnectionSet& s) {
    return default_engines().get(s.n()).zero_key_fast_path(s);
}

CosetCase recognize_coset_case(const ConnectionSet& s) { return default_engines().get(s.n()).recognize_coset_case(s); }

}  // namespace circ
