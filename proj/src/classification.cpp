#include "circ/classification.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace circ {

namespace {

bool odd_prime_square_below(Int n, double bound) {
    for (const Factorization f = Factorization::of(n); const auto& pp : f.parts())
        if (pp.p != 2 && pp.t >= 2 && static_cast<double>(pp.p) < bound) return true;
    return false;
}

bool is_exceptional_ci(Int n) { return n == 8 || n == 9 || n == 18; }

EngineCache& engines_of(const SweepOptions& options) {
    return options.engines ? *options.engines : default_engines();
}

// Blocks that an inverse-closed set is a union of: {x, -x} and {n/2}.
std::vector<ResidueSet> inverse_blocks(Int n) {
    std::vector<ResidueSet> blocks;
    for (Int x = 1; 2 * x < n; ++x) blocks.push_back({x, n - x});
    if (n % 2 == 0) blocks.push_back({n / 2});
    return blocks;
}

template <class Visit>
void choose_blocks(const std::vector<ResidueSet>& blocks, std::size_t start, Int remaining, ResidueSet& current,
                   Visit&& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (std::size_t b = start; b < blocks.size(); ++b) {
        const Int size = static_cast<Int>(blocks[b].size());
        if (size > remaining) continue;
        current.insert(current.end(), blocks[b].begin(), blocks[b].end());
        choose_blocks(blocks, b + 1, remaining - size, current, visit);
        current.resize(current.size() - static_cast<std::size_t>(size));
    }
}

}  // namespace

bool predicate_mdci(Int n, Int m) {
    if (m < 3) throw std::domain_error("predicate stated only for m >= 3");
    if (n % 8 == 0) return false;
    return !odd_prime_square_below(n, static_cast<double>(m));
}

bool predicate_mci(Int n, Int m) {
    if (m < 6) throw std::domain_error("predicate stated only for m >= 6");
    if (is_exceptional_ci(n)) return true;
    if (n % 8 == 0) return false;
    return !odd_prime_square_below(n, static_cast<double>(m - 1) / 2.0);
}

bool predicate_dci_group(Int n) {
    for (const Factorization f = Factorization::of(n); const auto& pp : f.parts()) {
        if (pp.p == 2 && pp.t > 2) return false;
        if (pp.p != 2 && pp.t > 1) return false;
    }
    return true;
}

bool predicate_ci_group(Int n) { return is_exceptional_ci(n) || predicate_dci_group(n); }

std::optional<bool> group_predicate(Int n, Int m, Mode mode) {
    if (mode == Mode::digraph && m >= 3) return predicate_mdci(n, m);
    if (mode == Mode::graph && m >= 6) return predicate_mci(n, m);
    return std::nullopt;
}

std::vector<ConnectionSet> orbit_representatives(Int n, Int m, Mode mode) {
    if (n < 2) throw std::domain_error("modulus must be at least 2");
    std::vector<ConnectionSet> out;
    if (m < 0 || m > n - 1) return out;
    const auto unit_list = units(n);
    auto keep = [&](const ResidueSet& members) {
        ResidueSet sorted = members;
        std::sort(sorted.begin(), sorted.end());
        ConnectionSet s(n, std::move(sorted), mode);
        if (is_orbit_representative(s, unit_list)) out.push_back(std::move(s));
    };
    if (mode == Mode::graph) {
        ResidueSet current;
        choose_blocks(inverse_blocks(n), 0, m, current, keep);
    } else {
        ResidueSet current;
        auto rec = [&](auto&& self, Int next) -> void {
            if (static_cast<Int>(current.size()) == m) {
                keep(current);
                return;
            }
            for (Int x = next; x <= n - 1 - (m - static_cast<Int>(current.size()) - 1); ++x) {
                current.push_back(x);
                self(self, x + 1);
                current.pop_back();
            }
        };
        rec(rec, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassificationReport m_property(Int n, Int m, Mode mode, const SweepOptions& options) {
    if (n < 2) throw std::domain_error("modulus must be at least 2");
    if (m < 1 || m > n - 1) throw std::domain_error("valency must lie in 1..n-1");
    EngineCache& engines = engines_of(options);
    const auto reps = orbit_representatives(n, m, mode);

    std::vector<std::optional<ConnectionSet>> witness(reps.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < reps.size(); i = next++) witness[i] = decide_ci(reps[i], engines).witness;
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(reps.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    ClassificationReport report;
    report.n = n;
    report.m = m;
    report.mode = mode;
    report.sets_checked = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (witness[i]) report.counterexamples.push_back({reps[i], *witness[i]});
    report.property_holds = report.counterexamples.empty();
    return report;
}

ClassificationReport is_m_group(Int n, Int m, Mode mode, const SweepOptions& options) {
    if (n < 2) throw std::domain_error("modulus must be at least 2");
    if (m < 1) throw std::domain_error("valency must be positive");
    ClassificationReport report;
    report.n = n;
    report.m = m;
    report.mode = mode;
    for (Int i = 1; i <= std::min(m, n - 1); ++i) {
        ClassificationReport level = m_property(n, i, mode, options);
        report.sets_checked += level.sets_checked;
        if (!level.property_holds) {
            report.property_holds = false;
            report.failing_valency = i;
            report.counterexamples = std::move(level.counterexamples);
            break;
        }
    }
    report.predicate_value = group_predicate(n, m, mode);
    report.agreement = !report.predicate_value || *report.predicate_value == report.property_holds;
    return report;
}

std::vector<WitnessFamily> witnesses(Int n, Mode mode) {
    const Factorization f = Factorization::of(n);
    std::vector<WitnessFamily> out;
    auto lift = [&](Int p2, std::vector<Int> members) {
        for (Int& x : members) x *= n / p2;
        return ConnectionSet(n, std::move(members), mode);
    };

    if (mode == Mode::digraph) {
        if (n % 8 == 0) out.push_back({"Z8 {1,2,5} lifted", lift(8, {1, 2, 5})});
        for (const auto& pp : f.parts()) {
            if (pp.p == 2 || pp.t < 2) continue;
            const Int p = pp.p;
            std::vector<Int> members{p};
            for (Int i = 0; i < p; ++i) members.push_back(1 + i * p);
            out.push_back({"(<p>+1) u {p}, p=" + std::to_string(p), lift(p * p, members)});
        }
        return out;
    }

    if (is_exceptional_ci(n)) return out;
    if (n % 8 == 0)
        out.push_back({"{1,-1,2,-2,n/2-1,n/2+1}",
                       ConnectionSet(n, {1, n - 1, 2, n - 2, n / 2 - 1, n / 2 + 1}, mode)});
    if (n % 9 == 0)
        out.push_back({"{1,-1,3,-3,n/3+1,n/3-1,2n/3+1,2n/3-1}",
                       ConnectionSet(n, {1, n - 1, 3, n - 3, n / 3 + 1, n / 3 - 1, 2 * n / 3 + 1, 2 * n / 3 - 1}, mode)});
    for (const auto& pp : f.parts()) {
        if (pp.p < 5 || pp.t < 2) continue;
        const Int p = pp.p, q = p * p;
        std::vector<Int> members{p, q - p};
        for (Int i = 0; i < p; ++i) {
            members.push_back(1 + i * p);
            members.push_back(mod(-1 + i * p, q));
        }
        out.push_back({"(<p>+1) u (<p>-1) u {p,-p}, p=" + std::to_string(p), lift(q, members)});
    }
    return out;
}

std::vector<ClassificationReport> verify_theorems(Int n_max, Int m_max, Mode mode, const SweepOptions& options) {
    const Int m_min = mode == Mode::digraph ? 3 : 6;
    std::vector<ClassificationReport> out;
    for (Int n = 2; n <= n_max; ++n) {
        // First failing valency up to min(m_max, n-1), with its counterexamples.
        std::optional<ClassificationReport> failure;
        std::size_t checked = 0;
        for (Int i = 1; i <= std::min(m_max, n - 1); ++i) {
            ClassificationReport level = m_property(n, i, mode, options);
            checked += level.sets_checked;
            if (!level.property_holds) {
                failure = std::move(level);
                break;
            }
        }
        for (Int m = m_min; m <= m_max; ++m) {
            ClassificationReport cell;
            cell.n = n;
            cell.m = m;
            cell.mode = mode;
            cell.sets_checked = checked;
            if (failure && failure->m <= m) {
                cell.property_holds = false;
                cell.failing_valency = failure->m;
                cell.counterexamples = failure->counterexamples;
            }
            cell.predicate_value = group_predicate(n, m, mode);
            cell.agreement = !cell.predicate_value || *cell.predicate_value == cell.property_holds;
            out.push_back(std::move(cell));
        }
    }
    return out;
}

}  // namespace circ
