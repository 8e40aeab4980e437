#include "circ/keyspace.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace circ {

namespace {

std::string row_list(const std::vector<std::vector<int>>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(rows[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

void require_same(const Key& a, const Key& b) {
    if (a.n() != b.n()) throw std::domain_error("keys belong to different key spaces");
}

// Valuation-based order exponent: x != 0 in Z_{p^t} has order p^alpha.
int order_exponent(Int x, Int p, int t) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return t - v;
}

// A member of the class P_{k_alpha(x)} + x of Sigma(row) in Z_{p^t}.
Int prime_label(const KeyRow& row, Int p, int t, Int x) {
    if (x == 0) return 0;
    const int alpha = order_exponent(x, p, t);
    const int j = row[static_cast<std::size_t>(alpha - 1)];
    return x % ipow(p, t - j);
}

std::vector<Int> key_labels(const Key& k) {
    const Factorization& f = k.factorization();
    const Int n = f.n();
    std::vector<Int> labels(static_cast<std::size_t>(n));
    std::vector<Residue> comps(f.size());
    for (Int x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& pp = f[i];
            comps[i] = {prime_label(k.row(i), pp.p, pp.t, x % pp.q), pp.q};
        }
        labels[static_cast<std::size_t>(x)] = crt_decode(comps, f).value;
    }
    return labels;
}

// Sigma(labels) refines the partition given by `pi`.
bool labels_refine(const std::vector<Int>& labels, std::span<const Int> pi) {
    for (std::size_t x = 0; x < labels.size(); ++x)
        if (pi[x] != pi[static_cast<std::size_t>(labels[x])]) return false;
    return true;
}

}  // namespace

bool is_valid_key_row(const KeyRow& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] < 0 || row[j] >= static_cast<int>(j + 1)) return false;
        if (j + 1 < row.size() && row[j] > row[j + 1]) return false;
    }
    return true;
}

Key::Key(Factorization f, std::vector<KeyRow> rows) : f_(std::move(f)), rows_(std::move(rows)) {
    if (rows_.size() != f_.size())
        throw std::domain_error("key has " + std::to_string(rows_.size()) + " rows, expected " +
                                std::to_string(f_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != static_cast<std::size_t>(f_[i].t))
            throw std::domain_error("key row " + std::to_string(i) + " has the wrong length");
        if (!is_valid_key_row(rows_[i]))
            throw std::domain_error("key row " + std::to_string(i) + " violates 0 <= k_j < j or monotonicity");
    }
}

bool Key::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const KeyRow& r) { return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; }); });
}

std::string Key::to_string() const { return row_list(rows_); }

Key zero_key(const Factorization& f) {
    std::vector<KeyRow> rows;
    for (const auto& pp : f.parts()) rows.emplace_back(static_cast<std::size_t>(pp.t), 0);
    return Key(f, std::move(rows));
}

Key almost_zero_key(const Factorization& f) {
    if (f.n() % 8 != 4) throw std::domain_error("almost zero key requires n = 4 (mod 8)");
    std::vector<KeyRow> rows;
    for (const auto& pp : f.parts()) {
        KeyRow row(static_cast<std::size_t>(pp.t), 0);
        if (pp.q == 4) row[1] = 1;
        rows.push_back(std::move(row));
    }
    return Key(f, std::move(rows));
}

Key maximal_key(const Factorization& f) {
    std::vector<KeyRow> rows;
    for (const auto& pp : f.parts()) {
        KeyRow row;
        for (int j = 0; j < pp.t; ++j) row.push_back(j);
        rows.push_back(std::move(row));
    }
    return Key(f, std::move(rows));
}

std::vector<KeyRow> enumerate_keys_prime_power(Int /*p*/, int t) {
    std::vector<KeyRow> out;
    KeyRow row(static_cast<std::size_t>(t), 0);
    auto extend = [&](auto&& self, int j, int floor) -> void {
        if (j == t) {
            out.push_back(row);
            return;
        }
        for (int v = floor; v <= j; ++v) {  // position j holds k_{j+1} < j+1
            row[static_cast<std::size_t>(j)] = v;
            self(self, j + 1, v);
        }
    };
    extend(extend, 0, 0);
    return out;
}

std::vector<Key> enumerate_keys(const Factorization& f) {
    std::vector<std::vector<KeyRow>> per_prime;
    for (const auto& pp : f.parts()) per_prime.push_back(enumerate_keys_prime_power(pp.p, pp.t));
    std::vector<Key> out;
    std::vector<std::size_t> idx(per_prime.size(), 0);
    while (true) {
        std::vector<KeyRow> rows;
        for (std::size_t i = 0; i < per_prime.size(); ++i) rows.push_back(per_prime[i][idx[i]]);
        out.emplace_back(f, std::move(rows));
        std::size_t i = per_prime.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per_prime[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (per_prime.empty()) return out;
    }
}

bool key_leq(const Key& a, const Key& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.rows().size(); ++i)
        for (std::size_t j = 0; j < a.row(i).size(); ++j)
            if (a.row(i)[j] > b.row(i)[j]) return false;
    return true;
}

Key key_meet(const Key& a, const Key& b) {
    require_same(a, b);
    auto rows = a.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = std::min(rows[i][j], b.row(i)[j]);
    return Key(a.factorization(), std::move(rows));
}

Key key_join(const Key& a, const Key& b) {
    require_same(a, b);
    auto rows = a.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = std::max(rows[i][j], b.row(i)[j]);
    return Key(a.factorization(), std::move(rows));
}

ZnPartition::ZnPartition(Int n, std::vector<ResidueSet> classes) : n_(n) {
    if (n < 1) throw std::domain_error("partition modulus must be positive");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t total = 0;
    for (auto& c : classes) {
        if (c.empty()) throw std::domain_error("partition classes must be non-empty");
        std::sort(c.begin(), c.end());
        for (Int x : c) {
            if (x < 0 || x >= n) throw std::domain_error("partition element outside Z_n");
            if (seen[static_cast<std::size_t>(x)]++) throw std::domain_error("partition classes overlap");
            ++total;
        }
    }
    if (total != static_cast<std::size_t>(n)) throw std::domain_error("partition does not cover Z_n");
    std::sort(classes.begin(), classes.end(), [](const ResidueSet& a, const ResidueSet& b) { return a[0] < b[0]; });
    classes_ = std::move(classes);
}

ZnPartition ZnPartition::from_labels(std::span<const Int> labels) {
    std::map<Int, ResidueSet> groups;
    for (std::size_t x = 0; x < labels.size(); ++x) groups[labels[x]].push_back(static_cast<Int>(x));
    std::vector<ResidueSet> classes;
    classes.reserve(groups.size());
    for (auto& [label, members] : groups) classes.push_back(std::move(members));
    return ZnPartition(static_cast<Int>(labels.size()), std::move(classes));
}

std::vector<Int> ZnPartition::class_index() const {
    std::vector<Int> idx(static_cast<std::size_t>(n_));
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (Int x : classes_[c]) idx[static_cast<std::size_t>(x)] = static_cast<Int>(c);
    return idx;
}

std::string ZnPartition::to_string() const {
    std::string out = "[";
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (c) out += ",";
        out += "[";
        for (std::size_t i = 0; i < classes_[c].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(classes_[c][i]);
        }
        out += "]";
    }
    return out + "]";
}

ZnPartition key_partition_prime(const KeyRow& row, Int p, int t) {
    if (static_cast<int>(row.size()) != t || !is_valid_key_row(row))
        throw std::domain_error("row is not a key of K_{p^t}");
    const Int q = ipow(p, t);
    std::vector<Int> labels(static_cast<std::size_t>(q));
    for (Int x = 0; x < q; ++x) labels[static_cast<std::size_t>(x)] = prime_label(row, p, t, x);
    return ZnPartition::from_labels(labels);
}

ZnPartition key_partition(const Key& k) { return ZnPartition::from_labels(key_labels(k)); }

bool refines(const ZnPartition& fine, const ZnPartition& coarse) {
    if (fine.n() != coarse.n()) throw std::domain_error("partitions of different groups");
    const auto coarse_idx = coarse.class_index();
    for (const auto& c : fine.classes())
        for (Int x : c)
            if (coarse_idx[static_cast<std::size_t>(x)] != coarse_idx[static_cast<std::size_t>(c.front())]) return false;
    return true;
}

KeySpace::KeySpace(Int n) : f_(Factorization::of(n)), keys_(enumerate_keys(f_)) {
    labels_.reserve(keys_.size());
    for (const auto& k : keys_) labels_.push_back(key_labels(k));
}

Key KeySpace::key_of_labels(std::span<const Int> partition_labels) const {
    if (static_cast<Int>(partition_labels.size()) != n())
        throw std::domain_error("partition is not a partition of Z_" + std::to_string(n()));
    std::optional<Key> join;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (!labels_refine(labels_[i], partition_labels)) continue;
        join = join ? key_join(*join, keys_[i]) : keys_[i];
    }
    // The zero key's partition is all singletons, so `join` is always set.
    const auto it = std::find(keys_.begin(), keys_.end(), *join);
    if (!labels_refine(labels_[static_cast<std::size_t>(it - keys_.begin())], partition_labels))
        throw std::logic_error("join of refining keys " + join->to_string() + " does not refine the partition");
    return *join;
}

Key KeySpace::key_of_partition(const ZnPartition& partition) const {
    const auto idx = partition.class_index();
    return key_of_labels(idx);
}

Key KeySpace::key_of_set(std::span<const Int> members) const {
    if (members.empty()) throw std::domain_error("key of the empty set is undefined");
    std::vector<Int> in_set(static_cast<std::size_t>(n()), 0);
    for (Int s : members) in_set[static_cast<std::size_t>(mod(s, n()))] = 1;
    return key_of_labels(in_set);
}

Key key_of_partition(const ZnPartition& partition) {
    if (partition.n() < 2) throw std::domain_error("modulus must be at least 2");
    return KeySpace(partition.n()).key_of_partition(partition);
}

Key key_of_set(const ConnectionSet& s) { return KeySpace(s.n()).key_of_set(s); }

}  // namespace circ
