#pragma once

// The key lattice K_n, key partitions Sigma(k), and the key of a partition or
// of a subset of Z_n.

#include <string>
#include <vector>

#include "circ/connection_set.hpp"
#include "circ/zn.hpp"

namespace circ {

/// One prime-power component (k_1, ..., k_t), 0 <= k_j < j, nondecreasing.
using KeyRow = std::vector<int>;

class Key {
public:
    /// Throws std::domain_error if the rows do not match the factorization or
    /// violate the defining constraints.
    Key(Factorization f, std::vector<KeyRow> rows);

    const Factorization& factorization() const { return f_; }
    Int n() const { return f_.n(); }
    const std::vector<KeyRow>& rows() const { return rows_; }
    const KeyRow& row(std::size_t i) const { return rows_[i]; }

    bool is_zero() const;

    /// Nested array in ascending-prime order, e.g. [[0,1],[0,0]].
    std::string to_string() const;

    bool operator==(const Key& o) const { return f_.n() == o.f_.n() && rows_ == o.rows_; }
    auto operator<=>(const Key& o) const { return rows_ <=> o.rows_; }

private:
    Factorization f_;
    std::vector<KeyRow> rows_;
};

bool is_valid_key_row(const KeyRow& row);

Key zero_key(const Factorization& f);
/// Zero except the (p = 2, j = 2) entry. Requires n = 4 (mod 8).
Key almost_zero_key(const Factorization& f);
/// Row i = (0, 1, ..., t_i - 1); the top of the lattice.
Key maximal_key(const Factorization& f);

/// Lexicographic; there are Catalan(t) of them. `p` does not affect the rows.
std::vector<KeyRow> enumerate_keys_prime_power(Int p, int t);
/// Cartesian product of the per-prime lists, first prime most significant.
std::vector<Key> enumerate_keys(const Factorization& f);

bool key_leq(const Key& a, const Key& b);
Key key_meet(const Key& a, const Key& b);
Key key_join(const Key& a, const Key& b);

/// A partition of {0..n-1}. Classes are sorted and ordered by least element,
/// so structural equality is partition equality.
class ZnPartition {
public:
    /// Throws std::domain_error unless the classes are disjoint, non-empty and
    /// cover Z_n.
    ZnPartition(Int n, std::vector<ResidueSet> classes);

    /// Groups elements by label; labels[x] is any identifier of x's class.
    static ZnPartition from_labels(std::span<const Int> labels);

    Int n() const { return n_; }
    const std::vector<ResidueSet>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    /// class_index()[x] is the position of x's class in classes().
    std::vector<Int> class_index() const;

    std::string to_string() const;

    bool operator==(const ZnPartition&) const = default;

private:
    Int n_ = 0;
    std::vector<ResidueSet> classes_;
};

ZnPartition key_partition_prime(const KeyRow& row, Int p, int t);
ZnPartition key_partition(const Key& k);

/// True iff every class of `coarse` is a union of classes of `fine`.
bool refines(const ZnPartition& fine, const ZnPartition& coarse);

/// Enumerates K_n once and keeps every key partition as a label array, so the
/// key of many partitions of the same Z_n can be computed cheaply.
class KeySpace {
public:
    explicit KeySpace(Int n);

    const Factorization& factorization() const { return f_; }
    Int n() const { return f_.n(); }
    const std::vector<Key>& keys() const { return keys_; }

    /// labels(i)[x] is an element of the Sigma(keys()[i]) class containing x.
    const std::vector<Int>& labels(std::size_t key_index) const { return labels_[key_index]; }

    /// The join of every key whose partition refines the given one. Throws
    /// std::logic_error if that join's partition does not refine it.
    Key key_of_partition(const ZnPartition& partition) const;
    Key key_of_labels(std::span<const Int> partition_labels) const;

    /// Key of {S, Z_n \ S}. Throws std::domain_error for empty S.
    Key key_of_set(std::span<const Int> members) const;
    Key key_of_set(const ConnectionSet& s) const { return key_of_set(s.members()); }

private:
    Factorization f_;
    std::vector<Key> keys_;
    std::vector<std::vector<Int>> labels_;
};

Key key_of_partition(const ZnPartition& partition);
Key key_of_set(const ConnectionSet& s);

}  // namespace circ
