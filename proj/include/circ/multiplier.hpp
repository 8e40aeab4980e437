#pragma once

// Generalized multipliers, their functions f_m on Z_n, and solving sets P(k).
//
// Rows keep the index convention m_1 .. m_t: digit x_i of the p-adic
// expansion is multiplied by m_{t-i}.

#include <cstddef>
#include <string>
#include <vector>

#include "circ/keyspace.hpp"
#include "circ/zn.hpp"

namespace circ {

using MultiplierRow = std::vector<Int>;

class GeneralizedMultiplier {
public:
    /// Throws std::domain_error on shape mismatch or an entry divisible by its prime.
    GeneralizedMultiplier(Factorization f, std::vector<MultiplierRow> rows);

    static GeneralizedMultiplier identity(const Factorization& f);

    const Factorization& factorization() const { return f_; }
    Int n() const { return f_.n(); }
    const std::vector<MultiplierRow>& rows() const { return rows_; }

    Int apply(Int x) const;
    /// Permutation table x -> x^f over Z_n.
    std::vector<Int> table() const;

    std::string to_string() const;

    bool operator==(const GeneralizedMultiplier& o) const { return f_.n() == o.f_.n() && rows_ == o.rows_; }

private:
    Factorization f_;
    std::vector<MultiplierRow> rows_;
};

/// A generalized multiplier in the normal form of Z_n**(k)°.
class GenuineMultiplier {
public:
    /// Throws std::domain_error unless `m` satisfies the congruence chain and
    /// the genuine range for `k`.
    GenuineMultiplier(GeneralizedMultiplier m, Key k);

    const GeneralizedMultiplier& multiplier() const { return m_; }
    const Key& key() const { return k_; }
    Int apply(Int x) const { return m_.apply(x); }

private:
    GeneralizedMultiplier m_;
    Key k_;
};

bool is_genuine_row(const MultiplierRow& m, const KeyRow& k, Int p);

/// x^{f_m} = sum_i m_{t-i} x_i p^i (mod p^t).
Int apply_multiplier_prime(const MultiplierRow& row, Int p, int t, Int x);
Residue apply_multiplier(const GeneralizedMultiplier& m, Residue x);

/// Z_{p^t}**(k)° in lexicographic order.
std::vector<MultiplierRow> genuine_multipliers_prime_power(const KeyRow& row, Int p, int t);

/// P(k): the Cartesian product of the per-prime genuine lists, indexed in
/// lexicographic order with the first prime most significant. Permutation
/// tables are materialized up front when size() <= materialize_limit and
/// computed on demand otherwise.
class SolvingSet {
public:
    static constexpr std::size_t default_materialize_limit = 10000;

    explicit SolvingSet(Key k, std::size_t materialize_limit = default_materialize_limit);

    const Key& key() const { return key_; }
    Int n() const { return key_.n(); }
    std::size_t size() const { return size_; }
    bool materialized() const { return !tables_.empty() || size_ == 0; }

    GenuineMultiplier at(std::size_t index) const;
    std::vector<Int> permutation(std::size_t index) const;

    /// Image of a sorted set under f_{at(index)}, sorted.
    ResidueSet image(std::size_t index, std::span<const Int> members) const;

    const std::vector<std::vector<MultiplierRow>>& per_prime() const { return per_prime_; }

private:
    std::vector<std::size_t> digits(std::size_t index) const;
    Int apply(const std::vector<std::size_t>& digits, Int x) const;

    Key key_;
    std::vector<std::vector<MultiplierRow>> per_prime_;
    // per_prime_tables_[i][r][y]: row r of prime i applied to y in Z_{q_i}.
    std::vector<std::vector<std::vector<Int>>> per_prime_tables_;
    std::vector<Int> crt_basis_;
    std::size_t size_ = 1;
    std::vector<std::vector<Int>> tables_;
};

SolvingSet solving_set(const Key& k, std::size_t materialize_limit = SolvingSet::default_materialize_limit);

}  // namespace circ
