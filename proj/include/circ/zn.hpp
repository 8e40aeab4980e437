#pragma once

// Exact arithmetic over the cyclic group Z_n.
//
// Elements are always stored as canonical residues 0..n-1. The CRT tuple
// (x_1, ..., x_l) over the prime-power components is a derived view.

#include <cstdint>
#include <span>
#include <vector>

namespace circ {

using Int = std::int64_t;

/// Sorted, duplicate-free list of canonical residues mod some n.
using ResidueSet = std::vector<Int>;

struct PrimePower {
    Int p = 0;
    int t = 0;
    Int q = 0;  // p^t

    bool operator==(const PrimePower&) const = default;
};

class Factorization {
public:
    /// Trial division. Throws std::domain_error for n < 2.
    static Factorization of(Int n);

    Int n() const { return n_; }
    const std::vector<PrimePower>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    const PrimePower& operator[](std::size_t i) const { return parts_[i]; }

    bool is_prime_power() const { return parts_.size() == 1; }

    bool operator==(const Factorization& other) const { return n_ == other.n_; }

private:
    Int n_ = 0;
    std::vector<PrimePower> parts_;
};

inline Factorization factorize(Int n) { return Factorization::of(n); }

struct Residue {
    Int value = 0;
    Int modulus = 1;

    /// Reduces `v` into [0, modulus). Throws std::domain_error for modulus < 1.
    static Residue of(Int v, Int modulus);

    bool operator==(const Residue&) const = default;
};

struct DigitVector {
    Int p = 0;
    int t = 0;
    std::vector<Int> digits;  // x_0 .. x_{t-1}, least significant first

    Int value() const;
};

Int gcd(Int a, Int b);
Int ipow(Int base, int exp);
Int mod(Int a, Int n);
bool is_prime(Int n);
Int euler_phi(Int n);

std::vector<Residue> crt_encode(Residue x, const Factorization& f);
Residue crt_decode(std::span<const Residue> components, const Factorization& f);

/// Digits of x in base p, exactly t of them. The modulus must be p^t.
DigitVector p_adic_digits(Residue x);

/// Additive order n / gcd(x, n).
Int element_order(Residue x);

std::vector<Int> units(Int n);

/// The unique subgroup of order d: {0, n/d, 2n/d, ...}.
ResidueSet subgroup_of_order(Int n, Int d);

/// <S>, the multiples of gcd(S u {n}). Empty S gives {0}.
ResidueSet generated_subgroup(Int n, std::span<const Int> set);

/// gcd of the elements of S together with n; <S> has order n / generator.
Int subgroup_generator(Int n, std::span<const Int> set);

}  // namespace circ
