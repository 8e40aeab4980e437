#include "circ/zn.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace circ {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int ipow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Int mod(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int euler_phi(Int n) {
    Int result = n;
    for (const Factorization f = Factorization::of(n); const auto& pp : f.parts()) result = result / pp.p * (pp.p - 1);
    return result;
}

Factorization Factorization::of(Int n) {
    if (n < 2) throw std::domain_error("modulus must be at least 2");
    Factorization f;
    f.n_ = n;
    Int rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        PrimePower pp{p, 0, 1};
        while (rest % p == 0) {
            rest /= p;
            ++pp.t;
            pp.q *= p;
        }
        f.parts_.push_back(pp);
    }
    if (rest > 1) f.parts_.push_back({rest, 1, rest});
    return f;
}

Residue Residue::of(Int v, Int modulus) {
    if (modulus < 1) throw std::domain_error("modulus must be positive");
    return {mod(v, modulus), modulus};
}

Int DigitVector::value() const {
    Int v = 0;
    for (int i = t - 1; i >= 0; --i) v = v * p + digits[static_cast<std::size_t>(i)];
    return v;
}

std::vector<Residue> crt_encode(Residue x, const Factorization& f) {
    if (x.modulus != f.n()) throw std::domain_error("residue modulus does not match factorization");
    std::vector<Residue> out;
    out.reserve(f.size());
    for (const auto& pp : f.parts()) out.push_back({x.value % pp.q, pp.q});
    return out;
}

namespace {

// Inverse of a mod m for gcd(a, m) = 1.
Int inverse_mod(Int a, Int m) {
    Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod(old_s, m);
}

}  // namespace

Residue crt_decode(std::span<const Residue> components, const Factorization& f) {
    if (components.size() != f.size())
        throw std::domain_error("expected " + std::to_string(f.size()) + " CRT components, got " +
                                std::to_string(components.size()));
    const Int n = f.n();
    Int x = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Int q = f[i].q;
        if (components[i].modulus != q || components[i].value < 0 || components[i].value >= q)
            throw std::domain_error("CRT component " + std::to_string(i) + " is not a residue mod " +
                                    std::to_string(q));
        const Int cofactor = n / q;
        const Int coeff = components[i].value * inverse_mod(cofactor % q, q) % q;
        x = (x + coeff * cofactor) % n;
    }
    return {x, n};
}

DigitVector p_adic_digits(Residue x) {
    const Factorization f = Factorization::of(x.modulus);
    if (!f.is_prime_power()) throw std::domain_error("p-adic digits need a prime-power modulus");
    DigitVector dv{f[0].p, f[0].t, {}};
    dv.digits.reserve(static_cast<std::size_t>(dv.t));
    Int v = x.value;
    for (int i = 0; i < dv.t; ++i) {
        dv.digits.push_back(v % dv.p);
        v /= dv.p;
    }
    return dv;
}

Int element_order(Residue x) { return x.modulus / gcd(x.value, x.modulus); }

std::vector<Int> units(Int n) {
    if (n < 2) throw std::domain_error("modulus must be at least 2");
    std::vector<Int> out;
    for (Int u = 1; u < n; ++u)
        if (gcd(u, n) == 1) out.push_back(u);
    return out;
}

ResidueSet subgroup_of_order(Int n, Int d) {
    if (d < 1 || n % d != 0)
        throw std::domain_error(std::to_string(d) + " does not divide " + std::to_string(n));
    ResidueSet out;
    out.reserve(static_cast<std::size_t>(d));
    const Int step = n / d;
    for (Int i = 0; i < d; ++i) out.push_back(i * step);
    return out;
}

Int subgroup_generator(Int n, std::span<const Int> set) {
    Int g = n;
    for (Int s : set) g = gcd(g, mod(s, n));
    return g;
}

ResidueSet generated_subgroup(Int n, std::span<const Int> set) {
    return subgroup_of_order(n, n / subgroup_generator(n, set));
}

}  // namespace circ
