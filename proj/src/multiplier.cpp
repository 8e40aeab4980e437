#include "circ/multiplier.hpp"

#include <algorithm>
#include <stdexcept>

namespace circ {

GeneralizedMultiplier::GeneralizedMultiplier(Factorization f, std::vector<MultiplierRow> rows)
    : f_(std::move(f)), rows_(std::move(rows)) {
    if (rows_.size() != f_.size()) throw std::domain_error("multiplier has the wrong number of rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != static_cast<std::size_t>(f_[i].t))
            throw std::domain_error("multiplier row " + std::to_string(i) + " has the wrong length");
        for (Int m : rows_[i])
            if (m <= 0 || m % f_[i].p == 0)
                throw std::domain_error("multiplier entry " + std::to_string(m) + " is not a positive integer coprime to " +
                                        std::to_string(f_[i].p));
    }
}

GeneralizedMultiplier GeneralizedMultiplier::identity(const Factorization& f) {
    std::vector<MultiplierRow> rows;
    for (const auto& pp : f.parts()) rows.emplace_back(static_cast<std::size_t>(pp.t), 1);
    return GeneralizedMultiplier(f, std::move(rows));
}

Int GeneralizedMultiplier::apply(Int x) const { return apply_multiplier(*this, Residue::of(x, f_.n())).value; }

std::vector<Int> GeneralizedMultiplier::table() const {
    std::vector<Int> out(static_cast<std::size_t>(f_.n()));
    for (Int x = 0; x < f_.n(); ++x) out[static_cast<std::size_t>(x)] = apply(x);
    return out;
}

std::string GeneralizedMultiplier::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(rows_[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

bool is_genuine_row(const MultiplierRow& m, const KeyRow& k, Int p) {
    const int t = static_cast<int>(k.size());
    if (static_cast<int>(m.size()) != t) return false;
    for (int j = 1; j <= t; ++j) {
        const Int mj = m[static_cast<std::size_t>(j - 1)];
        const Int bound = ipow(p, j - k[static_cast<std::size_t>(j - 1)]) - 1;
        if (mj < 1 || mj > bound || mj % p == 0) return false;
        if (j < t) {
            const Int modulus = ipow(p, j - k[static_cast<std::size_t>(j)]);
            if (mod(m[static_cast<std::size_t>(j)] - mj, modulus) != 0) return false;
        }
    }
    return true;
}

GenuineMultiplier::GenuineMultiplier(GeneralizedMultiplier m, Key k) : m_(std::move(m)), k_(std::move(k)) {
    if (m_.n() != k_.n()) throw std::domain_error("multiplier and key belong to different groups");
    for (std::size_t i = 0; i < k_.rows().size(); ++i)
        if (!is_genuine_row(m_.rows()[i], k_.row(i), k_.factorization()[i].p))
            throw std::domain_error("multiplier " + m_.to_string() + " is not genuine for key " + k_.to_string());
}

Int apply_multiplier_prime(const MultiplierRow& row, Int p, int t, Int x) {
    const Int q = ipow(p, t);
    Int result = 0;
    Int place = 1;
    Int rest = mod(x, q);
    for (int i = 0; i < t; ++i) {
        const Int digit = rest % p;
        rest /= p;
        result = (result + row[static_cast<std::size_t>(t - i - 1)] % q * digit % q * place) % q;
        place *= p;
    }
    return result;
}

Residue apply_multiplier(const GeneralizedMultiplier& m, Residue x) {
    const Factorization& f = m.factorization();
    auto comps = crt_encode(x, f);
    for (std::size_t i = 0; i < f.size(); ++i)
        comps[i].value = apply_multiplier_prime(m.rows()[i], f[i].p, f[i].t, comps[i].value);
    return crt_decode(comps, f);
}

std::vector<MultiplierRow> genuine_multipliers_prime_power(const KeyRow& row, Int p, int t) {
    if (static_cast<int>(row.size()) != t || !is_valid_key_row(row))
        throw std::domain_error("row is not a key of K_{p^t}");
    std::vector<MultiplierRow> out;
    MultiplierRow m(static_cast<std::size_t>(t), 0);
    auto extend = [&](auto&& self, int j) -> void {  // fills m_j, 1-based
        if (j > t) {
            out.push_back(m);
            return;
        }
        const int exponent = j - row[static_cast<std::size_t>(j - 1)];
        if (exponent < 1) throw std::logic_error("empty genuine range");
        const Int bound = ipow(p, exponent) - 1;
        for (Int v = 1; v <= bound; ++v) {
            if (v % p == 0) continue;
            if (j > 1) {
                // m_j = m_{j-1} (mod p^{(j-1) - k_j})
                const Int modulus = ipow(p, j - 1 - row[static_cast<std::size_t>(j - 1)]);
                if (mod(v - m[static_cast<std::size_t>(j - 2)], modulus) != 0) continue;
            }
            m[static_cast<std::size_t>(j - 1)] = v;
            self(self, j + 1);
        }
    };
    extend(extend, 1);
    return out;
}

SolvingSet::SolvingSet(Key k, std::size_t materialize_limit) : key_(std::move(k)) {
    const Factorization& f = key_.factorization();
    const Int n = f.n();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& pp = f[i];
        auto rows = genuine_multipliers_prime_power(key_.row(i), pp.p, pp.t);
        std::vector<std::vector<Int>> tables;
        tables.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<Int> tab(static_cast<std::size_t>(pp.q));
            for (Int y = 0; y < pp.q; ++y) tab[static_cast<std::size_t>(y)] = apply_multiplier_prime(r, pp.p, pp.t, y);
            tables.push_back(std::move(tab));
        }
        size_ *= rows.size();
        per_prime_.push_back(std::move(rows));
        per_prime_tables_.push_back(std::move(tables));

        std::vector<Residue> unit(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) unit[j] = {j == i ? 1 : 0, f[j].q};
        crt_basis_.push_back(crt_decode(unit, f).value);
    }
    if (size_ <= materialize_limit) {
        tables_.reserve(size_);
        for (std::size_t idx = 0; idx < size_; ++idx) {
            const auto d = digits(idx);
            std::vector<Int> tab(static_cast<std::size_t>(n));
            for (Int x = 0; x < n; ++x) tab[static_cast<std::size_t>(x)] = apply(d, x);
            tables_.push_back(std::move(tab));
        }
    }
}

std::vector<std::size_t> SolvingSet::digits(std::size_t index) const {
    if (index >= size_) throw std::out_of_range("solving set index out of range");
    std::vector<std::size_t> d(per_prime_.size());
    for (std::size_t i = per_prime_.size(); i-- > 0;) {
        d[i] = index % per_prime_[i].size();
        index /= per_prime_[i].size();
    }
    return d;
}

Int SolvingSet::apply(const std::vector<std::size_t>& d, Int x) const {
    const Factorization& f = key_.factorization();
    const Int n = f.n();
    Int y = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Int comp = per_prime_tables_[i][d[i]][static_cast<std::size_t>(x % f[i].q)];
        y = (y + comp * crt_basis_[i]) % n;
    }
    return y;
}

GenuineMultiplier SolvingSet::at(std::size_t index) const {
    const auto d = digits(index);
    std::vector<MultiplierRow> rows;
    for (std::size_t i = 0; i < d.size(); ++i) rows.push_back(per_prime_[i][d[i]]);
    return GenuineMultiplier(GeneralizedMultiplier(key_.factorization(), std::move(rows)), key_);
}

std::vector<Int> SolvingSet::permutation(std::size_t index) const {
    if (!tables_.empty()) return tables_.at(index);
    const auto d = digits(index);
    std::vector<Int> tab(static_cast<std::size_t>(n()));
    for (Int x = 0; x < n(); ++x) tab[static_cast<std::size_t>(x)] = apply(d, x);
    return tab;
}

ResidueSet SolvingSet::image(std::size_t index, std::span<const Int> members) const {
    ResidueSet out;
    out.reserve(members.size());
    if (!tables_.empty()) {
        const auto& tab = tables_.at(index);
        for (Int x : members) out.push_back(tab[static_cast<std::size_t>(x)]);
    } else {
        const auto d = digits(index);
        for (Int x : members) out.push_back(apply(d, x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SolvingSet solving_set(const Key& k, std::size_t materialize_limit) { return SolvingSet(k, materialize_limit); }

}  // namespace circ
