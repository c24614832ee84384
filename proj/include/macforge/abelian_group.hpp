#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "integer_matrix.hpp"

namespace macforge {

namespace detail {

/// Prime factorization by trial division.  Torsion orders arising from the
/// complexes in scope are tiny, so this is never a bottleneck.
inline std::map<Int, int> factorize(Int n) {
    std::map<Int, int> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
    if (n > 1) out[n]++;
    return out;
}

/// Canonical invariant-factor chain of ⊕_i Z/t_i: each factor divides the
/// next, none equal to 1.
inline std::vector<Int> canonical_invariant_factors(const std::vector<Int>& torsion) {
    std::map<Int, std::vector<int>> exponents;  // prime -> exponents, later sorted descending
    for (const Int& t : torsion)
        for (const auto& [p, e] : factorize(t)) exponents[p].push_back(e);
    std::size_t chain_length = 0;
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_length = std::max(chain_length, es.size());
    }
    std::vector<Int> chain(chain_length, Int(1));
    // The largest exponent of each prime lands in the last factor.
    for (const auto& [p, es] : exponents)
        for (std::size_t k = 0; k < es.size(); ++k) {
            Int power = 1;
            for (int i = 0; i < es[k]; ++i) power *= p;
            chain[chain_length - 1 - k] *= power;
        }
    return chain;
}

}  // namespace detail

/// Finitely generated abelian group Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t in canonical
/// form: d_i > 1 and d_1 | d_2 | ... | d_t.  Structural equality is then
/// isomorphism.
struct AbelianGroup {
    long long rank = 0;
    std::vector<Int> torsion;

    AbelianGroup() = default;
    explicit AbelianGroup(long long r) : rank(r) {}
    AbelianGroup(long long r, std::vector<Int> t) : rank(r), torsion(std::move(t)) {}

    static AbelianGroup trivial() { return AbelianGroup(); }
    static AbelianGroup free(long long r) { return AbelianGroup(r); }

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_torsion_free() const { return torsion.empty(); }

    /// "0", "Z", "Z^2", "Z/2", "Z ⊕ Z/2 ⊕ Z/4", ...
    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string out;
        if (rank == 1)
            out = "Z";
        else if (rank > 1)
            out = "Z^" + std::to_string(rank);
        for (const Int& t : torsion) {
            if (!out.empty()) out += " ⊕ ";
            out += "Z/" + t.str();
        }
        return out;
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
};

/// Direct sum, recombining the torsion parts into a canonical chain
/// (Z/2 ⊕ Z/3 becomes Z/6; Z/2 ⊕ Z/2 stays as is).
inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Int> torsion = a.torsion;
    torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
    return AbelianGroup(a.rank + b.rank, detail::canonical_invariant_factors(torsion));
}

}  // namespace macforge
