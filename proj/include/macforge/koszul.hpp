#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "integer_matrix.hpp"
#include "motivic.hpp"
#include "parallel.hpp"
#include "simplicial_complex.hpp"

namespace macforge {

enum class KoszulCoefficients { rationals, prime_field };

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long long mod_p(long long x, long long p) {
    const long long r = x % p;
    return r < 0 ? r + p : r;
}

inline long long mod_p_inverse(long long a, long long p) {
    long long result = 1, base = mod_p(a, p), exp = p - 2;  // Fermat; p prime
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

/// Rank over F_p by Gaussian elimination.  Strand entries are ±1, so the
/// int64 arithmetic never overflows.
inline int mod_p_rank(const IntegerMatrix& mat, long long p) {
    const int rows = mat.rows(), cols = mat.cols();
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(rows),
                                          std::vector<long long>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                mod_p(static_cast<long long>(mat.at(i, j)), p);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        const long long inv =
            mod_p_inverse(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = col; j < cols; ++j)
            a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const long long factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = col; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    mod_p(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              factor * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)],
                          p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// The multidegree-I strand of the Koszul complex of k ⊗ k[K]: the degree-j
/// basis is {u_J ⊗ x^{I∖J} : J ⊆ I, |J| = j, I∖J ∈ K}, the differential sends
/// u_J to Σ_{v∈J} ± u_{J∖v}·x_v, keeping a target only when (I∖J)∪{v} ∈ K.
/// Signs are (-1)^{position of v in J}, increasing label order.  Built from
/// face membership alone; no subcomplex homology enters, which is what makes
/// this an independent oracle for the Hochster-style decompositions.
struct KoszulStrand {
    std::uint32_t mask = 0;
    std::vector<std::vector<std::uint32_t>> bases;  // per degree j = 0..|I|, ascending masks
    std::vector<IntegerMatrix> differentials;       // index j >= 1: degree j -> j-1
    std::vector<long long> homology_rank;           // per degree, over the chosen coefficients
};

inline KoszulStrand koszul_strand(const SimplicialComplex& K, std::uint32_t I,
                                  KoszulCoefficients coefficients = KoszulCoefficients::rationals,
                                  long long p = 0) {
    if (coefficients == KoszulCoefficients::prime_field && !detail::is_prime(p))
        throw validation_error("F_p oracle needs a prime p, got " + std::to_string(p));

    KoszulStrand strand;
    strand.mask = I;
    const int size = std::popcount(I);
    strand.bases.assign(static_cast<std::size_t>(size) + 1, {});
    FaceLookup in_K(K);

    std::uint32_t J = I;
    while (true) {
        if (in_K(I & ~J)) strand.bases[static_cast<std::size_t>(std::popcount(J))].push_back(J);
        if (J == 0) break;
        J = (J - 1) & I;
    }
    for (auto& basis : strand.bases) std::sort(basis.begin(), basis.end());

    strand.differentials.resize(strand.bases.size());
    for (std::size_t j = 1; j < strand.bases.size(); ++j) {
        const auto& from = strand.bases[j];
        const auto& to = strand.bases[j - 1];
        IntegerMatrix mat(static_cast<int>(to.size()), static_cast<int>(from.size()));
        for (int col = 0; col < static_cast<int>(from.size()); ++col) {
            const std::uint32_t source = from[static_cast<std::size_t>(col)];
            int position = 0;
            for (std::uint32_t rest = source; rest != 0; rest &= rest - 1, ++position) {
                const std::uint32_t low = rest & (~rest + 1);
                const std::uint32_t target = source & ~low;
                if (!in_K((I & ~source) | low)) continue;  // x_v · x^{I∖J} = 0 in k[K]
                const auto it = std::lower_bound(to.begin(), to.end(), target);
                mat.at(static_cast<int>(it - to.begin()), col) = (position % 2 == 0) ? 1 : -1;
            }
        }
        strand.differentials[j] = std::move(mat);
    }

    // Construction self-check: the differential squares to zero over Z,
    // hence over every field.
    for (std::size_t j = 2; j < strand.differentials.size(); ++j)
        if (!strand.differentials[j - 1].multiply(strand.differentials[j]).is_zero())
            throw check_failure("Koszul strand differential does not square to zero");

    std::vector<int> ranks(strand.bases.size() + 1, 0);
    for (std::size_t j = 1; j < strand.differentials.size(); ++j)
        ranks[j] = (coefficients == KoszulCoefficients::rationals)
                       ? rational_rank(strand.differentials[j])
                       : detail::mod_p_rank(strand.differentials[j], p);
    for (std::size_t j = 0; j < strand.bases.size(); ++j)
        strand.homology_rank.push_back(static_cast<long long>(strand.bases[j].size()) - ranks[j] -
                                       ranks[j + 1]);
    return strand;
}

/// Squarefree Tor ranks of k[K] assembled into the (i,j) grading of the
/// A¹-Betti table: the degree-t homology of the multidegree-I strand lands at
/// (i, j) = (2|I| - t, |I|).  Strands run in parallel, merged in bitmask order.
inline BigradedTable koszul_tor_ranks(const SimplicialComplex& K,
                                      KoszulCoefficients coefficients = KoszulCoefficients::rationals,
                                      long long p = 0) {
    const std::uint32_t full = VertexSet::full(K.vertex_count()).bits();
    const std::size_t count = static_cast<std::size_t>(full) + 1;
    std::vector<std::vector<long long>> ranks(count);
    parallel_for(count, [&](std::size_t i) {
        ranks[i] = koszul_strand(K, static_cast<std::uint32_t>(i), coefficients, p).homology_rank;
    });
    BigradedTable table;
    for (std::size_t i = 0; i < count; ++i) {
        const int size = std::popcount(static_cast<std::uint32_t>(i));
        for (std::size_t t = 0; t < ranks[i].size(); ++t)
            table.add(2 * size - static_cast<int>(t), size, ranks[i][t]);
    }
    return table;
}

}  // namespace macforge
