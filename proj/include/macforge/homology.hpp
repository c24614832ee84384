#pragma once

#include <algorithm>
#include <bit>
#include <vector>

#include "chain_complex.hpp"
#include "simplicial_complex.hpp"

namespace macforge {

/// Augmented simplicial chain complex of K.  Mathematically C_{-1} = Z on the
/// empty face; since chain complexes here index from 0, slot d holds the
/// faces of cardinality d (geometric dimension d-1), so the augmentation Z
/// sits in slot 0 and slot-d homology is the reduced homology H̃_{d-1}(|K|).
/// Bases are in ascending bitmask order; boundary signs are (-1)^position
/// with vertices in increasing label order.
inline ChainComplex reduced_simplicial_chain_complex(const SimplicialComplex& K) {
    const int top = K.dimension() + 1;
    std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(std::max(top, 0)) + 1);
    for (std::uint32_t face : K.face_masks())
        basis[static_cast<std::size_t>(std::popcount(face))].push_back(face);
    // face_masks() is ascending, so each per-degree basis is too.

    std::vector<int> dims;
    for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));

    std::vector<IntegerMatrix> boundaries(basis.size());
    for (std::size_t d = 1; d < basis.size(); ++d) {
        IntegerMatrix mat(dims[d - 1], dims[d]);
        for (int col = 0; col < dims[d]; ++col) {
            const std::uint32_t face = basis[d][static_cast<std::size_t>(col)];
            int position = 0;
            for (std::uint32_t rest = face; rest != 0; rest &= rest - 1, ++position) {
                const std::uint32_t low = rest & (~rest + 1);
                const std::uint32_t sub = face & ~low;
                const auto it = std::lower_bound(basis[d - 1].begin(), basis[d - 1].end(), sub);
                const int row = static_cast<int>(it - basis[d - 1].begin());
                mat.at(row, col) = (position % 2 == 0) ? 1 : -1;
            }
        }
        boundaries[d] = std::move(mat);
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

/// Smith data of the face chain complex, from which reduced homology and
/// cohomology of |K| are both read off.
struct SimplicialHomology {
    ComplexAnalysis analysis;

    /// H̃_i(|K|; Z) for i = 0..dim K; empty for K = {∅}.
    std::vector<AbelianGroup> reduced_homology() const {
        auto h = analysis.homology();
        return {h.begin() + std::min<std::ptrdiff_t>(1, static_cast<std::ptrdiff_t>(h.size())), h.end()};
    }

    /// H̃^i(|K|; Z) for i = 0..dim K.
    std::vector<AbelianGroup> reduced_cohomology() const {
        auto h = analysis.cohomology();
        return {h.begin() + std::min<std::ptrdiff_t>(1, static_cast<std::ptrdiff_t>(h.size())), h.end()};
    }
};

inline SimplicialHomology simplicial_homology(const SimplicialComplex& K) {
    return {analyze(reduced_simplicial_chain_complex(K))};
}

inline std::vector<AbelianGroup> reduced_homology(const SimplicialComplex& K) {
    return simplicial_homology(K).reduced_homology();
}

inline std::vector<AbelianGroup> reduced_cohomology(const SimplicialComplex& K) {
    return simplicial_homology(K).reduced_cohomology();
}

/// Ranks of the reduced homology groups.
inline std::vector<long long> betti_numbers(const SimplicialComplex& K) {
    std::vector<long long> out;
    for (const AbelianGroup& g : reduced_homology(K)) out.push_back(g.rank);
    return out;
}

/// True when every reduced homology group of |K| is free.  Checked from the
/// computed groups, never assumed.
inline bool torsion_free(const SimplicialComplex& K) {
    for (const AbelianGroup& g : reduced_homology(K))
        if (!g.is_torsion_free()) return false;
    return true;
}

/// Reduced Euler characteristic Σ (-1)^i rank H̃_i = χ(|K|) - 1.
inline long long reduced_euler_from_homology(const std::vector<AbelianGroup>& groups) {
    long long chi = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
        chi += (i % 2 == 0) ? groups[i].rank : -groups[i].rank;
    return chi;
}

}  // namespace macforge
