#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "chain_complex.hpp"
#include "gw.hpp"
#include "simplicial_complex.hpp"

namespace macforge {

/// The cubical oracle enumerates 3^m vertex assignments, so it gets its own,
/// tighter vertex cap than the main pipeline.
inline constexpr int cubical_max_vertices = 14;

/// Cell of the cubical model of ℝZ_K = (D¹,S⁰)^K inside the m-cube: every
/// vertex is labeled zero, one, or interval, and the interval-support must be
/// a face of K.  Encoded as (interval-support mask, endpoint-bits mask), the
/// endpoint bits meaningful only off the support.
struct CubicalCell {
    std::uint32_t support = 0;    // interval coordinates; must be a face of K
    std::uint32_t endpoints = 0;  // 1-endpoints among the non-interval coordinates

    std::uint32_t key() const { return (support << cubical_max_vertices) | endpoints; }
    int dimension() const { return std::popcount(support); }
};

/// Chain complex of the cubical model.  Cells of dimension d are the
/// assignments with d interval coordinates; the boundary replaces each
/// interval coordinate v (position k among the support, ascending) by its
/// endpoints with coefficient (-1)^k (end_1 - end_0).  ∂∘∂ = 0 is verified
/// by the ChainComplex constructor.
inline ChainComplex cubical_complex_real_mac(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    if (m > cubical_max_vertices)
        throw validation_error("cubical oracle supports at most " +
                               std::to_string(cubical_max_vertices) + " vertices, got " +
                               std::to_string(m));

    const int top = K.dimension() + 1;  // max #interval coordinates
    std::vector<std::vector<std::uint32_t>> cells(static_cast<std::size_t>(std::max(top, 0)) + 1);
    const std::uint32_t full = VertexSet::full(m).bits();
    for (std::uint32_t face : K.face_masks()) {
        const int d = std::popcount(face);
        const std::uint32_t comp = full & ~face;
        std::uint32_t e = comp;
        while (true) {
            cells[static_cast<std::size_t>(d)].push_back(CubicalCell{face, e}.key());
            if (e == 0) break;
            e = (e - 1) & comp;
        }
    }
    for (auto& level : cells) std::sort(level.begin(), level.end());

    std::vector<int> dims;
    for (const auto& level : cells) dims.push_back(static_cast<int>(level.size()));

    std::vector<IntegerMatrix> boundaries(cells.size());
    for (std::size_t d = 1; d < cells.size(); ++d) {
        IntegerMatrix mat(dims[d - 1], dims[d]);
        for (int col = 0; col < dims[d]; ++col) {
            const std::uint32_t key = cells[d][static_cast<std::size_t>(col)];
            const std::uint32_t support = key >> cubical_max_vertices;
            const std::uint32_t endpoints = key & ((1u << cubical_max_vertices) - 1u);
            int position = 0;
            for (std::uint32_t rest = support; rest != 0; rest &= rest - 1, ++position) {
                const std::uint32_t low = rest & (~rest + 1);
                const int sign = (position % 2 == 0) ? 1 : -1;
                for (int end = 0; end <= 1; ++end) {
                    const std::uint32_t child_end = end ? (endpoints | low) : endpoints;
                    const std::uint32_t child = CubicalCell{support & ~low, child_end}.key();
                    const auto it = std::lower_bound(cells[d - 1].begin(), cells[d - 1].end(), child);
                    const int row = static_cast<int>(it - cells[d - 1].begin());
                    mat.at(row, col) += (end ? sign : -sign);
                }
            }
        }
        boundaries[d] = std::move(mat);
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

/// Unreduced integral homology of the cubical model.
inline std::vector<AbelianGroup> cubical_homology(const SimplicialComplex& K) {
    return homology(cubical_complex_real_mac(K));
}

/// Alternating cell count of the cubical model: each face σ contributes
/// 2^{m-|σ|} cells of dimension |σ|, so the sum is Σ_σ (-1)^{|σ|} 2^{m-|σ|}.
/// Equals chi_classical_polyhedral(1, 2, K), and cell enumeration is not
/// needed, so this one works beyond the oracle's vertex cap.
inline long long cubical_euler_characteristic(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    long long total = 0;
    const std::vector<long long> f = K.face_count_by_size();
    for (int d = 0; d <= m; ++d)
        if (f[static_cast<std::size_t>(d)] != 0)
            total += f[static_cast<std::size_t>(d)] * (d % 2 == 0 ? 1 : -1) * ipow(2, m - d);
    return total;
}

}  // namespace macforge
