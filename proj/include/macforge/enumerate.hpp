#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "simplicial_complex.hpp"

namespace macforge {

namespace detail {

enum class FaceStatus : unsigned char { undecided, face, non_face };

inline void enumerate_rec(int m, std::size_t idx, const std::vector<std::uint32_t>& order,
                          std::vector<FaceStatus>& status,
                          std::vector<SimplicialComplex>& out) {
    if (idx == order.size()) {
        // Downward-closed family assembled; keep it when it covers [m].
        std::uint32_t support = 0;
        std::vector<std::uint32_t> facets;
        for (std::uint32_t s : order)
            if (status[s] == FaceStatus::face) {
                support |= s;
                bool maximal = true;
                for (int v = 1; v <= m && maximal; ++v)
                    if (!(s & (1u << (v - 1))) && status[s | (1u << (v - 1))] == FaceStatus::face)
                        maximal = false;
                if (maximal) facets.push_back(s);
            }
        if (support == VertexSet::full(m).bits() && !facets.empty())
            out.push_back(SimplicialComplex::from_facet_masks(m, std::move(facets)));
        return;
    }

    const std::uint32_t s = order[idx];
    // Supersets are decided first (descending cardinality), so one level of
    // parents determines whether this face is forced.
    bool forced = false;
    for (int v = 1; v <= m && !forced; ++v)
        if (!(s & (1u << (v - 1))) && status[s | (1u << (v - 1))] == FaceStatus::face) forced = true;

    if (forced) {
        status[s] = FaceStatus::face;
        enumerate_rec(m, idx + 1, order, status, out);
    } else {
        status[s] = FaceStatus::non_face;
        enumerate_rec(m, idx + 1, order, status, out);
        status[s] = FaceStatus::face;
        enumerate_rec(m, idx + 1, order, status, out);
    }
    status[s] = FaceStatus::undecided;
}

}  // namespace detail

/// Every valid complex on exactly m labeled vertices (ghost-free, downward
/// closed), in a deterministic order.  Counts: 1, 2, 9, 114, 6894 for
/// m = 1..5.  Intended for exhaustive property tests; m ≤ 5 stays cheap.
inline std::vector<SimplicialComplex> all_complexes_on(int m) {
    check_vertex_count(m);
    if (m < 1) return {};
    std::vector<std::uint32_t> order;
    const std::uint32_t full = VertexSet::full(m).bits();
    for (std::uint32_t s = 1; s <= full; ++s) order.push_back(s);
    // Descending cardinality so every superset is decided before its subsets;
    // ascending mask within a cardinality for determinism.
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::vector<detail::FaceStatus> status(static_cast<std::size_t>(full) + 1,
                                           detail::FaceStatus::undecided);
    std::vector<SimplicialComplex> out;
    detail::enumerate_rec(m, 0, order, status, out);
    return out;
}

/// Every valid complex on 1..m labeled vertices.
inline std::vector<SimplicialComplex> all_complexes_up_to(int m) {
    std::vector<SimplicialComplex> out;
    for (int k = 1; k <= m; ++k) {
        std::vector<SimplicialComplex> batch = all_complexes_on(k);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace macforge
