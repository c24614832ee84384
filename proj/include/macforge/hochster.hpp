#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "homology.hpp"
#include "parallel.hpp"
#include "simplicial_complex.hpp"

namespace macforge {

/// Reduced (co)homology of one full subcomplex K_I, I a non-face of K.
struct SubcomplexData {
    std::uint32_t mask = 0;
    int size = 0;
    std::vector<AbelianGroup> homology;    // H̃_i(|K_I|), i = 0..dim K_I
    std::vector<AbelianGroup> cohomology;  // H̃^i(|K_I|)
    long long face_count = 0;              // faces of K_I including ∅
    long long euler = 0;                   // unreduced χ(|K_I|), from face counts
    bool empty_subcomplex = false;         // K_I = {∅}; only possible with ghost vertices

    bool all_trivial() const {
        for (const AbelianGroup& g : homology)
            if (!g.is_trivial()) return false;
        return true;
    }
};

/// Per-non-face subcomplex homology data: the shared input of the stable
/// splitting, the (co)homology decompositions, the cellular Milnor–Witt
/// expressions and the Betti tables.  Non-faces appear in ascending bitmask
/// order; subcomplexes are analyzed in parallel, results merged by index.
struct HochsterAtlas {
    int m = 0;
    std::uint32_t ghost_mask = 0;
    std::vector<SubcomplexData> non_faces;

    /// Non-faces whose subcomplex is {∅}; excluded from decomposition sums.
    std::vector<std::uint32_t> excluded_masks() const {
        std::vector<std::uint32_t> out;
        for (const SubcomplexData& s : non_faces)
            if (s.empty_subcomplex) out.push_back(s.mask);
        return out;
    }
};

inline HochsterAtlas hochster_atlas(const SimplicialComplex& K, bool allow_ghost = false) {
    if (!allow_ghost && K.has_ghost_vertices())
        throw validation_error("ghost vertices " + VertexSet(K.ghost_mask(), K.vertex_count()).to_string() +
                               ": decomposition sums would be invalid");

    HochsterAtlas atlas;
    atlas.m = K.vertex_count();
    atlas.ghost_mask = K.ghost_mask();

    const std::vector<std::uint32_t> masks = non_faces(K);
    atlas.non_faces.resize(masks.size());
    parallel_for(masks.size(), [&](std::size_t i) {
        SubcomplexData data;
        data.mask = masks[i];
        data.size = std::popcount(masks[i]);
        const FullSubcomplex sub = full_subcomplex(K, VertexSet(masks[i], K.vertex_count()));
        data.face_count = static_cast<long long>(sub.complex.face_count());
        data.euler = sub.complex.euler_characteristic();
        data.empty_subcomplex = (sub.complex.dimension() == -1);
        const SimplicialHomology h = simplicial_homology(sub.complex);
        data.homology = h.reduced_homology();
        data.cohomology = h.reduced_cohomology();
        atlas.non_faces[i] = std::move(data);
    });
    return atlas;
}

}  // namespace macforge
