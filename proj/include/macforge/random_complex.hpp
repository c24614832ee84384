#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "errors.hpp"
#include "simplicial_complex.hpp"

namespace macforge {

/// Seeded random complex on exactly m vertices.
///
/// Scheme (fixed, so a (m, seed) pair is reproducible across runs and
/// platforms): draw a facet count uniformly from [1, 2m], then draw that many
/// candidate facets uniformly from the nonempty subsets of [m], downward-close
/// the result, and reject outcomes that miss a vertex.  std::mt19937_64 with
/// explicit std::uniform_int_distribution bounds keeps the stream portable
/// enough for our purposes; the draws below avoid distribution calls entirely
/// and reduce the raw 64-bit stream by modulus, which *is* bit-portable.
inline SimplicialComplex random_complex(int m, std::uint64_t seed) {
    check_vertex_count(m);
    std::mt19937_64 rng(seed);
    const std::uint64_t mask_count = (std::uint64_t{1} << m) - 1;  // nonzero masks
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const std::uint64_t facet_count = 1 + rng() % static_cast<std::uint64_t>(2 * m);
        std::vector<std::uint32_t> facets;
        for (std::uint64_t i = 0; i < facet_count; ++i)
            facets.push_back(static_cast<std::uint32_t>(1 + rng() % mask_count));
        std::uint32_t support = 0;
        for (std::uint32_t f : facets) support |= f;
        if (support != VertexSet::full(m).bits()) continue;  // ghost vertex: redraw
        return SimplicialComplex::from_facet_masks(m, std::move(facets));
    }
    throw error("random_complex failed to produce a covering complex; seed exhausted");
}

/// A deterministic batch: seeds seed, seed+1, ... so a failing case can be
/// replayed from its reported seed alone.
inline std::vector<SimplicialComplex> random_complexes(int m, int count, std::uint64_t seed) {
    std::vector<SimplicialComplex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_complex(m, seed + static_cast<std::uint64_t>(i)));
    return out;
}

}  // namespace macforge
