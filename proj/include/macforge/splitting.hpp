#pragma once

#include <string>
#include <vector>

#include "hochster.hpp"

namespace macforge {

/// Which polyhedral product the decomposition describes:
///   motivic  — Z_K^{A¹} = (A¹, G_m)^K
///   complex  — Z_K      = (D², S¹)^K
///   real     — ℝZ_K     = (D¹, S⁰)^K
enum class Flavor { motivic, complex, real };

inline std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::motivic: return "motivic";
        case Flavor::complex: return "complex";
        case Flavor::real: return "real";
    }
    return "?";
}

/// One wedge summand of the suspended polyhedral product: the subcomplex
/// |K_I| together with the flavor's shift.
///   real:     Σ ℝZ_K  ≃ ⋁_I Σ² |K_I|             shift = {2}
///   complex:  Σ Z_K   ≃ ⋁_I Σ^{|I|+2} |K_I|       shift = {|I|+2}
///   motivic:  Σ Z_K^{A¹} ≃ ⋁_I |K_I| ∧ S^{|I|+2,|I|}   shift = {|I|+2, |I|}
struct Summand {
    std::uint32_t mask = 0;
    int size = 0;
    std::vector<int> shift;
    std::vector<AbelianGroup> homology;  // reduced H̃_*(|K_I|)
    bool trivial = true;                 // contributes nothing (K_I acyclic)
};

struct DecompositionReport {
    Flavor flavor = Flavor::motivic;
    int m = 0;
    std::vector<Summand> summands;               // ascending bitmask order
    std::vector<std::uint32_t> excluded_masks;   // ghost-only non-faces, skipped
};

inline DecompositionReport stable_splitting(const HochsterAtlas& atlas, Flavor flavor) {
    DecompositionReport report;
    report.flavor = flavor;
    report.m = atlas.m;
    report.excluded_masks = atlas.excluded_masks();
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        Summand summand;
        summand.mask = s.mask;
        summand.size = s.size;
        switch (flavor) {
            case Flavor::real: summand.shift = {2}; break;
            case Flavor::complex: summand.shift = {s.size + 2}; break;
            case Flavor::motivic: summand.shift = {s.size + 2, s.size}; break;
        }
        summand.homology = s.homology;
        summand.trivial = s.all_trivial();
        report.summands.push_back(std::move(summand));
    }
    return report;
}

inline DecompositionReport stable_splitting(const SimplicialComplex& K, Flavor flavor,
                                            bool allow_ghost = false) {
    return stable_splitting(hochster_atlas(K, allow_ghost), flavor);
}

namespace detail {

inline void trim_trailing_trivial(std::vector<AbelianGroup>& groups) {
    while (!groups.empty() && groups.back().is_trivial()) groups.pop_back();
}

inline void accumulate(std::vector<AbelianGroup>& into, std::size_t index, const AbelianGroup& g) {
    if (into.size() <= index) into.resize(index + 1);
    into[index] = direct_sum(into[index], g);
}

}  // namespace detail

/// Integral cohomology of the moment-angle complex Z_K:
///   H^0 = Z,  H^i = ⊕_{I ∉ K} H̃^{i-|I|-1}(|K_I|) for i > 0.
/// Index i of the returned vector is cohomological degree i.
inline std::vector<AbelianGroup> zk_cohomology_groups(const HochsterAtlas& atlas) {
    std::vector<AbelianGroup> out{AbelianGroup::free(1)};
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        for (std::size_t d = 0; d < s.cohomology.size(); ++d)
            if (!s.cohomology[d].is_trivial())
                detail::accumulate(out, d + static_cast<std::size_t>(s.size) + 1, s.cohomology[d]);
    }
    detail::trim_trailing_trivial(out);
    if (out.empty()) out.push_back(AbelianGroup::free(1));
    return out;
}

inline std::vector<AbelianGroup> zk_cohomology_groups(const SimplicialComplex& K,
                                                      bool allow_ghost = false) {
    return zk_cohomology_groups(hochster_atlas(K, allow_ghost));
}

/// Reduced integral homology of the real moment-angle complex ℝZ_K:
///   H̃_i = ⊕_{I ∉ K} H̃_{i-1}(|K_I|).
/// Index i of the returned vector is homological degree i (entry 0 is H̃_0).
inline std::vector<AbelianGroup> rzk_homology_groups(const HochsterAtlas& atlas) {
    std::vector<AbelianGroup> out;
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        for (std::size_t d = 0; d < s.homology.size(); ++d)
            if (!s.homology[d].is_trivial()) detail::accumulate(out, d + 1, s.homology[d]);
    }
    detail::trim_trailing_trivial(out);
    return out;
}

inline std::vector<AbelianGroup> rzk_homology_groups(const SimplicialComplex& K,
                                                     bool allow_ghost = false) {
    return rzk_homology_groups(hochster_atlas(K, allow_ghost));
}

}  // namespace macforge
