#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hochster.hpp"
#include "sheaf.hpp"

namespace macforge {

/// Cellular A¹-homology of the motivic moment-angle complex Z_K^{A¹}:
///   H_0 = Z,   H_i = ⊕_{I ∉ K} H̃_{i-1}(|K_I|) ⊗ K^MW_{|I|}   (i ≥ 1).
/// Index of the returned vector is homological degree; trailing zeros trimmed.
inline std::vector<SheafExpression> cellular_a1_homology(const HochsterAtlas& atlas) {
    std::vector<SheafExpression> out{SheafExpression::integers()};
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        for (std::size_t d = 0; d < s.homology.size(); ++d) {
            if (s.homology[d].is_trivial()) continue;
            const std::size_t degree = d + 1;
            if (out.size() <= degree) out.resize(degree + 1);
            out[degree].add(s.homology[d], s.size);
        }
    }
    graded::trim(out);
    if (out.empty()) out.push_back(SheafExpression::integers());
    return out;
}

inline std::vector<SheafExpression> cellular_a1_homology(const SimplicialComplex& K,
                                                         bool allow_ghost = false) {
    return cellular_a1_homology(hochster_atlas(K, allow_ghost));
}

/// Same computation routed through the stable splitting and the smash /
/// suspension rewrite rules: Σ Z_K^{A¹} ≃ ⋁_I Σ²(|K_I| ∧ G_m^{∧|I|}), so the
/// graded expression is wedge ∘ suspend² ∘ smash_kmw, then one desuspension.
/// Cross-checked against the direct formula in the test suite.
inline std::vector<SheafExpression> cellular_a1_homology_via_splitting(const HochsterAtlas& atlas) {
    std::vector<GradedSheafExpression> pieces;
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        GradedSheafExpression space{SheafExpression::integers()};
        for (std::size_t d = 0; d < s.homology.size(); ++d)
            if (!s.homology[d].is_trivial()) {
                if (space.size() <= d) space.resize(d + 1);
                space[d] = space[d].plus(SheafExpression::from_group(s.homology[d], 0));
            }
        pieces.push_back(graded::suspend(graded::suspend(graded::smash_kmw(space, s.size))));
    }
    return graded::unsuspend(graded::wedge(pieces));
}

/// Bigraded table with only the nonzero entries stored.
struct BigradedTable {
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long value) {
        if (value == 0) return;
        auto key = std::make_pair(i, j);
        entries[key] += value;
        if (entries[key] == 0) entries.erase(key);
    }

    long long at(int i, int j) const {
        auto it = entries.find(std::make_pair(i, j));
        return it == entries.end() ? 0 : it->second;
    }

    friend bool operator==(const BigradedTable& a, const BigradedTable& b) {
        return a.entries == b.entries;
    }

    /// "(i,j): r" lines in lexicographic (i,j) order.
    std::string to_string() const {
        std::string out;
        for (const auto& [key, value] : entries)
            out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   "): " + std::to_string(value) + "\n";
        return out;
    }
};

/// Bigraded A¹-Betti numbers:
///   b^{0,0} = 1,   b^{i,j} = Σ_{I ∉ K, |I| = j} rank H̃^{i-j-1}(|K_I|; Z).
inline BigradedTable a1_betti_numbers(const HochsterAtlas& atlas) {
    BigradedTable table;
    table.add(0, 0, 1);
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        for (std::size_t d = 0; d < s.cohomology.size(); ++d)
            table.add(static_cast<int>(d) + s.size + 1, s.size, s.cohomology[d].rank);
    }
    return table;
}

inline BigradedTable a1_betti_numbers(const SimplicialComplex& K, bool allow_ghost = false) {
    return a1_betti_numbers(hochster_atlas(K, allow_ghost));
}

/// Classical bigraded Betti numbers of Z_K in Tor grading: the entry at
/// (-a, 2b) is Σ_{|I| = b} rank H̃^{b-a-1}(|K_I|), i.e. rank Tor_a(k, k[K])
/// in multidegree I summed over |I| = b; (0,0) carries Tor_0 = k.
struct ClassicalBigradedBetti {
    BigradedTable tor_table;  // key (-a, 2b)

    /// Reindex into the A¹ grading: (i, j) = (u + v, v/2) for key (u, v).
    BigradedTable reindexed_to_a1() const {
        BigradedTable out;
        for (const auto& [key, value] : tor_table.entries)
            out.add(key.first + key.second, key.second / 2, value);
        return out;
    }
};

inline ClassicalBigradedBetti classical_bigraded_betti(const HochsterAtlas& atlas) {
    ClassicalBigradedBetti out;
    out.tor_table.add(0, 0, 1);
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        for (std::size_t d = 0; d < s.cohomology.size(); ++d)
            out.tor_table.add(static_cast<int>(d) + 1 - s.size, 2 * s.size, s.cohomology[d].rank);
    }
    return out;
}

inline ClassicalBigradedBetti classical_bigraded_betti(const SimplicialComplex& K,
                                                       bool allow_ghost = false) {
    return classical_bigraded_betti(hochster_atlas(K, allow_ghost));
}

/// A[p,q]^multiplicity: a bidegree-shifted free summand of the motivic
/// cohomology of Z_K^{A¹} over the base point's cohomology ring A.
struct ModuleShift {
    int p = 0;
    int q = 0;
    long long multiplicity = 0;

    friend bool operator==(const ModuleShift& a, const ModuleShift& b) {
        return a.p == b.p && a.q == b.q && a.multiplicity == b.multiplicity;
    }
};

/// Group-level summand of H̃^{p,q}(Z_K^{A¹}): the cohomology of one |K_I|
/// read through the bidegree shift (p, q) -> (p - |I| - 1, q - |I|).
struct MotivicGroupTerm {
    std::uint32_t mask = 0;
    int size = 0;
    int p_shift = 0;  // |I| + 1
    int q_shift = 0;  // |I|
    std::vector<AbelianGroup> cohomology;
};

/// Motivic cohomology of Z_K^{A¹}.  The free A-module form requires every
/// |K_I| to have torsion-free cohomology (necessary for the wedge-of-spheres
/// hypothesis behind it; the caveat records that the hypothesis itself is a
/// realization statement not certified by this computation).
struct MotivicCohomologyDecomposition {
    bool module_form_available = false;
    std::vector<ModuleShift> modules;        // sorted by (p, q); only when available
    std::vector<MotivicGroupTerm> group_terms;  // always populated
    std::string caveat;
};

inline MotivicCohomologyDecomposition motivic_cohomology_decomposition(const HochsterAtlas& atlas) {
    MotivicCohomologyDecomposition out;
    out.module_form_available = true;
    std::map<std::pair<int, int>, long long> shifts;
    for (const SubcomplexData& s : atlas.non_faces) {
        if (s.empty_subcomplex) continue;
        MotivicGroupTerm term;
        term.mask = s.mask;
        term.size = s.size;
        term.p_shift = s.size + 1;
        term.q_shift = s.size;
        term.cohomology = s.cohomology;
        out.group_terms.push_back(std::move(term));
        for (std::size_t d = 0; d < s.cohomology.size(); ++d) {
            if (!s.cohomology[d].is_torsion_free()) out.module_form_available = false;
            if (s.cohomology[d].rank > 0)
                shifts[{static_cast<int>(d) + s.size + 1, s.size}] += s.cohomology[d].rank;
        }
    }
    if (out.module_form_available) {
        for (const auto& [key, mult] : shifts)
            out.modules.push_back(ModuleShift{key.first, key.second, mult});
        out.caveat =
            "module form assumes each |K_I| splits as a wedge of spheres; torsion-freeness "
            "of every H̃*(K_I) was verified, the splitting itself is not certified";
    } else {
        out.caveat =
            "some H̃*(K_I) has torsion, so the wedge-of-spheres hypothesis fails and only the "
            "group-level decomposition is emitted";
    }
    return out;
}

inline MotivicCohomologyDecomposition motivic_cohomology_decomposition(const SimplicialComplex& K,
                                                                       bool allow_ghost = false) {
    return motivic_cohomology_decomposition(hochster_atlas(K, allow_ghost));
}

}  // namespace macforge
