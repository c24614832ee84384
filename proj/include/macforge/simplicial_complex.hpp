#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial_ideal.hpp"
#include "vertex_set.hpp"

namespace macforge {

/// Finite abstract simplicial complex on the vertex set [m] = {1, ..., m}.
///
/// Faces are stored as bitmasks in ascending bitmask order, always including
/// the empty face.  The complex {∅} (no vertices) is representable, both on
/// m = 0 and, for internal use by Alexander duality and full subcomplexes, on
/// m > 0 where every vertex is then a ghost vertex.
///
/// Construction from facets validates labels against [m], closes downward,
/// and by default rejects ghost vertices (vertices of [m] lying in no face).
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets,
                                         bool allow_ghost = false) {
        std::vector<std::uint32_t> masks;
        masks.reserve(facets.size());
        for (const auto& f : facets)
            masks.push_back(VertexSet::from_vertices(f, m).bits());
        return from_facet_masks(m, std::move(masks), allow_ghost);
    }

    static SimplicialComplex from_facet_masks(int m, std::vector<std::uint32_t> facet_masks,
                                              bool allow_ghost = false) {
        check_vertex_count(m);
        if (m == 0) throw validation_error("complex needs at least one vertex; use empty_complex for {∅}");
        if (facet_masks.empty()) throw validation_error("facet list is empty");
        for (std::uint32_t f : facet_masks)
            if (m < 32 && (f >> m) != 0)
                throw validation_error("facet has bits above vertex count " + std::to_string(m));

        SimplicialComplex K;
        K.m_ = m;
        std::sort(facet_masks.begin(), facet_masks.end());
        facet_masks.erase(std::unique(facet_masks.begin(), facet_masks.end()), facet_masks.end());

        std::uint32_t support = 0;
        for (std::uint32_t f : facet_masks) support |= f;
        if (!allow_ghost && support != VertexSet::full(m).bits()) {
            std::uint32_t ghost = VertexSet::full(m).bits() & ~support;
            throw validation_error("ghost vertices " + VertexSet(ghost, m).to_string() +
                                   ": not contained in any facet");
        }

        // Inclusion-maximal facets only.
        for (std::uint32_t f : facet_masks) {
            bool maximal = true;
            for (std::uint32_t g : facet_masks) {
                if (g != f && (f & ~g) == 0) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) K.facets_.push_back(f);
        }

        // Downward closure: all submasks of each facet, deduplicated.
        std::vector<std::uint32_t> faces;
        for (std::uint32_t f : K.facets_) {
            std::uint32_t sub = f;
            while (true) {
                faces.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        K.faces_ = std::move(faces);
        return K;
    }

    /// The complex {∅} on an ambient vertex set of size m ≥ 0.  For m > 0
    /// every vertex is a ghost vertex, so this never passes validation and is
    /// only produced internally (K_∅, duals of boundaries of simplices).
    static SimplicialComplex empty_complex(int m) {
        check_vertex_count(m);
        SimplicialComplex K;
        K.m_ = m;
        K.faces_ = {0u};
        K.facets_ = {0u};
        return K;
    }

    int vertex_count() const { return m_; }
    const std::vector<std::uint32_t>& face_masks() const { return faces_; }
    const std::vector<std::uint32_t>& facet_masks() const { return facets_; }
    std::size_t face_count() const { return faces_.size(); }

    bool contains_face(std::uint32_t mask) const {
        return std::binary_search(faces_.begin(), faces_.end(), mask);
    }
    bool contains_face(const VertexSet& s) const { return contains_face(s.bits()); }

    /// max |σ| - 1 over faces; the complex {∅} has dimension -1.
    int dimension() const {
        int best = -1;
        for (std::uint32_t f : facets_) best = std::max(best, std::popcount(f) - 1);
        return best;
    }

    std::uint32_t support_mask() const {
        std::uint32_t s = 0;
        for (std::uint32_t f : facets_) s |= f;
        return s;
    }

    std::uint32_t ghost_mask() const { return VertexSet::full(m_).bits() & ~support_mask(); }
    bool has_ghost_vertices() const { return ghost_mask() != 0; }

    /// f_i = number of faces of cardinality i, for i = 0..m (f_0 = 1 for ∅).
    std::vector<long long> face_count_by_size() const {
        std::vector<long long> f(static_cast<std::size_t>(m_) + 1, 0);
        for (std::uint32_t face : faces_) f[static_cast<std::size_t>(std::popcount(face))]++;
        return f;
    }

    /// Unreduced Euler characteristic of |K|: Σ_{σ≠∅} (-1)^{|σ|-1}.
    long long euler_characteristic() const {
        long long chi = 0;
        for (std::uint32_t face : faces_)
            if (face != 0) chi += (std::popcount(face) % 2 == 1) ? 1 : -1;
        return chi;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.faces_ == b.faces_;
    }

private:
    int m_ = 0;
    std::vector<std::uint32_t> faces_;
    std::vector<std::uint32_t> facets_;
};

/// O(1) face-membership table over all 2^m subsets; costs 2^m bits to build.
class FaceLookup {
public:
    explicit FaceLookup(const SimplicialComplex& K)
        : table_(std::size_t{1} << K.vertex_count(), false) {
        for (std::uint32_t f : K.face_masks()) table_[f] = true;
    }
    bool operator()(std::uint32_t mask) const { return table_[mask]; }

private:
    std::vector<bool> table_;
};

/// Full subcomplex K_I reindexed onto {1, ..., |I|}, plus the label map back:
/// vertex_labels[i-1] is the original label of new vertex i.
struct FullSubcomplex {
    SimplicialComplex complex;
    std::vector<int> vertex_labels;
};

inline FullSubcomplex full_subcomplex(const SimplicialComplex& K, const VertexSet& I) {
    if (I.ambient() != K.vertex_count())
        throw validation_error("subcomplex index set lives on a different vertex set");
    const std::uint32_t imask = I.bits();
    std::vector<int> labels = mask_vertices(imask);
    const int mi = static_cast<int>(labels.size());

    // Compress a face mask supported on I to the reindexed vertex set.
    auto compress = [&](std::uint32_t face) {
        std::uint32_t out = 0;
        for (int i = 0; i < mi; ++i)
            if (face & (1u << (labels[static_cast<std::size_t>(i)] - 1))) out |= (1u << i);
        return out;
    };

    std::vector<std::uint32_t> faces;
    for (std::uint32_t face : K.face_masks())
        if ((face & ~imask) == 0) faces.push_back(compress(face));
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    if (faces.size() <= 1 || mi == 0)
        return {SimplicialComplex::empty_complex(mi), labels};

    // Facets of K_I are the maximal collected faces; rebuilding from them
    // reproduces exactly the collected face set since K is downward closed.
    std::vector<std::uint32_t> facets;
    for (std::uint32_t f : faces) {
        bool maximal = true;
        for (std::uint32_t g : faces)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(f);
    }
    return {SimplicialComplex::from_facet_masks(mi, std::move(facets), /*allow_ghost=*/true), labels};
}

/// Alexander dual K^∨ = {σ ⊆ [m] : [m]∖σ ∉ K} on the same vertex set.
/// The result can have ghost vertices (e.g. the dual of ∂Δ^{m-1} is {∅}),
/// so no ghost validation is applied here.
inline SimplicialComplex alexander_dual(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    const std::uint32_t full = VertexSet::full(m).bits();
    FaceLookup in_K(K);

    std::vector<std::uint32_t> faces;
    for (std::uint32_t s = 0; s <= full; ++s)
        if (!in_K(full & ~s)) faces.push_back(s);
    if (faces.empty() || faces.front() != 0) return SimplicialComplex::empty_complex(m);

    std::vector<std::uint32_t> facets;
    for (std::uint32_t f : faces) {
        bool maximal = true;
        for (std::uint32_t g : faces)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(f);
    }
    return SimplicialComplex::from_facet_masks(m, std::move(facets), /*allow_ghost=*/true);
}

/// Join K ⋆ L on m_K + m_L vertices, L's labels shifted above K's.
inline SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    const int m = K.vertex_count() + L.vertex_count();
    check_vertex_count(m);
    std::vector<std::uint32_t> facets;
    facets.reserve(K.facet_masks().size() * L.facet_masks().size());
    for (std::uint32_t f : K.facet_masks())
        for (std::uint32_t g : L.facet_masks())
            facets.push_back(f | (g << K.vertex_count()));
    if (m == 0) return SimplicialComplex::empty_complex(0);
    return SimplicialComplex::from_facet_masks(m, std::move(facets), /*allow_ghost=*/true);
}

/// i-skeleton: all faces of cardinality ≤ i+1, for i ≥ -1.
inline SimplicialComplex skeleton(const SimplicialComplex& K, int i) {
    if (i < -1) throw validation_error("skeleton dimension below -1");
    if (i == -1 || K.dimension() == -1) return SimplicialComplex::empty_complex(K.vertex_count());
    std::vector<std::uint32_t> facets;
    for (std::uint32_t face : K.face_masks())
        if (std::popcount(face) <= i + 1) facets.push_back(face);
    return SimplicialComplex::from_facet_masks(K.vertex_count(), std::move(facets), /*allow_ghost=*/true);
}

/// All non-faces I ⊆ [m], I ∉ K, in ascending bitmask order.
inline std::vector<std::uint32_t> non_faces(const SimplicialComplex& K) {
    const std::uint32_t full = VertexSet::full(K.vertex_count()).bits();
    FaceLookup in_K(K);
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s <= full; ++s)
        if (!in_K(s)) out.push_back(s);
    return out;
}

/// Unreduced Euler characteristic χ(|K|) = Σ_{σ∈K, σ≠∅} (-1)^{|σ|-1}; χ({∅}) = 0.
inline long long euler_characteristic(const SimplicialComplex& K) {
    return K.euler_characteristic();
}

/// Stanley–Reisner ideal I_K: generators are the inclusion-minimal non-faces.
inline MonomialIdeal minimal_non_faces(const SimplicialComplex& K) {
    FaceLookup in_K(K);
    const std::uint32_t full = VertexSet::full(K.vertex_count()).bits();
    std::vector<std::uint32_t> gens;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (in_K(s)) continue;
        bool minimal = true;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
            std::uint32_t low = rest & (~rest + 1);
            if (!in_K(s & ~low)) {
                minimal = false;
                break;
            }
        }
        if (minimal) gens.push_back(s);
    }
    return MonomialIdeal::from_generators(K.vertex_count(), std::move(gens));
}

/// ∂Δ^{m-1} on m vertices: all proper subsets of [m].  For m = 1 this is {∅}
/// (on one ghost vertex).
inline SimplicialComplex boundary_of_simplex(int m) {
    check_vertex_count(m);
    if (m <= 1) return SimplicialComplex::empty_complex(m);
    std::vector<std::uint32_t> facets;
    const std::uint32_t full = VertexSet::full(m).bits();
    for (int v = 1; v <= m; ++v) facets.push_back(full & ~(1u << (v - 1)));
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

/// Full simplex Δ^{m-1} on m vertices.
inline SimplicialComplex full_simplex(int m) {
    if (m < 1) throw validation_error("full simplex needs at least one vertex");
    return SimplicialComplex::from_facet_masks(m, {VertexSet::full(m).bits()});
}

/// m isolated vertices.
inline SimplicialComplex disjoint_points(int m) {
    if (m < 1) throw validation_error("need at least one point");
    std::vector<std::uint32_t> facets;
    for (int v = 1; v <= m; ++v) facets.push_back(1u << (v - 1));
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

/// Boundary of the square: 4 vertices, edges {1,3},{1,4},{2,3},{2,4}.
/// This is ∂Δ^1 ⋆ ∂Δ^1 with the labeling used throughout the test corpus.
inline SimplicialComplex square_complex() {
    return SimplicialComplex::from_facets(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

/// The 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_complex() {
    return SimplicialComplex::from_facets(6, {{1, 3, 4},
                                              {1, 2, 4},
                                              {2, 4, 5},
                                              {4, 5, 6},
                                              {3, 4, 6},
                                              {2, 3, 5},
                                              {1, 3, 5},
                                              {1, 5, 6},
                                              {1, 2, 6},
                                              {2, 3, 6}});
}

}  // namespace macforge
