#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hochster.hpp"
#include "simplicial_complex.hpp"
#include "splitting.hpp"

namespace macforge {

/// Element of the subring Z[⟨-1⟩] ⊆ GW(k) generated by the rank-one forms:
/// a·⟨1⟩ + b·⟨-1⟩ with ⟨-1⟩² = ⟨1⟩.  Rank and signature are the two ring
/// homomorphisms to Z (⟨-1⟩ ↦ 1 and ⟨-1⟩ ↦ -1).
struct GWElement {
    long long one = 0;        // coefficient of ⟨1⟩
    long long minus_one = 0;  // coefficient of ⟨-1⟩

    static GWElement zero() { return {0, 0}; }
    static GWElement unit() { return {1, 0}; }
    static GWElement minus_unit_form() { return {0, 1}; }
    /// χ^{A¹}(G_m) = ⟨1⟩ - ⟨-1⟩.
    static GWElement gm_class() { return {1, -1}; }

    long long rank() const { return one + minus_one; }
    long long signature() const { return one - minus_one; }
    bool is_zero() const { return one == 0 && minus_one == 0; }

    friend GWElement operator+(GWElement a, GWElement b) {
        return {a.one + b.one, a.minus_one + b.minus_one};
    }
    friend GWElement operator-(GWElement a, GWElement b) {
        return {a.one - b.one, a.minus_one - b.minus_one};
    }
    friend GWElement operator*(GWElement a, GWElement b) {
        return {a.one * b.one + a.minus_one * b.minus_one,
                a.one * b.minus_one + a.minus_one * b.one};
    }
    friend bool operator==(GWElement a, GWElement b) {
        return a.one == b.one && a.minus_one == b.minus_one;
    }

    GWElement pow(int n) const {
        if (n < 0) throw validation_error("negative power in GW ring");
        GWElement out = unit();
        GWElement base = *this;
        for (; n > 0; n >>= 1) {
            if (n & 1) out = out * base;
            base = base * base;
        }
        return out;
    }

    /// "0" | "<1> - <-1>" | "2<1> + 3<-1>" | "-<1>" ...
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        auto append = [&out](long long c, const std::string& unit_str) {
            if (c == 0) return;
            std::string mag = (c == 1 || c == -1) ? unit_str : std::to_string(c < 0 ? -c : c) + unit_str;
            if (out.empty())
                out = (c < 0 ? "-" : "") + mag;
            else
                out += (c < 0 ? " - " : " + ") + mag;
        };
        append(one, "<1>");
        append(minus_one, "<-1>");
        return out;
    }
};

inline GWElement gw_add(GWElement a, GWElement b) { return a + b; }
inline GWElement gw_mul(GWElement a, GWElement b) { return a * b; }
inline GWElement gw_pow(GWElement x, int n) { return x.pow(n); }

inline long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Davis' closed form for the Euler characteristic of a polyhedral product
/// (X, A)^K with χ(X) = chi_x, χ(A) = chi_a:
///   Σ_{σ ∈ K} (chi_x - chi_a)^{|σ|} · chi_a^{m - |σ|}   (σ = ∅ included).
inline long long chi_classical_polyhedral(long long chi_x, long long chi_a,
                                          const SimplicialComplex& K) {
    const int m = K.vertex_count();
    long long total = 0;
    const std::vector<long long> f = K.face_count_by_size();
    for (int d = 0; d <= m; ++d)
        if (f[static_cast<std::size_t>(d)] != 0)
            total += f[static_cast<std::size_t>(d)] * ipow(chi_x - chi_a, d) * ipow(chi_a, m - d);
    return total;
}

/// Davis-style A¹-Euler characteristic of Z_K^{A¹} = (A¹, G_m)^K:
///   Σ_{σ ∈ K} ⟨-1⟩^{|σ|} · (⟨1⟩ - ⟨-1⟩)^{m - |σ|},
/// using χ(A¹) - χ(G_m) = ⟨-1⟩ and χ(G_m) = ⟨1⟩ - ⟨-1⟩.
inline GWElement chi_a1_davis(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    GWElement total = GWElement::zero();
    const std::vector<long long> f = K.face_count_by_size();
    for (int d = 0; d <= m; ++d) {
        const long long count = f[static_cast<std::size_t>(d)];
        if (count == 0) continue;
        GWElement term = GWElement::minus_unit_form().pow(d) * GWElement::gm_class().pow(m - d);
        total = total + GWElement{count, 0} * term;
    }
    return total;
}

/// The same invariant through the stable splitting:
///   ⟨1⟩ - Σ_{I ∉ K} (-1)^{|I|} (χ(|K_I|) - 1) ⟨-1⟩^{|I|},
/// with each χ(|K_I|) an alternating face count (no homology involved).
/// Non-faces with K_I = {∅} contribute χ = 0 and stay in the sum, which is
/// what makes the identity hold verbatim on ghost-vertex inputs too.
inline GWElement chi_a1_splitting(const SimplicialComplex& K, bool allow_ghost = false) {
    if (!allow_ghost && K.has_ghost_vertices())
        throw validation_error("ghost vertices " +
                               VertexSet(K.ghost_mask(), K.vertex_count()).to_string());
    GWElement sum = GWElement::zero();
    FaceLookup in_K(K);
    const std::uint32_t full = VertexSet::full(K.vertex_count()).bits();
    for (std::uint32_t I = 0; I <= full; ++I) {
        if (in_K(I)) continue;
        long long chi = 0;  // χ(|K_I|) over faces of K inside I
        for (std::uint32_t face : K.face_masks())
            if (face != 0 && (face & ~I) == 0) chi += (std::popcount(face) % 2 == 1) ? 1 : -1;
        const int size = std::popcount(I);
        const long long sign = (size % 2 == 0) ? 1 : -1;
        sum = sum + GWElement{sign * (chi - 1), 0} * GWElement::minus_unit_form().pow(size);
    }
    return GWElement::unit() - sum;
}

/// χ of a wedge: Σ χ(X_k) - (n-1)·⟨1⟩; the empty wedge is a point.
inline GWElement gw_wedge_rule(const std::vector<GWElement>& parts) {
    GWElement out = GWElement::unit();
    for (const GWElement& x : parts) out = out + x - GWElement::unit();
    return out;
}

/// χ(X ∧ S^{p,q}) = ⟨1⟩ + (-1)^p ⟨-1⟩^q (χ(X) - ⟨1⟩).
inline GWElement gw_smash_shift(GWElement chi_x, int p, int q) {
    if (q < 0) throw validation_error("negative Tate twist in smash shift");
    GWElement reduced = chi_x - GWElement::unit();
    GWElement twist = GWElement::minus_unit_form().pow(q);
    if (p % 2 != 0) twist = GWElement::zero() - twist;
    return GWElement::unit() + twist * reduced;
}

/// Rebuilds χ^{A¹}(Z_K^{A¹}) from a motivic decomposition report: each
/// summand |K_I| ∧ S^{|I|+2,|I|} contributes through the smash rule, the
/// wedge rule assembles Σ Z_K^{A¹}, and one desuspension undoes the Σ.
/// χ(|K_I|) is taken from the summand's homology ranks, so this path is
/// independent of both face-count formulas.
inline GWElement chi_a1_from_summands(const DecompositionReport& report) {
    if (report.flavor != Flavor::motivic)
        throw validation_error("summand Euler characteristic needs the motivic flavor");
    std::vector<GWElement> parts;
    for (const Summand& s : report.summands) {
        long long chi_tilde = 0;  // reduced χ from homology ranks
        for (std::size_t d = 0; d < s.homology.size(); ++d)
            chi_tilde += (d % 2 == 0) ? s.homology[d].rank : -s.homology[d].rank;
        const GWElement chi_subcomplex = GWElement::unit() + GWElement{chi_tilde, 0};
        parts.push_back(gw_smash_shift(chi_subcomplex, s.size + 2, s.size));
    }
    const GWElement suspended = gw_wedge_rule(parts);
    // χ̃(ΣX) = -χ̃(X), so χ(X) = ⟨1⟩ - (χ(ΣX) - ⟨1⟩).
    return GWElement::unit() - (suspended - GWElement::unit());
}

}  // namespace macforge
