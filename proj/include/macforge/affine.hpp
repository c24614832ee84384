#pragma once

#include <string>
#include <vector>

#include "gw.hpp"
#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"

namespace macforge {

/// Ideal cutting out the coordinate-subspace arrangement A^m ∖ Z_K^{A¹}:
/// one generator ∏_{i ∉ σ} x_i per maximal face σ of K.  Equals the
/// Stanley–Reisner ideal of the Alexander dual (tested exhaustively).
/// For the full simplex the arrangement is empty and the ideal is the unit
/// ideal, generated by the explicit empty product (mask 0).
inline MonomialIdeal complement_ideal(const SimplicialComplex& K) {
    const std::uint32_t full = VertexSet::full(K.vertex_count()).bits();
    std::vector<std::uint32_t> gens;
    for (std::uint32_t facet : K.facet_masks()) gens.push_back(full & ~facet);
    return MonomialIdeal::from_generators(K.vertex_count(), std::move(gens));
}

/// One term of a relation: coefficient times a product of variables
/// (indices into RingPresentation::variables, ascending).
struct PolynomialTerm {
    long long coefficient = 0;
    std::vector<int> variables;
};

using Polynomial = std::vector<PolynomialTerm>;

/// Finitely presented k-algebra k[variables]/(relations), emitted as
/// structured data plus a deterministic text rendering.  No computations are
/// performed on the presentation itself.
struct RingPresentation {
    std::vector<std::string> variables;
    std::vector<Polynomial> relations;

    std::string render_term(const PolynomialTerm& t) const {
        if (t.variables.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < t.variables.size(); ++i) {
            if (i) out += "*";
            out += variables[static_cast<std::size_t>(t.variables[i])];
        }
        return out;
    }

    std::string render_relation(const Polynomial& rel) const {
        std::string out;
        for (const PolynomialTerm& t : rel) {
            if (t.coefficient == 0) continue;
            const long long mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
            std::string piece = (mag == 1) ? render_term(t) : std::to_string(mag) + "*" + render_term(t);
            if (out.empty())
                out = (t.coefficient < 0 ? "-" : "") + piece;
            else
                out += (t.coefficient < 0 ? " - " : " + ") + piece;
        }
        return out.empty() ? "0" : out;
    }

    /// "k[x1,x2,y1]/(x1*y1 - 1)"; a free polynomial ring renders without the
    /// quotient part.
    std::string render() const {
        std::string out = "k[";
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (i) out += ",";
            out += variables[i];
        }
        out += "]";
        if (relations.empty()) return out;
        out += "/(";
        for (std::size_t i = 0; i < relations.size(); ++i) {
            if (i) out += ", ";
            out += render_relation(relations[i]);
        }
        out += ")";
        return out;
    }
};

namespace detail {

inline std::vector<std::string> coordinate_variables(int m) {
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

}  // namespace detail

/// Jouanolou-style affine torsor over A^m ∖ V(I), for I = (f_1, ..., f_n):
///   k[x_1..x_m, y_1..y_n] / (Σ_j f_j·y_j - 1).
/// When I is the unit ideal, V(I) = ∅ and no torsor is needed: the result is
/// the polynomial ring on x_1..x_m.  The zero ideal leaves nothing to present
/// (the complement of V(0) is empty) and is rejected.
inline RingPresentation jouanolou_presentation(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw validation_error("zero ideal: A^m ∖ V(0) is empty, nothing to present");
    RingPresentation ring;
    ring.variables = detail::coordinate_variables(ideal.ambient());
    if (ideal.is_unit()) return ring;

    Polynomial relation;
    int y_index = 0;
    for (std::uint32_t g : ideal.generators()) {
        ring.variables.push_back("y" + std::to_string(++y_index));
        PolynomialTerm term;
        term.coefficient = 1;
        for (int v : mask_vertices(g)) term.variables.push_back(v - 1);
        term.variables.push_back(ideal.ambient() + y_index - 1);
        relation.push_back(std::move(term));
    }
    relation.push_back(PolynomialTerm{-1, {}});
    ring.relations.push_back(std::move(relation));
    return ring;
}

/// Stanley–Reisner cover presentation of Z_K^{A¹}: one relation per minimal
/// non-face f_j of K, Σ_{i∈f_j} x_i·y_{ij} - 1, with the y variables numbered
/// consecutively (relation by relation, vertices ascending).  For the full
/// simplex there are no non-faces and the result is the polynomial ring.
inline RingPresentation sr_cover_presentation(const SimplicialComplex& K) {
    const MonomialIdeal ideal = minimal_non_faces(K);
    RingPresentation ring;
    ring.variables = detail::coordinate_variables(K.vertex_count());
    int y_index = 0;
    for (std::uint32_t g : ideal.generators()) {
        Polynomial relation;
        for (int v : mask_vertices(g)) {
            ring.variables.push_back("y" + std::to_string(++y_index));
            PolynomialTerm term;
            term.coefficient = 1;
            term.variables.push_back(v - 1);
            term.variables.push_back(K.vertex_count() + y_index - 1);
            relation.push_back(std::move(term));
        }
        relation.push_back(PolynomialTerm{-1, {}});
        ring.relations.push_back(std::move(relation));
    }
    return ring;
}

/// One level of the coordinate filtration of Z_K^{A¹} ⊆ A^m: the points whose
/// zero-coordinate set is a fixed face σ with |σ| = level form a torus
/// G_m^{×(m-level)}.  Both torus-dimension readings found in the source
/// formulas are reported; the Euler-characteristic recomputation below pins
/// the first one.
struct FiltrationStratum {
    int level = 0;                // |σ|
    long long stratum_count = 0;  // number of faces of that size
    int torus_rank = 0;           // m - level (zero coordinates pinned, rest invertible)
    int torus_rank_ambient = 0;   // m - level - 1 (alternative ambient-indexed reading)
};

struct FiltrationReport {
    std::vector<FiltrationStratum> strata;
    /// χ^{A¹}(Z_K^{A¹}) recomputed by compactly-supported cut-and-paste over
    /// the strata: ⟨-1⟩^m Σ_i f_i · χ_c(G_m)^{m-i} with χ_c(G_m) = ⟨-1⟩-⟨1⟩
    /// (χ_c = ⟨-1⟩^dim · χ on smooth schemes).  Must equal chi_a1_davis.
    GWElement chi_from_strata;
};

inline FiltrationReport cellular_filtration_report(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    FiltrationReport report;
    const std::vector<long long> f = K.face_count_by_size();
    GWElement total = GWElement::zero();
    const GWElement chi_c_gm = GWElement::minus_unit_form() - GWElement::unit();
    for (int i = 0; i <= m; ++i) {
        const long long count = f[static_cast<std::size_t>(i)];
        if (count == 0) continue;
        report.strata.push_back(FiltrationStratum{i, count, m - i, m - i - 1});
        total = total + GWElement{count, 0} * chi_c_gm.pow(m - i);
    }
    report.chi_from_strata = GWElement::minus_unit_form().pow(m) * total;
    return report;
}

}  // namespace macforge
