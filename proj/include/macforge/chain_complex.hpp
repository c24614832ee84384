#pragma once

#include <utility>
#include <vector>

#include "abelian_group.hpp"
#include "errors.hpp"
#include "integer_matrix.hpp"
#include "smith.hpp"

namespace macforge {

/// Bounded chain complex of finitely generated free Z-modules
///   C_top -> ... -> C_1 -> C_0.
/// boundary(d) is the matrix of ∂_d : C_d -> C_{d-1} for 1 <= d <= top.
/// ∂∘∂ = 0 is verified on construction.
class ChainComplex {
public:
    ChainComplex(std::vector<int> dims, std::vector<IntegerMatrix> boundaries)
        : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
        if (dims_.empty()) throw validation_error("chain complex needs at least degree 0");
        if (boundaries_.size() != dims_.size())
            throw validation_error("need one boundary slot per degree (slot 0 unused)");
        for (std::size_t d = 1; d < dims_.size(); ++d) {
            const IntegerMatrix& b = boundaries_[d];
            if (b.rows() != dims_[d - 1] || b.cols() != dims_[d])
                throw validation_error("boundary " + std::to_string(d) + " has shape " +
                                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                       ", expected " + std::to_string(dims_[d - 1]) + "x" +
                                       std::to_string(dims_[d]));
        }
        for (std::size_t d = 2; d < dims_.size(); ++d)
            if (!boundaries_[d - 1].multiply(boundaries_[d]).is_zero())
                throw validation_error("not a chain complex: ∂∘∂ ≠ 0 between degrees " +
                                       std::to_string(d) + " and " + std::to_string(d - 2));
    }

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int d) const {
        return (d < 0 || d > top_degree()) ? 0 : dims_[static_cast<std::size_t>(d)];
    }
    const IntegerMatrix& boundary(int d) const { return boundaries_[static_cast<std::size_t>(d)]; }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int d = 0; d <= top_degree(); ++d) chi += (d % 2 == 0) ? dim(d) : -dim(d);
        return chi;
    }

private:
    std::vector<int> dims_;
    std::vector<IntegerMatrix> boundaries_;
};

/// Smith data of every boundary map; homology and cohomology both read off
/// from it (the invariant factors of a matrix and its transpose coincide).
struct ComplexAnalysis {
    std::vector<int> dims;
    std::vector<SmithResult> boundary_smith;  // index d in 1..top

    int boundary_rank(int d) const {
        if (d < 1 || d >= static_cast<int>(boundary_smith.size()) + 1) return 0;
        return boundary_smith[static_cast<std::size_t>(d - 1)].rank;
    }

    static std::vector<Int> nontrivial_factors(const SmithResult& s) {
        std::vector<Int> out;
        for (const Int& f : s.invariant_factors)
            if (f > 1) out.push_back(f);
        return out;
    }

    /// H_d = Z^{n_d - r_d - r_{d+1}} ⊕ (invariant factors > 1 of ∂_{d+1}).
    std::vector<AbelianGroup> homology() const {
        const int top = static_cast<int>(dims.size()) - 1;
        std::vector<AbelianGroup> out;
        for (int d = 0; d <= top; ++d) {
            AbelianGroup g(dims[static_cast<std::size_t>(d)] - boundary_rank(d) - boundary_rank(d + 1));
            if (d + 1 <= top)
                g.torsion = nontrivial_factors(boundary_smith[static_cast<std::size_t>(d)]);
            out.push_back(std::move(g));
        }
        return out;
    }

    /// H^d: same free rank as H_d, torsion shifted up one degree
    /// (universal coefficients: H^d ≅ Hom(H_d,Z) ⊕ Ext(H_{d-1},Z)).
    std::vector<AbelianGroup> cohomology() const {
        const int top = static_cast<int>(dims.size()) - 1;
        std::vector<AbelianGroup> out;
        for (int d = 0; d <= top; ++d) {
            AbelianGroup g(dims[static_cast<std::size_t>(d)] - boundary_rank(d) - boundary_rank(d + 1));
            if (d >= 1) g.torsion = nontrivial_factors(boundary_smith[static_cast<std::size_t>(d - 1)]);
            out.push_back(std::move(g));
        }
        return out;
    }
};

inline ComplexAnalysis analyze(const ChainComplex& c) {
    ComplexAnalysis out;
    out.dims.resize(static_cast<std::size_t>(c.top_degree()) + 1);
    for (int d = 0; d <= c.top_degree(); ++d) out.dims[static_cast<std::size_t>(d)] = c.dim(d);
    for (int d = 1; d <= c.top_degree(); ++d)
        out.boundary_smith.push_back(smith_normal_form(c.boundary(d)));
    return out;
}

inline std::vector<AbelianGroup> homology(const ChainComplex& c) { return analyze(c).homology(); }
inline std::vector<AbelianGroup> cohomology(const ChainComplex& c) { return analyze(c).cohomology(); }

/// The cochain complex re-graded as a chain complex: degree d holds C^{top-d},
/// with boundary the transpose of ∂_{top-d+1}.  H_d(dual) = H^{top-d}(C).
inline ChainComplex dual_complex(const ChainComplex& c) {
    const int top = c.top_degree();
    std::vector<int> dims(static_cast<std::size_t>(top) + 1);
    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) dims[static_cast<std::size_t>(d)] = c.dim(top - d);
    for (int d = 1; d <= top; ++d)
        boundaries[static_cast<std::size_t>(d)] = c.boundary(top - d + 1).transpose();
    return ChainComplex(std::move(dims), std::move(boundaries));
}

}  // namespace macforge
