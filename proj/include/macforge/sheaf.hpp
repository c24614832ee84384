#pragma once

#include <string>
#include <vector>

#include "abelian_group.hpp"
#include "errors.hpp"

namespace macforge {

/// One summand of a strictly A¹-invariant sheaf expression: `group ⊗ K^MW_weight`.
/// At weight 0 the term is the constant part (K^MW_0-free bookkeeping): a group
/// Z^r ⊕ T at weight n stands for (K^MW_n)^{⊕r} ⊕ (T ⊗ K^MW_n).
struct SheafTerm {
    int weight = 0;
    AbelianGroup group;

    friend bool operator==(const SheafTerm& a, const SheafTerm& b) {
        return a.weight == b.weight && a.group == b.group;
    }
};

/// Finite direct sum of Milnor–Witt weight pieces, kept in canonical form:
/// terms sorted by ascending weight, one term per weight, no trivial terms.
class SheafExpression {
public:
    SheafExpression() = default;

    static SheafExpression zero() { return {}; }

    static SheafExpression from_group(const AbelianGroup& g, int weight) {
        SheafExpression e;
        e.add(g, weight);
        return e;
    }

    /// The constant sheaf Z (weight 0, rank 1).
    static SheafExpression integers() { return from_group(AbelianGroup::free(1), 0); }

    void add(const AbelianGroup& g, int weight) {
        if (g.is_trivial()) return;
        auto it = terms_.begin();
        while (it != terms_.end() && it->weight < weight) ++it;
        if (it != terms_.end() && it->weight == weight)
            it->group = direct_sum(it->group, g);
        else
            terms_.insert(it, SheafTerm{weight, g});
    }

    SheafExpression plus(const SheafExpression& other) const {
        SheafExpression out = *this;
        for (const SheafTerm& t : other.terms_) out.add(t.group, t.weight);
        return out;
    }

    /// Tensor with K^MW_n: K^MW_i ⊗ K^MW_n ≅ K^MW_{i+n}, so every weight
    /// shifts by n.  Degree-0 bookkeeping (the untensored Z of a pointed
    /// space) is handled at the graded level, not here.
    SheafExpression tensor_kmw(int n) const {
        SheafExpression out;
        for (const SheafTerm& t : terms_) out.terms_.push_back(SheafTerm{t.weight + n, t.group});
        return out;
    }

    const std::vector<SheafTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long free_rank() const {
        long long r = 0;
        for (const SheafTerm& t : terms_) r += t.group.rank;
        return r;
    }

    long long free_rank_at_weight(int weight) const {
        for (const SheafTerm& t : terms_)
            if (t.weight == weight) return t.group.rank;
        return 0;
    }

    bool has_torsion() const {
        for (const SheafTerm& t : terms_)
            if (!t.group.is_torsion_free()) return true;
        return false;
    }

    /// Strips one Z at weight 0 (the distinguished summand of a pointed
    /// space's degree-0 homology).  Errors if no such summand exists.
    SheafExpression reduced() const {
        SheafExpression out = *this;
        for (auto it = out.terms_.begin(); it != out.terms_.end(); ++it) {
            if (it->weight != 0) continue;
            if (it->group.rank < 1) break;
            it->group.rank -= 1;
            if (it->group.is_trivial()) out.terms_.erase(it);
            return out;
        }
        throw check_failure("expected a distinguished Z summand at weight 0");
    }

    /// "0" | "Z" | "Z^r" | "KMW(n)" | "KMW(n)^r" | "(Z/k ⊗ KMW(n))",
    /// joined by " ⊕ ", weights ascending, free part before torsion.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        auto append = [&out](const std::string& piece) {
            if (!out.empty()) out += " ⊕ ";
            out += piece;
        };
        for (const SheafTerm& t : terms_) {
            if (t.group.rank > 0) {
                std::string base = (t.weight == 0) ? "Z" : "KMW(" + std::to_string(t.weight) + ")";
                if (t.group.rank > 1) base += "^" + std::to_string(t.group.rank);
                append(base);
            }
            for (const Int& k : t.group.torsion) {
                if (t.weight == 0)
                    append("Z/" + k.str());
                else
                    append("(Z/" + k.str() + " ⊗ KMW(" + std::to_string(t.weight) + "))");
            }
        }
        return out;
    }

    friend bool operator==(const SheafExpression& a, const SheafExpression& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::vector<SheafTerm> terms_;
};

/// Tensor with K^MW_n as a free function (shifts every weight by n).
inline SheafExpression tensor_kmw(const SheafExpression& e, int n) {
    if (n < 0) throw validation_error("negative Milnor-Witt weight");
    return e.tensor_kmw(n);
}

/// Graded sheaf expressions indexed by homological degree, modeling the
/// cellular homology of a pointed space: degree 0 carries a distinguished Z.
using GradedSheafExpression = std::vector<SheafExpression>;

namespace graded {

inline void trim(GradedSheafExpression& g) {
    while (!g.empty() && g.back().is_zero()) g.pop_back();
}

/// H_*(X ∧ W) for W with H_0(W) = Z ⊕ K^MW_n and no higher homology
/// (W = G_m^{∧n}): degree 0 becomes Z ⊕ (H̃_0(X) ⊗ K^MW_n), degree i > 0
/// becomes H_i(X) ⊗ K^MW_n.
inline GradedSheafExpression smash_kmw(const GradedSheafExpression& x, int n) {
    if (x.empty()) throw check_failure("graded expression of a pointed space cannot be empty");
    GradedSheafExpression out;
    out.push_back(SheafExpression::integers().plus(x[0].reduced().tensor_kmw(n)));
    for (std::size_t i = 1; i < x.size(); ++i) out.push_back(x[i].tensor_kmw(n));
    trim(out);
    if (out.empty()) out.push_back(SheafExpression::integers());
    return out;
}

/// H_*(ΣX): degree 0 is Z, degree 1 is H̃_0(X), degree i+1 is H_i(X) (i ≥ 1).
inline GradedSheafExpression suspend(const GradedSheafExpression& x) {
    if (x.empty()) throw check_failure("graded expression of a pointed space cannot be empty");
    GradedSheafExpression out;
    out.push_back(SheafExpression::integers());
    out.push_back(x[0].reduced());
    for (std::size_t i = 1; i < x.size(); ++i) out.push_back(x[i]);
    trim(out);
    if (out.empty()) out.push_back(SheafExpression::integers());
    return out;
}

/// Inverse of suspend; requires degree 0 to be exactly Z and degree 1 to be
/// the reduced degree-0 part of the desuspension.
inline GradedSheafExpression unsuspend(const GradedSheafExpression& x) {
    if (x.empty() || !(x[0] == SheafExpression::integers()))
        throw check_failure("cannot desuspend: degree 0 is not exactly Z");
    GradedSheafExpression out;
    out.push_back(SheafExpression::integers().plus(x.size() > 1 ? x[1] : SheafExpression::zero()));
    for (std::size_t i = 2; i < x.size(); ++i) out.push_back(x[i]);
    trim(out);
    if (out.empty()) out.push_back(SheafExpression::integers());
    return out;
}

/// H_*(⋁_k X_k): one shared Z in degree 0, reduced parts summed degreewise.
inline GradedSheafExpression wedge(const std::vector<GradedSheafExpression>& xs) {
    GradedSheafExpression out{SheafExpression::integers()};
    for (const GradedSheafExpression& x : xs) {
        if (x.empty()) throw check_failure("graded expression of a pointed space cannot be empty");
        out[0] = out[0].plus(x[0].reduced());
        for (std::size_t i = 1; i < x.size(); ++i) {
            if (out.size() <= i) out.resize(i + 1);
            out[i] = out[i].plus(x[i]);
        }
    }
    trim(out);
    if (out.empty()) out.push_back(SheafExpression::integers());
    return out;
}

}  // namespace graded

}  // namespace macforge
