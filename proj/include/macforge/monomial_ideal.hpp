#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "vertex_set.hpp"

namespace macforge {

/// Squarefree monomial ideal in k[x_1, ..., x_m], held by its unique minimal
/// generating set.  Generators are squarefree monomials stored as bitmasks in
/// ascending bitmask order.  The zero ideal has no generators; the unit ideal
/// is generated by the empty monomial (mask 0).
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal from_generators(int m, std::vector<std::uint32_t> generators) {
        check_vertex_count(m);
        MonomialIdeal ideal;
        ideal.m_ = m;
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (std::uint32_t g : generators)
            if (m < 32 && (g >> m) != 0)
                throw validation_error("generator has bits above vertex count " + std::to_string(m));
        // Keep only divisibility-minimal generators.  For squarefree monomials
        // divisibility is mask inclusion, and ascending bitmask order already
        // places any divisor before its multiples.
        for (std::uint32_t g : generators) {
            bool minimal = true;
            for (std::uint32_t kept : ideal.generators_) {
                if ((kept & ~g) == 0) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) ideal.generators_.push_back(g);
        }
        return ideal;
    }

    int ambient() const { return m_; }
    const std::vector<std::uint32_t>& generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return !generators_.empty() && generators_.front() == 0; }

    bool contains_monomial(std::uint32_t mask) const {
        for (std::uint32_t g : generators_)
            if ((g & ~mask) == 0) return true;
        return false;
    }

    /// "(x1*x2, x3*x4)" or "(0)" for the zero ideal.
    std::string to_string() const {
        if (generators_.empty()) return "(0)";
        std::string out = "(";
        bool first = true;
        for (std::uint32_t g : generators_) {
            if (!first) out += ", ";
            out += mask_monomial(g);
            first = false;
        }
        out += ")";
        return out;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.m_ == b.m_ && a.generators_ == b.generators_;
    }

private:
    int m_ = 0;
    std::vector<std::uint32_t> generators_;
};

}  // namespace macforge
