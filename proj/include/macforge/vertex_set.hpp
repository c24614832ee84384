#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace macforge {

/// Hard cap on the ambient vertex count.  Subsets of [m] are stored as
/// bitmasks in a 32-bit word, and several operations enumerate all 2^m
/// subsets, so the cap keeps every code path in safe territory.
inline constexpr int max_vertices = 24;

inline void check_vertex_count(int m) {
    if (m < 0 || m > max_vertices)
        throw validation_error("vertex count " + std::to_string(m) + " outside supported range 0.." +
                               std::to_string(max_vertices));
}

/// Subset of the vertex set [m] = {1, ..., m}.  Vertex i occupies bit i-1.
/// Comparison is by bitmask value, which coincides with the deterministic
/// enumeration order used throughout the library.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::uint32_t bits, int m) : bits_(bits), m_(m) {
        check_vertex_count(m);
        if (m < 32 && (bits >> m) != 0)
            throw validation_error("bitmask has bits above vertex count " + std::to_string(m));
    }

    static VertexSet empty(int m) { return VertexSet(0u, m); }

    static VertexSet full(int m) {
        check_vertex_count(m);
        return VertexSet(m == 0 ? 0u : ((1u << m) - 1u), m);
    }

    /// Builds a set from 1-based vertex labels, validating each against m.
    static VertexSet from_vertices(const std::vector<int>& vertices, int m) {
        check_vertex_count(m);
        std::uint32_t bits = 0;
        for (int v : vertices) {
            if (v < 1 || v > m)
                throw validation_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m));
            bits |= (1u << (v - 1));
        }
        return VertexSet(bits, m);
    }

    std::uint32_t bits() const { return bits_; }
    int ambient() const { return m_; }
    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }

    bool contains(int v) const { return v >= 1 && v <= m_ && (bits_ & (1u << (v - 1))) != 0; }
    bool subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }

    VertexSet with(int v) const { return VertexSet(bits_ | (1u << (v - 1)), m_); }
    VertexSet without(int v) const { return VertexSet(bits_ & ~(1u << (v - 1)), m_); }
    VertexSet intersect(const VertexSet& other) const { return VertexSet(bits_ & other.bits_, m_); }
    VertexSet unite(const VertexSet& other) const { return VertexSet(bits_ | other.bits_, m_); }
    VertexSet complement() const { return VertexSet(full(m_).bits() & ~bits_, m_); }

    /// 1-based vertex labels in ascending order.
    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1)
            out.push_back(std::countr_zero(rest) + 1);
        return out;
    }

    /// "{1,3,4}" or "{}" for the empty set.
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int v : vertices()) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        out += "}";
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.bits_ == b.bits_ && a.m_ == b.m_;
    }
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
        return a.m_ <=> b.m_;
    }

private:
    std::uint32_t bits_ = 0;
    int m_ = 0;
};

/// Ascending 1-based labels of the bits set in `mask`.
inline std::vector<int> mask_vertices(std::uint32_t mask) {
    std::vector<int> out;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

/// "x1*x3*x4" style rendering of a squarefree monomial; "1" for the empty mask.
inline std::string mask_monomial(std::uint32_t mask, const std::string& var = "x") {
    if (mask == 0) return "1";
    std::string out;
    bool first = true;
    for (int v : mask_vertices(mask)) {
        if (!first) out += "*";
        out += var + std::to_string(v);
        first = false;
    }
    return out;
}

}  // namespace macforge
