#ifndef TORIC_COMMON_HPP
#define TORIC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// A graph never has more than 64 edges or 64 vertices in this toolkit, so
// edge and vertex sets fit in one word.
using EdgeMask = std::uint64_t;
using VertexMask = std::uint64_t;

// Per-vertex degree vector of a monomial (index 0 = vertex 1).
using DegreeVec = std::vector<int>;

// Exponent vector over the edge variables of the ambient graph.
using Expo = std::vector<std::uint8_t>;

// Thrown when an enumeration exceeds its configured cap.  Callers see this
// as an explicit "unknown" rather than a silently truncated answer.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error("budget_exceeded: " + what) {}
};

struct Budget {
    std::size_t fiber_cap = 200000;       // max monomials in one fiber
    std::size_t walk_len_cap = 0;         // 0 means 2*|E(g)|
    std::size_t candidate_cap = 2000000;  // walk candidates per enumeration
    std::size_t product_cap = 500000;     // per-edge selection combinations
    std::size_t subset_cap = 1u << 21;    // generator subsets in splitting scans

    std::size_t walk_cap_for(std::size_t active_edges) const {
        return walk_len_cap ? walk_len_cap : 2 * active_edges;
    }
    static Budget from_env();  // honours TORIC_SPLIT_BUDGET
    static Budget scaled(std::size_t n);
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace toric

#endif
