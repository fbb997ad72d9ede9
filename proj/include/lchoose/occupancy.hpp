#pragma once

#include "lchoose/construct.hpp"

#include <set>
#include <vector>

namespace lchoose {

/// Which colour groups each part of a constructed graph occupies under a
/// colouring: group j is occupied by part i when at least k'_j colours of
/// group j are each used on at least `threshold` = ceil(n r / t) vertices
/// of V_i x [r].
struct OccupancyReport {
    std::uint64_t threshold = 0;
    std::vector<std::set<std::size_t>> occupied;  // per part, group indices

    /// True when no group is occupied by two different parts.
    bool pairwise_disjoint() const;
};

/// Throws std::invalid_argument unless phi is a proper L-colouring of G.
OccupancyReport occupied_groups(const ConstructedGraph& G, const Colouring& phi, const ListAssignment& L);

}  // namespace lchoose
