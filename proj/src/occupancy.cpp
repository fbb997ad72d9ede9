#include "lchoose/occupancy.hpp"

#include <map>

namespace lchoose {

bool OccupancyReport::pairwise_disjoint() const
{
    std::set<std::size_t> seen;
    for (const auto& groups : occupied)
        for (auto j : groups)
            if (!seen.insert(j).second)
                return false;
    return true;
}

OccupancyReport occupied_groups(const ConstructedGraph& G, const Colouring& phi, const ListAssignment& L)
{
    if (!phi.is_proper(G.graph))
        throw std::invalid_argument("colouring is not proper");
    if (!is_l_colouring(G.graph, L, phi))
        throw std::invalid_argument("colouring leaves the lists");
    if (G.params.t == 0)
        throw std::invalid_argument("construction parameters carry t = 0");

    OccupancyReport report;
    const auto nr = static_cast<std::uint64_t>(G.params.n) * G.params.r;
    report.threshold = (nr + G.params.t - 1) / G.params.t;

    for (std::size_t part = 0; part < G.params.k; ++part) {
        std::map<Colour, std::uint64_t> uses;
        for (auto w : G.part_vertices(part))
            ++uses[phi.colour_of[w]];
        std::vector<std::size_t> heavy(L.num_groups(), 0);
        for (const auto& [colour, count] : uses) {
            auto it = L.group_of.find(colour);
            if (it != L.group_of.end() && count >= report.threshold)
                ++heavy[it->second];
        }
        std::set<std::size_t> groups;
        for (std::size_t j = 0; j < L.num_groups(); ++j)
            if (heavy[j] >= static_cast<std::size_t>(L.group_parts[j]))
                groups.insert(j);
        report.occupied.push_back(std::move(groups));
    }
    return report;
}

}  // namespace lchoose
