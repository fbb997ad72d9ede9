#include "lchoose/assignment.hpp"
#include "lchoose/detail/list_search.hpp"

#include <algorithm>

namespace lchoose {

namespace {

std::vector<std::vector<std::uint32_t>> adjacency_of(const Graph& g)
{
    std::vector<std::vector<std::uint32_t>> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        adj[v].assign(g.neighbours(v).begin(), g.neighbours(v).end());
    return adj;
}

template <class Set>
std::optional<Colouring> search(const Graph& g, const std::vector<Colour>& palette,
                                 const std::vector<std::vector<std::size_t>>& index_lists, std::uint64_t max_nodes)
{
    std::vector<Set> domains;
    domains.reserve(g.order());
    for (const auto& list : index_lists) {
        Set s(palette.size());
        for (auto c : list)
            s.set(c);
        domains.push_back(std::move(s));
    }
    auto adj = adjacency_of(g);
    detail::ListSearch<Set> solver(adj, std::move(domains), max_nodes);
    switch (solver.run()) {
    case detail::SearchOutcome::BudgetExceeded:
        throw BudgetExceeded("list colouring exceeded " + std::to_string(max_nodes) + " search nodes");
    case detail::SearchOutcome::Impossible:
        return std::nullopt;
    case detail::SearchOutcome::Coloured:
        break;
    }
    Colouring c{std::vector<Colour>(g.order())};
    for (Vertex v = 0; v < g.order(); ++v)
        c.colour_of[v] = palette[static_cast<std::size_t>(solver.colours()[v])];
    return c;
}

}  // namespace

std::optional<Colouring> l_colour(const Graph& g, const ListAssignment& L, std::uint64_t max_nodes)
{
    if (L.lists.size() != g.order())
        throw std::invalid_argument("assignment has " + std::to_string(L.lists.size()) + " lists for " +
                                    std::to_string(g.order()) + " vertices");
    std::vector<Colour> palette;
    for (const auto& list : L.lists)
        palette.insert(palette.end(), list.begin(), list.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

    std::vector<std::vector<std::size_t>> index_lists(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        for (auto c : L.lists[v])
            index_lists[v].push_back(static_cast<std::size_t>(
                std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));

    if (palette.size() <= 64)
        return search<detail::SmallColourSet>(g, palette, index_lists, max_nodes);
    return search<detail::WideColourSet>(g, palette, index_lists, max_nodes);
}

bool is_l_colouring(const Graph& g, const ListAssignment& L, const Colouring& c)
{
    if (!c.is_proper(g) || L.lists.size() != g.order())
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (std::find(L.lists[v].begin(), L.lists[v].end(), c.colour_of[v]) == L.lists[v].end())
            return false;
    return true;
}

}  // namespace lchoose
