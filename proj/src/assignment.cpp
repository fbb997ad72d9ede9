#include "lchoose/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lchoose {

ListAssignment ListAssignment::plain(std::vector<std::vector<Colour>> lists)
{
    ListAssignment L;
    std::size_t size = lists.empty() ? 0 : lists.front().size();
    for (auto& list : lists) {
        std::sort(list.begin(), list.end());
        for (auto c : list)
            L.group_of[c] = 0;
    }
    L.group_parts = {static_cast<int>(size)};
    L.lists = std::move(lists);
    return L;
}

std::string AssignmentViolation::describe() const
{
    auto v = std::to_string(vertex + 1);
    switch (kind) {
    case Kind::VertexCount:
        return "assignment has " + std::to_string(actual) + " lists, graph has " + std::to_string(expected) +
               " vertices";
    case Kind::ListSize:
        return "vertex " + v + ": list has " + std::to_string(actual) + " distinct colours, expected " +
               std::to_string(expected);
    case Kind::GroupIntersection:
        return "vertex " + v + ": list meets group " + std::to_string(group + 1) + " in " + std::to_string(actual) +
               " colours, expected " + std::to_string(expected);
    case Kind::UngroupedColour:
        return "vertex " + v + ": colour " + std::to_string(colour) + " belongs to no group";
    case Kind::UnusedColour:
        return "colour " + std::to_string(colour) + " is grouped but appears in no list";
    case Kind::GroupIndex:
        return "colour " + std::to_string(colour) + " has group index " + std::to_string(group + 1) +
               " beyond " + std::to_string(expected) + " groups";
    }
    return "unknown violation";
}

std::optional<AssignmentViolation> find_assignment_violation(const Graph& g, const ListAssignment& L)
{
    using Kind = AssignmentViolation::Kind;
    if (L.lists.size() != g.order())
        return AssignmentViolation{Kind::VertexCount, 0, 0, g.order(), L.lists.size(), 0};

    const auto q = L.group_parts.size();
    for (const auto& [colour, group] : L.group_of)
        if (group >= q)
            return AssignmentViolation{Kind::GroupIndex, 0, group, q, 0, colour};

    std::set<Colour> listed;
    const auto k = static_cast<std::size_t>(std::accumulate(L.group_parts.begin(), L.group_parts.end(), 0));
    for (Vertex v = 0; v < g.order(); ++v) {
        std::set<Colour> list(L.lists[v].begin(), L.lists[v].end());
        if (list.size() != k || L.lists[v].size() != k)
            return AssignmentViolation{Kind::ListSize, v, 0, k, list.size(), 0};
        std::vector<std::size_t> meet(q, 0);
        for (auto c : list) {
            auto it = L.group_of.find(c);
            if (it == L.group_of.end())
                return AssignmentViolation{Kind::UngroupedColour, v, 0, 0, 0, c};
            ++meet[it->second];
            listed.insert(c);
        }
        for (std::size_t i = 0; i < q; ++i)
            if (meet[i] != static_cast<std::size_t>(L.group_parts[i]))
                return AssignmentViolation{Kind::GroupIntersection, v, i,
                                           static_cast<std::size_t>(L.group_parts[i]), meet[i], 0};
    }
    for (const auto& [colour, group] : L.group_of)
        if (!listed.count(colour))
            return AssignmentViolation{Kind::UnusedColour, 0, group, 0, 0, colour};
    return std::nullopt;
}

}  // namespace lchoose
