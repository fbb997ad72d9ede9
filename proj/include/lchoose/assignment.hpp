#pragma once

#include "lchoose/graph.hpp"
#include "lchoose/partition.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lchoose {

/// Per-vertex colour lists together with a grouping of the colours.
///
/// Group i (0-based) is meant to meet every list in exactly group_parts[i]
/// colours. Group order is significant and is preserved by the text format.
struct ListAssignment {
    std::vector<int> group_parts;
    std::map<Colour, std::size_t> group_of;
    std::vector<std::vector<Colour>> lists;  // sorted per vertex

    Partition lambda() const { return Partition(group_parts); }
    std::size_t num_groups() const { return group_parts.size(); }

    /// Single group holding every listed colour; lambda = {list size}.
    static ListAssignment plain(std::vector<std::vector<Colour>> lists);

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

struct AssignmentViolation {
    enum class Kind { VertexCount, ListSize, GroupIntersection, UngroupedColour, UnusedColour, GroupIndex };
    Kind kind;
    Vertex vertex = 0;
    std::size_t group = 0;
    std::size_t expected = 0;
    std::size_t actual = 0;
    Colour colour = 0;

    std::string describe() const;
};

/// First violated lambda-assignment constraint, or nullopt when L is a valid
/// L.lambda()-assignment of g.
std::optional<AssignmentViolation> find_assignment_violation(const Graph& g, const ListAssignment& L);
inline bool validate_assignment(const Graph& g, const ListAssignment& L)
{
    return !find_assignment_violation(g, L).has_value();
}

/// Thrown when a search or enumeration exceeds its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

/// Exact list colouring: a proper colouring with colour_of[v] in L.lists[v],
/// or nullopt if none exists. Throws BudgetExceeded after `max_nodes`
/// search nodes.
std::optional<Colouring> l_colour(const Graph& g, const ListAssignment& L, std::uint64_t max_nodes = unlimited);

/// True when `c` is proper and respects the lists.
bool is_l_colouring(const Graph& g, const ListAssignment& L, const Colouring& c);

/// Visits one representative per class of lambda-assignments of g, up to
/// renaming colours within groups and swapping groups of equal part size,
/// in canonical order. The visitor returns false to stop early. Returns
/// the number of assignments visited.
///
/// A colour is described by its group and its support (the vertices whose
/// list holds it); colours are numbered 1, 2, ... group by group.
std::uint64_t enumerate_lambda_assignments(const Graph& g, const Partition& lambda,
                                           const std::function<bool(const ListAssignment&)>& visit);

std::uint64_t count_lambda_assignments(const Graph& g, const Partition& lambda);

struct ChoosabilityOptions {
    std::uint64_t max_assignments = unlimited;
    std::uint64_t max_nodes = unlimited;  // per list-colouring search
    unsigned shards = 1;
};

struct Colourable {
    Colouring colouring;
};
struct NotChoosable {
    ListAssignment witness;
    std::uint64_t rank = 0;  // position in canonical enumeration order
};
struct Choosable {
    std::uint64_t assignments_checked = 0;
};

using Certificate = std::variant<Colourable, NotChoosable, Choosable>;

/// Decides lambda-choosability exactly. On failure the witness is the first
/// failing assignment in canonical order, independent of `shards`.
/// Throws BudgetExceeded when a cap is hit before an answer is settled.
Certificate is_lambda_choosable(const Graph& g, const Partition& lambda, const ChoosabilityOptions& options = {});

/// Re-checks a certificate against g (and lambda for NotChoosable).
bool check_certificate(const Graph& g, const Partition& lambda, const Certificate& cert);

// Text format ----------------------------------------------------------

ListAssignment parse_assignment(std::string_view text);
std::string serialize_assignment(const ListAssignment& L);

}  // namespace lchoose
