#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lchoose {

/// Dense vertex index. The C++ API is 0-based; the text formats are 1-based.
using Vertex = std::uint32_t;

/// Opaque colour identifier.
using Colour = std::int64_t;

struct Edge {
    Vertex u;
    Vertex v;

    /// Returns the edge with endpoints ordered so that u < v.
    static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised when a graph would violate its structural invariants.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; carries the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph, optionally partitioned into parts 0..k-1.
///
/// Immutable once built. Edges are stored sorted and every edge of a
/// partitioned graph joins two distinct parts.
class Graph {
public:
    Graph() = default;

    /// Unpartitioned graph. Throws GraphError on loops, duplicates or
    /// out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges);

    /// Partitioned graph; part_of has one entry per vertex.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::uint32_t> part_of);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex a, Vertex b) const;

    bool partitioned() const { return num_parts_ > 0; }
    std::size_t num_parts() const { return num_parts_; }
    std::uint32_t part_of(Vertex v) const { return part_of_.at(v); }
    const std::vector<std::uint32_t>& parts() const { return part_of_; }

    /// Copy of this graph with one edge removed. Throws if absent.
    Graph without_edge(Edge e) const;

    /// Copy of this graph with one extra edge. Partition is kept.
    Graph with_edge(Edge e) const;

    /// Subgraph induced on `vertices` (relabelled 0.. in the given order).
    Graph induced(std::span<const Vertex> vertices) const;

    /// Number of connected components.
    std::size_t components() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.edges_ == b.edges_ && a.part_of_ == b.part_of_ && a.order() == b.order();
    }

private:
    void build(std::size_t n);

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint32_t> part_of_;
    std::size_t num_parts_ = 0;
};

/// Minimum cycle length, with a distinguished value for forests.
class Girth {
public:
    static constexpr Girth infinite() { return Girth{}; }
    explicit constexpr Girth(std::size_t length) : length_(length) {}

    bool is_infinite() const { return !length_.has_value(); }
    std::size_t length() const;

    /// True when every cycle has length >= bound (always true for forests).
    bool at_least(std::size_t bound) const { return is_infinite() || *length_ >= bound; }

    std::string to_string() const;

    friend bool operator==(const Girth&, const Girth&) = default;

private:
    constexpr Girth() = default;
    std::optional<std::size_t> length_;
};

Girth girth(const Graph& g);

/// A shortest cycle of length strictly less than `below`, as a closed
/// vertex sequence (first vertex not repeated), or nullopt when none exists.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g, std::size_t below);

struct EliminationOrder {
    std::vector<Vertex> order;
    std::size_t back_degree = 0;
};

struct Degeneracy {
    std::size_t value = 0;
    EliminationOrder witness;
};

/// Degeneracy via repeated removal of a minimum-degree vertex (ties go to
/// the smallest index).
Degeneracy degeneracy(const Graph& g);

/// Max over vertices of neighbours that come later in `order`.
std::size_t back_degree(const Graph& g, std::span<const Vertex> order);

struct Colouring {
    std::vector<Colour> colour_of;

    bool is_proper(const Graph& g) const;
    std::size_t distinct_colours() const;
};

/// Greedy colouring along `order`, smallest free colour starting at 1.
Colouring greedy_colouring(const Graph& g, std::span<const Vertex> order);

/// Exact decision: a colouring with colours 1..k, or nullopt when none exists.
std::optional<Colouring> k_colouring(const Graph& g, std::size_t k);
inline bool is_k_colourable(const Graph& g, std::size_t k) { return k_colouring(g, k).has_value(); }

// Text format ----------------------------------------------------------

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, std::string_view header_comment = {});

// Small named graphs used throughout the tests and tools.
namespace named {
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
}  // namespace named

}  // namespace lchoose
