#pragma once

#include "lchoose/assignment.hpp"
#include "lchoose/gadget.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/partition.hpp"
#include "lchoose/random.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lchoose {

/// Raised when construction parameters break an invariant; the message
/// names the invariant.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The random k-partite base graph model: `parts` parts of size n and
/// m = floor(q n^{1+2 eps}) edges drawn uniformly from the q n^2 possible
/// cross-part edges, q = parts (parts - 1) / 2.
struct BaseModel {
    std::size_t parts = 0;
    std::size_t n = 0;
    std::size_t g = 0;
    double epsilon = 0;
    std::uint64_t pairs = 0;  // q
    std::uint64_t m = 0;

    /// Validates 0 < eps < 1/(4g) and m <= q n^2.
    static BaseModel make(std::size_t parts, std::size_t n, std::size_t g, double epsilon);
};

/// floor(q n^{1+2 eps}) in 50-digit arithmetic.
std::uint64_t edge_target(std::uint64_t pairs, std::size_t n, double epsilon);

struct ConstructionParams {
    Partition lambda;
    std::vector<Partition> targets;
    std::size_t g = 0;
    double epsilon = 0;
    std::size_t n = 0;
    std::size_t k = 0;  // lambda.q(), parts of the base graph
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::size_t r = 0;
    std::uint64_t t = 0;
    std::uint64_t seed = 0;

    BaseModel base() const;

    /// Derives k, q, m and t and checks every invariant. Throws ParamError.
    static ConstructionParams make(Partition lambda, std::vector<Partition> targets, std::size_t g, double epsilon,
                                   std::size_t n, std::size_t r, std::uint64_t seed);
};

/// |family| = prod_j C(2 k'_j - 1, k'_j). Throws ParamError on overflow.
std::uint64_t family_size(const Partition& target);

/// 2 r |family| k' for one target.
std::uint64_t threshold_divisor(const Partition& target, std::size_t r);

// Base graph -----------------------------------------------------------

/// Uniform m-edge subgraph of the complete k-partite graph; vertex
/// i*n + a is the a-th vertex of part i.
Graph sample_uniform_partite(const BaseModel& model, Rng& rng);

/// Deletes, one at a time, the lexicographically smallest edge of a
/// shortest cycle of length < g until none is left. Returns the deleted edges.
std::vector<Edge> remove_short_cycles(Graph& graph, std::size_t g);

struct BaseSample {
    Graph graph;  // after surgery
    std::size_t sampled_edges = 0;
    std::vector<Edge> deleted;
};

BaseSample sample_base_graph(const BaseModel& model, Rng& rng);

// Split labelling ------------------------------------------------------

/// One pair per base edge, aligned with base.edges(). `low` is the copy
/// index at the endpoint in the lower-indexed part.
struct Label {
    std::uint32_t low = 0;
    std::uint32_t high = 0;
    friend bool operator==(const Label&, const Label&) = default;
};

struct SplitLabelling {
    std::size_t r = 0;
    std::vector<Label> labels;

    friend bool operator==(const SplitLabelling&, const SplitLabelling&) = default;
};

SplitLabelling sample_split_labelling(const Graph& base, std::size_t r, Rng& rng);

// Assembled graph ------------------------------------------------------

struct ConstructedGraph {
    ConstructionParams params;
    Graph base;
    SplitLabelling labelling;
    std::vector<Gadget> gadgets;  // padded to order r, one per base part
    Graph graph;                  // vertex (v, s) is v * r + s

    std::size_t r() const { return params.r; }
    Vertex block_of(Vertex w) const { return static_cast<Vertex>(w / params.r); }
    Vertex vertex(Vertex v, std::size_t s) const { return static_cast<Vertex>(v * params.r + s); }
    /// All vertices of V_i x [r].
    std::vector<Vertex> part_vertices(std::size_t part) const;
};

/// Splits every base vertex into a block of r copies, routes each base edge
/// to the single cross edge selected by its label, and lays the padded gadget
/// of the vertex's part over each block. Throws std::invalid_argument on
/// mismatched gadget orders.
ConstructedGraph build_graph(const ConstructionParams& params, const Graph& base, const SplitLabelling& labelling,
                             const std::vector<Gadget>& gadgets);

// Adversarial assignment -----------------------------------------------

struct AdversarialListFamily {
    Partition target;
    std::vector<std::vector<Colour>> colour_sets;  // C'_j, |C'_j| = 2 k'_j - 1
    std::vector<std::vector<Colour>> family;       // every union of k'_j-subsets
};

/// Colours are numbered 1.. across C'_1, C'_2, ...; members in lexicographic order.
AdversarialListFamily make_list_family(const Partition& target);

/// Gives every block one member of the family, each member on exactly
/// n/|family| blocks of every part (seeded balanced allocation).
ListAssignment build_bad_assignment(const ConstructedGraph& G, const Partition& target, Rng& rng);

// Verification ---------------------------------------------------------

struct VerifyOptions {
    /// Decide L-colourability exactly when the graph has at most this many
    /// vertices (0 disables).
    std::size_t colour_check_cap = 0;
    std::uint64_t colour_check_nodes = 50'000'000;
};

struct VerificationReport {
    Girth girth = Girth::infinite();
    bool girth_ok = false;

    std::vector<std::size_t> part_degeneracy;
    bool degeneracy_ok = false;

    bool assignment_ok = false;
    std::string assignment_detail;

    bool cross_edges_ok = false;
    std::optional<std::pair<Vertex, Vertex>> crowded_blocks;  // base vertices

    /// Exact L-colourability when decided.
    std::optional<bool> l_colourable;
    bool colour_check_budget_hit = false;

    bool structural_ok() const { return girth_ok && degeneracy_ok && assignment_ok && cross_edges_ok; }
    std::string to_text() const;
};

VerificationReport verify_construction(const ConstructedGraph& G, const ListAssignment& L,
                                       const VerifyOptions& options = {});

// Feasibility ----------------------------------------------------------

struct LargenessCondition {
    std::string name;
    bool holds = false;
    /// Natural log of the quantity that must be < 1 (negative means holds).
    double log_margin = 0;
    /// Least n = 2^j (doubling search from 1) at which the condition holds.
    std::optional<std::uint64_t> min_n_log2;
};

struct FeasibilityReport {
    std::vector<LargenessCondition> conditions;

    std::string to_text() const;
};

/// Evaluates, at params.n and by doubling search:
///   short cycles:  n^eps > (g-3) k^{g-1}
///   expansion:     e^{-n^{1+2eps}/(2t^2)} q (e t)^{2n/t} < 1
///   labelling:     q (e k r^k)^{2n} (1 - 1/r^2)^{n^{1+eps}/4} < 1
FeasibilityReport feasibility_report(const ConstructionParams& params);

/// Log margin of one condition at an arbitrary n given as log2(n).
double feasibility_margin(const ConstructionParams& params, std::size_t which, double log2_n);

// Pipeline -------------------------------------------------------------

struct PipelineResult {
    ConstructedGraph graph;
    std::vector<ListAssignment> assignments;  // one per target
    std::vector<VerificationReport> reports;  // one per target
    FeasibilityReport feasibility;
    std::size_t sampled_edges = 0;
    std::size_t deleted_edges = 0;
};

struct PipelineRequest {
    Partition lambda;
    std::vector<Partition> targets;
    std::size_t g = 0;
    double epsilon = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    /// Gadgets for part sizes without a built-in construction.
    std::map<int, Graph> supplied_gadgets;
    VerifyOptions verify;
};

/// Gadgets for every part of lambda, padded to a common order.
std::vector<Gadget> plan_gadgets(const Partition& lambda, std::size_t g, const std::map<int, Graph>& supplied);

PipelineResult run_pipeline(const PipelineRequest& request);

}  // namespace lchoose
