#include "lchoose/construct.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>

namespace lchoose {

namespace mp = boost::multiprecision;

std::uint64_t edge_target(std::uint64_t pairs, std::size_t n, double epsilon)
{
    using Real = mp::cpp_bin_float_50;
    Real value = Real(pairs) * mp::pow(Real(n), Real(1) + 2 * Real(epsilon));
    return static_cast<std::uint64_t>(mp::floor(value));
}

BaseModel BaseModel::make(std::size_t parts, std::size_t n, std::size_t g, double epsilon)
{
    if (parts < 1)
        throw ParamError("base graph needs at least one part");
    if (n < 1)
        throw ParamError("part size n must be positive");
    if (g < 1)
        throw ParamError("girth bound g must be positive");
    if (!(epsilon > 0) || !(epsilon * 4.0 * static_cast<double>(g) < 1.0))
        throw ParamError("invariant 0 < epsilon < 1/(4g) violated: epsilon=" + std::to_string(epsilon) +
                         ", 1/(4g)=" + std::to_string(1.0 / (4.0 * static_cast<double>(g))));
    BaseModel model;
    model.parts = parts;
    model.n = n;
    model.g = g;
    model.epsilon = epsilon;
    model.pairs = parts * (parts - 1) / 2;
    model.m = edge_target(model.pairs, n, epsilon);
    const auto capacity = model.pairs * n * n;
    if (model.m > capacity)
        throw ParamError("m = " + std::to_string(model.m) + " exceeds the " + std::to_string(capacity) +
                         " edges of the complete k-partite graph");
    return model;
}

std::uint64_t family_size(const Partition& target)
{
    std::uint64_t size = 1;
    for (auto part : target.parts()) {
        // C(2p - 1, p), built incrementally so every step stays integral.
        std::uint64_t c = 1;
        const auto top = static_cast<std::uint64_t>(2 * part - 1);
        for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(part); ++i) {
            if (c > std::numeric_limits<std::uint64_t>::max() / (top - static_cast<std::uint64_t>(part) + i))
                throw ParamError("list family too large for target " + target.to_string());
            c = c * (top - static_cast<std::uint64_t>(part) + i) / i;
        }
        if (size > std::numeric_limits<std::uint64_t>::max() / c)
            throw ParamError("list family too large for target " + target.to_string());
        size *= c;
    }
    return size;
}

std::uint64_t threshold_divisor(const Partition& target, std::size_t r)
{
    return 2 * static_cast<std::uint64_t>(r) * family_size(target) * static_cast<std::uint64_t>(target.k());
}

BaseModel ConstructionParams::base() const
{
    BaseModel model;
    model.parts = k;
    model.n = n;
    model.g = g;
    model.epsilon = epsilon;
    model.pairs = q;
    model.m = m;
    return model;
}

ConstructionParams ConstructionParams::make(Partition lambda, std::vector<Partition> targets, std::size_t g,
                                            double epsilon, std::size_t n, std::size_t r, std::uint64_t seed)
{
    if (lambda.empty())
        throw ParamError("lambda must have at least one part");
    if (targets.empty())
        throw ParamError("at least one target partition is required");
    if (r < 1)
        throw ParamError("gadget order r must be positive");
    auto model = BaseModel::make(lambda.q(), n, g, epsilon);

    ConstructionParams p;
    p.g = g;
    p.epsilon = epsilon;
    p.n = n;
    p.k = lambda.q();
    p.q = model.pairs;
    p.m = model.m;
    p.r = r;
    p.seed = seed;
    for (const auto& target : targets) {
        if (target.empty())
            throw ParamError("target partitions must be nonempty");
        if (le(lambda, target))
            throw ParamError("invariant lambda <= target fails to be false: " + lambda.to_string() + " <= " +
                             target.to_string() + ", so no graph separates them");
        auto size = family_size(target);
        if (n % size != 0)
            throw ParamError("invariant n multiple of |L| violated: n=" + std::to_string(n) + ", |L|=" +
                             std::to_string(size) + " for target " + target.to_string());
        p.t = std::max(p.t, threshold_divisor(target, r));
    }
    p.lambda = std::move(lambda);
    p.targets = std::move(targets);
    return p;
}

// Base graph -----------------------------------------------------------

Graph sample_uniform_partite(const BaseModel& model, Rng& rng)
{
    const std::uint64_t n = model.n;
    const std::uint64_t square = n * n;
    const std::uint64_t total = model.pairs * square;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> part_pairs;
    for (std::uint32_t i = 0; i < model.parts; ++i)
        for (std::uint32_t j = i + 1; j < model.parts; ++j)
            part_pairs.emplace_back(i, j);

    // Partial Fisher-Yates over [0, total) with the permutation held sparsely;
    // draws are identical to shuffling a dense index array.
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    auto at = [&](std::uint64_t i) {
        auto it = moved.find(i);
        return it == moved.end() ? i : it->second;
    };
    std::vector<Edge> edges;
    edges.reserve(model.m);
    for (std::uint64_t i = 0; i < model.m; ++i) {
        const auto j = i + rng.below(total - i);
        const auto pick = at(j);
        moved[j] = at(i);
        const auto [pi, pj] = part_pairs[pick / square];
        const auto rest = pick % square;
        edges.push_back({static_cast<Vertex>(pi * n + rest / n), static_cast<Vertex>(pj * n + rest % n)});
    }

    std::vector<std::uint32_t> parts(model.parts * n);
    for (std::size_t v = 0; v < parts.size(); ++v)
        parts[v] = static_cast<std::uint32_t>(v / n);
    const auto order = parts.size();
    return Graph(order, std::move(edges), std::move(parts));
}

std::vector<Edge> remove_short_cycles(Graph& graph, std::size_t g)
{
    std::vector<Edge> deleted;
    while (auto cycle = shortest_cycle(graph, g)) {
        Edge smallest = Edge::make(cycle->back(), cycle->front());
        for (std::size_t i = 0; i + 1 < cycle->size(); ++i)
            smallest = std::min(smallest, Edge::make((*cycle)[i], (*cycle)[i + 1]));
        graph = graph.without_edge(smallest);
        deleted.push_back(smallest);
    }
    return deleted;
}

BaseSample sample_base_graph(const BaseModel& model, Rng& rng)
{
    BaseSample out;
    out.graph = sample_uniform_partite(model, rng);
    out.sampled_edges = out.graph.size();
    out.deleted = remove_short_cycles(out.graph, model.g);
    return out;
}

// Split labelling ------------------------------------------------------

SplitLabelling sample_split_labelling(const Graph& base, std::size_t r, Rng& rng)
{
    if (r < 1)
        throw std::invalid_argument("split labelling needs r >= 1");
    SplitLabelling f;
    f.r = r;
    f.labels.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        Label label;
        label.low = static_cast<std::uint32_t>(rng.below(r));
        label.high = static_cast<std::uint32_t>(rng.below(r));
        f.labels.push_back(label);
    }
    return f;
}

// Assembled graph ------------------------------------------------------

std::vector<Vertex> ConstructedGraph::part_vertices(std::size_t part) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < base.order(); ++v)
        if (base.part_of(v) == part)
            for (std::size_t s = 0; s < params.r; ++s)
                out.push_back(vertex(v, s));
    return out;
}

ConstructedGraph build_graph(const ConstructionParams& params, const Graph& base, const SplitLabelling& labelling,
                             const std::vector<Gadget>& gadgets)
{
    const auto r = params.r;
    if (!base.partitioned() || base.num_parts() != params.k)
        throw std::invalid_argument("base graph must be partitioned into " + std::to_string(params.k) + " parts");
    if (gadgets.size() != params.k)
        throw std::invalid_argument("need one gadget per part");
    for (const auto& j : gadgets)
        if (j.order() != r)
            throw std::invalid_argument("gadget order mismatch: " + std::to_string(j.order()) + " != r = " +
                                        std::to_string(r));
    if (labelling.labels.size() != base.size() || labelling.r != r)
        throw std::invalid_argument("labelling does not match the base graph");

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto [x, y] = base.edges()[i];
        if (base.part_of(x) > base.part_of(y))
            std::swap(x, y);
        const auto& label = labelling.labels[i];
        if (label.low >= r || label.high >= r)
            throw std::invalid_argument("label outside [r] x [r]");
        edges.push_back(Edge::make(static_cast<Vertex>(x * r + label.low), static_cast<Vertex>(y * r + label.high)));
    }
    for (Vertex v = 0; v < base.order(); ++v)
        for (const auto& e : gadgets[base.part_of(v)].graph.edges())
            edges.push_back({static_cast<Vertex>(v * r + e.u), static_cast<Vertex>(v * r + e.v)});

    ConstructedGraph G;
    G.params = params;
    G.base = base;
    G.labelling = labelling;
    G.gadgets = gadgets;
    G.graph = Graph(base.order() * r, std::move(edges));
    return G;
}

// Adversarial assignment -----------------------------------------------

AdversarialListFamily make_list_family(const Partition& target)
{
    AdversarialListFamily fam;
    fam.target = target;
    Colour next = 1;
    for (auto part : target.parts()) {
        std::vector<Colour> set;
        for (int i = 0; i < 2 * part - 1; ++i)
            set.push_back(next++);
        fam.colour_sets.push_back(std::move(set));
    }

    std::vector<Colour> current;
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t j, std::size_t from, int left) {
        if (j == fam.colour_sets.size()) {
            fam.family.push_back(current);
            return;
        }
        if (left == 0) {
            rec(j + 1, 0, j + 1 < fam.colour_sets.size() ? target.part(j + 1) : 0);
            return;
        }
        const auto& set = fam.colour_sets[j];
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= set.size(); ++i) {
            current.push_back(set[i]);
            rec(j, i + 1, left - 1);
            current.pop_back();
        }
    };
    rec(0, 0, target.part(0));
    return fam;
}

ListAssignment build_bad_assignment(const ConstructedGraph& G, const Partition& target, Rng& rng)
{
    const auto fam = make_list_family(target);
    const auto n = G.params.n;
    const auto members = fam.family.size();
    if (n % members != 0)
        throw ParamError("invariant n multiple of |L| violated: n=" + std::to_string(n) + ", |L|=" +
                         std::to_string(members));

    std::vector<std::size_t> member_of(G.base.order(), 0);
    for (std::size_t part = 0; part < G.params.k; ++part) {
        std::vector<std::size_t> deck;
        for (std::size_t i = 0; i < members; ++i)
            deck.insert(deck.end(), n / members, i);
        rng.shuffle(deck);
        std::size_t next = 0;
        for (Vertex v = 0; v < G.base.order(); ++v)
            if (G.base.part_of(v) == part)
                member_of[v] = deck[next++];
    }

    ListAssignment L;
    L.group_parts = target.parts();
    for (std::size_t j = 0; j < fam.colour_sets.size(); ++j)
        for (auto c : fam.colour_sets[j])
            L.group_of[c] = j;
    L.lists.resize(G.graph.order());
    for (Vertex w = 0; w < G.graph.order(); ++w)
        L.lists[w] = fam.family[member_of[G.block_of(w)]];
    return L;
}

// Pipeline -------------------------------------------------------------

std::vector<Gadget> plan_gadgets(const Partition& lambda, std::size_t g, const std::map<int, Graph>& supplied)
{
    std::vector<Gadget> gadgets;
    std::size_t r = 1;
    for (auto part : lambda.parts()) {
        auto it = supplied.find(part);
        gadgets.push_back(it != supplied.end() ? adopt_gadget(it->second, part, g) : make_gadget(part, g));
        r = std::max(r, gadgets.back().order());
    }
    for (auto& j : gadgets)
        j = pad_to_order(j, r);
    return gadgets;
}

PipelineResult run_pipeline(const PipelineRequest& request)
{
    auto gadgets = plan_gadgets(request.lambda, request.g, request.supplied_gadgets);
    auto params = ConstructionParams::make(request.lambda, request.targets, request.g, request.epsilon, request.n,
                                           gadgets.front().order(), request.seed);

    Rng base_rng(derive_seed(params.seed, 1));
    auto base = sample_base_graph(params.base(), base_rng);
    Rng label_rng(derive_seed(params.seed, 2));
    auto labelling = sample_split_labelling(base.graph, params.r, label_rng);

    PipelineResult out;
    out.sampled_edges = base.sampled_edges;
    out.deleted_edges = base.deleted.size();
    out.graph = build_graph(params, base.graph, labelling, gadgets);
    for (std::size_t i = 0; i < params.targets.size(); ++i) {
        Rng list_rng(derive_seed(params.seed, 3 + i));
        out.assignments.push_back(build_bad_assignment(out.graph, params.targets[i], list_rng));
        out.reports.push_back(verify_construction(out.graph, out.assignments.back(), request.verify));
    }
    out.feasibility = feasibility_report(params);
    return out;
}

}  // namespace lchoose
