#include "lchoose/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace lchoose {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges))
{
    build(n);
}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::uint32_t> part_of)
    : edges_(std::move(edges)), part_of_(std::move(part_of))
{
    if (part_of_.size() != n)
        throw GraphError("partition covers " + std::to_string(part_of_.size()) + " vertices, graph has " +
                         std::to_string(n));
    for (auto p : part_of_)
        num_parts_ = std::max<std::size_t>(num_parts_, p + 1);
    build(n);
}

void Graph::build(std::size_t n)
{
    for (auto& e : edges_) {
        if (e.u == e.v)
            throw GraphError("loop at vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            throw GraphError("edge endpoint out of range");
        e = Edge::make(e.u, e.v);
        if (!part_of_.empty() && part_of_[e.u] == part_of_[e.v])
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " inside part " +
                             std::to_string(part_of_[e.u]));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw GraphError("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));

    adjacency_.assign(n, {});
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : adjacency_)
        std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    const auto& row = adjacency_[a];
    return std::binary_search(row.begin(), row.end(), b);
}

Graph Graph::without_edge(Edge e) const
{
    e = Edge::make(e.u, e.v);
    auto edges = edges_;
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
        throw GraphError("edge not present");
    edges.erase(it);
    if (partitioned())
        return Graph(order(), std::move(edges), part_of_);
    return Graph(order(), std::move(edges));
}

Graph Graph::with_edge(Edge e) const
{
    auto edges = edges_;
    edges.push_back(e);
    if (partitioned())
        return Graph(order(), std::move(edges), part_of_);
    return Graph(order(), std::move(edges));
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<std::int64_t> index(order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (const auto& e : edges_)
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.push_back(Edge::make(static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v])));
    return Graph(vertices.size(), std::move(edges));
}

std::size_t Graph::components() const
{
    std::vector<char> seen(order(), 0);
    std::size_t count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < order(); ++s) {
        if (seen[s])
            continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adjacency_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

// Girth -----------------------------------------------------------------

std::size_t Girth::length() const
{
    if (!length_)
        throw std::logic_error("girth is infinite");
    return *length_;
}

std::string Girth::to_string() const
{
    return length_ ? std::to_string(*length_) : std::string("inf");
}

namespace {

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

struct CycleHit {
    std::size_t length;
    Vertex root, u, w;
};

// Breadth-first search from `root` that stops once no cycle shorter than
// `best` can be closed. Updates `best` and returns the closing edge when a
// shorter cycle through the search tree is found.
std::optional<CycleHit> bfs_cycle(const Graph& g, Vertex root, std::size_t best, std::vector<std::size_t>& dist,
                                  std::vector<Vertex>& parent, std::vector<Vertex>& touched)
{
    std::optional<CycleHit> hit;
    std::queue<Vertex> queue;
    dist[root] = 0;
    parent[root] = root;
    touched.push_back(root);
    queue.push(root);
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop();
        if (2 * dist[u] + 1 >= best)
            break;
        for (auto w : g.neighbours(u)) {
            if (dist[w] == unreached) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                touched.push_back(w);
                queue.push(w);
            } else if (w != parent[u]) {
                auto len = dist[u] + dist[w] + 1;
                if (len < best) {
                    best = len;
                    hit = CycleHit{len, root, u, w};
                }
            }
        }
    }
    return hit;
}

std::optional<CycleHit> find_shortest(const Graph& g, std::size_t below)
{
    std::vector<std::size_t> dist(g.order(), unreached);
    std::vector<Vertex> parent(g.order(), 0);
    std::vector<Vertex> touched;
    std::optional<CycleHit> best;
    std::size_t bound = below;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (auto hit = bfs_cycle(g, s, bound, dist, parent, touched)) {
            best = hit;
            bound = hit->length;
            if (bound == 3)
                break;
        }
        for (auto v : touched)
            dist[v] = unreached;
        touched.clear();
    }
    return best;
}

}  // namespace

Girth girth(const Graph& g)
{
    auto hit = find_shortest(g, unreached);
    return hit ? Girth(hit->length) : Girth::infinite();
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g, std::size_t below)
{
    auto hit = find_shortest(g, below);
    if (!hit)
        return std::nullopt;

    // Replay the search from the winning root to recover both tree paths.
    std::vector<std::size_t> dist(g.order(), unreached);
    std::vector<Vertex> parent(g.order(), 0);
    std::vector<Vertex> touched;
    bfs_cycle(g, hit->root, hit->length + 1, dist, parent, touched);

    std::vector<Vertex> up;  // u .. root
    for (auto v = hit->u; v != hit->root; v = parent[v])
        up.push_back(v);
    up.push_back(hit->root);
    std::vector<Vertex> down;  // w .. (child of root)
    for (auto v = hit->w; v != hit->root; v = parent[v])
        down.push_back(v);
    std::vector<Vertex> cycle(up.begin(), up.end());
    cycle.insert(cycle.end(), down.rbegin(), down.rend());
    return cycle;
}

// Degeneracy ------------------------------------------------------------

Degeneracy degeneracy(const Graph& g)
{
    Degeneracy result;
    std::vector<std::size_t> deg(g.order());
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(g.order(), 0);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        result.value = std::max(result.value, d);
        result.witness.order.push_back(v);
        for (auto w : g.neighbours(v)) {
            if (removed[w])
                continue;
            queue.erase({deg[w], w});
            queue.emplace(--deg[w], w);
        }
    }
    result.witness.back_degree = result.value;
    return result;
}

std::size_t back_degree(const Graph& g, std::span<const Vertex> order)
{
    std::vector<std::size_t> position(g.order());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;
    std::size_t worst = 0;
    for (auto v : order) {
        std::size_t later = 0;
        for (auto w : g.neighbours(v))
            later += position[w] > position[v];
        worst = std::max(worst, later);
    }
    return worst;
}

// Colouring -------------------------------------------------------------

bool Colouring::is_proper(const Graph& g) const
{
    if (colour_of.size() != g.order())
        return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return colour_of[e.u] == colour_of[e.v]; });
}

std::size_t Colouring::distinct_colours() const
{
    std::set<Colour> used(colour_of.begin(), colour_of.end());
    return used.size();
}

Colouring greedy_colouring(const Graph& g, std::span<const Vertex> order)
{
    Colouring c{std::vector<Colour>(g.order(), 0)};
    std::vector<char> taken;
    for (auto v : order) {
        taken.assign(g.degree(v) + 2, 0);
        for (auto w : g.neighbours(v))
            if (c.colour_of[w] > 0 && static_cast<std::size_t>(c.colour_of[w]) < taken.size())
                taken[c.colour_of[w]] = 1;
        Colour pick = 1;
        while (taken[pick])
            ++pick;
        c.colour_of[v] = pick;
    }
    return c;
}

namespace {

class ColourSearch {
public:
    ColourSearch(const Graph& g, std::size_t k, std::vector<Vertex> order)
        : g_(g), k_(k), order_(std::move(order)), colour_(g.order(), 0), blocked_(g.order() * k, 0),
          blocked_mask_(g.order(), 0)
    {
    }

    bool run(std::size_t fixed)
    {
        // The first `fixed` vertices of the order form a clique and take
        // colours 1..fixed; any colouring can be renamed to agree.
        for (std::size_t i = 0; i < fixed; ++i)
            if (!place(order_[i], i + 1))
                return false;
        return extend(fixed, fixed);
    }

    Colouring colouring() const { return Colouring{colour_}; }

private:
    bool place(Vertex v, std::size_t c)
    {
        colour_[v] = static_cast<Colour>(c);
        bool alive = true;
        for (auto w : g_.neighbours(v)) {
            if (blocked_[w * k_ + c - 1]++ == 0)
                blocked_mask_[w] |= std::uint64_t{1} << (c - 1);
            if (colour_[w] == 0 && static_cast<std::size_t>(std::popcount(blocked_mask_[w])) == k_)
                alive = false;
        }
        return alive;
    }

    void unplace(Vertex v, std::size_t c)
    {
        colour_[v] = 0;
        for (auto w : g_.neighbours(v))
            if (--blocked_[w * k_ + c - 1] == 0)
                blocked_mask_[w] &= ~(std::uint64_t{1} << (c - 1));
    }

    bool extend(std::size_t index, std::size_t used)
    {
        if (index == order_.size())
            return true;
        auto v = order_[index];
        auto limit = std::min(k_, used + 1);
        for (std::size_t c = 1; c <= limit; ++c) {
            if (blocked_mask_[v] >> (c - 1) & 1)
                continue;
            bool alive = place(v, c);
            if (alive && extend(index + 1, std::max(used, c)))
                return true;
            unplace(v, c);
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::vector<Vertex> order_;
    std::vector<Colour> colour_;
    std::vector<std::uint32_t> blocked_;
    std::vector<std::uint64_t> blocked_mask_;
};

}  // namespace

std::optional<Colouring> k_colouring(const Graph& g, std::size_t k)
{
    if (g.order() == 0)
        return Colouring{};
    if (k == 0)
        return std::nullopt;

    auto degen = degeneracy(g);
    std::vector<Vertex> reverse(degen.witness.order.rbegin(), degen.witness.order.rend());
    if (degen.value + 1 <= k)
        return greedy_colouring(g, reverse);
    if (k > 64)
        throw std::invalid_argument("k_colouring supports at most 64 colours beyond the degeneracy bound");

    // Greedy clique seeded at the vertex removed last (highest core).
    std::vector<Vertex> clique;
    for (auto v : reverse)
        if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(v, c); }))
            clique.push_back(v);
    if (clique.size() > k)
        return std::nullopt;

    std::vector<char> in_clique(g.order(), 0);
    for (auto v : clique)
        in_clique[v] = 1;
    std::vector<Vertex> order = clique;
    for (auto v : reverse)
        if (!in_clique[v])
            order.push_back(v);

    ColourSearch search(g, k, std::move(order));
    if (!search.run(clique.size()))
        return std::nullopt;
    return search.colouring();
}

// Named graphs ----------------------------------------------------------

namespace named {

Graph cycle(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back(Edge::make(i, static_cast<Vertex>((i + 1) % n)));
    return Graph(n, std::move(edges));
}

Graph path(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    std::vector<std::uint32_t> parts(a + b, 1);
    std::fill_n(parts.begin(), a, 0);
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            edges.push_back({i, static_cast<Vertex>(a + j)});
    return Graph(a + b, std::move(edges), std::move(parts));
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back(Edge::make(i, (i + 1) % 5));          // outer cycle
        edges.push_back(Edge::make(i, i + 5));                // spokes
        edges.push_back(Edge::make(i + 5, (i + 2) % 5 + 5));  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

}  // namespace named

}  // namespace lchoose
