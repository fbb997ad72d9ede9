#include "lchoose/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lchoose {

std::vector<std::uint64_t> count_cycles_by_length(const Graph& g, std::size_t max_length)
{
    std::vector<std::uint64_t> count(std::max<std::size_t>(max_length + 1, 3), 0);
    if (max_length < 3)
        return count;

    std::vector<char> on_path(g.order(), 0);
    // Each cycle is found from its smallest vertex, once per direction.
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<std::pair<Vertex, std::size_t>> stack;  // vertex, next neighbour slot
        on_path[s] = 1;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto& [u, slot] = stack.back();
            const auto depth = stack.size();
            auto nbrs = g.neighbours(u);
            if (slot == nbrs.size()) {
                on_path[u] = 0;
                stack.pop_back();
                continue;
            }
            const auto w = nbrs[slot++];
            if (w == s) {
                if (depth >= 3)
                    ++count[depth];
            } else if (w > s && !on_path[w] && depth < max_length) {
                on_path[w] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    for (auto& c : count)
        c /= 2;
    return count;
}

ShortCycleStats montecarlo_short_cycles(const BaseModel& model, std::size_t trials, std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("montecarlo_short_cycles needs at least one trial");
    ShortCycleStats stats;
    const auto longest = model.g >= 1 ? model.g - 1 : 0;
    long double total = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        auto graph = sample_uniform_partite(model, rng);
        auto by_length = count_cycles_by_length(graph, longest);
        std::uint64_t short_cycles = 0;
        for (std::size_t l = 3; l <= longest; ++l)
            short_cycles += by_length[l];
        stats.per_trial.push_back(short_cycles);
        stats.max = std::max(stats.max, short_cycles);
        total += static_cast<long double>(short_cycles);
    }
    stats.mean = static_cast<double>(total / static_cast<long double>(trials));

    const long double n = static_cast<long double>(model.n);
    const long double k = static_cast<long double>(model.parts);
    const long double eps = model.epsilon;
    long double bound = 0;
    for (std::size_t l = 3; l <= longest; ++l)
        bound += std::pow(k, static_cast<long double>(l)) * std::pow(n, 2 * eps * static_cast<long double>(l));
    stats.bound_sum = static_cast<double>(bound);
    stats.bound_tail = static_cast<double>(std::pow(n, (2 * static_cast<long double>(model.g) - 1) * eps));
    return stats;
}

double ExpansionStats::z() const
{
    const double se = graph_means.size() > 1 ? graph_std_error : std_error;
    if (se == 0)
        return mean == expectation ? 0.0 : INFINITY;
    return std::abs(mean - expectation) / se;
}

namespace {

std::vector<std::vector<Vertex>> part_members(const Graph& base)
{
    if (!base.partitioned())
        throw std::invalid_argument("base graph must be partitioned");
    std::vector<std::vector<Vertex>> members(base.num_parts());
    for (Vertex v = 0; v < base.order(); ++v)
        members[base.part_of(v)].push_back(v);
    return members;
}

std::vector<std::pair<std::size_t, std::size_t>> part_pairs(std::size_t parts)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < parts; ++i)
        for (std::size_t j = i + 1; j < parts; ++j)
            out.emplace_back(i, j);
    return out;
}

std::vector<Vertex> pick(const std::vector<Vertex>& from, std::size_t count, Rng& rng)
{
    std::vector<Vertex> out;
    for (auto i : rng.subset(static_cast<std::uint32_t>(from.size()), count))
        out.push_back(from[i]);
    return out;
}

void summarize(ExpansionStats& s)
{
    if (s.counts.empty())
        return;
    const auto N = static_cast<long double>(s.counts.size());
    long double sum = 0;
    s.min = s.counts.front();
    for (auto c : s.counts) {
        sum += static_cast<long double>(c);
        s.min = std::min(s.min, c);
    }
    const long double mean = sum / N;
    long double sq = 0;
    for (auto c : s.counts)
        sq += (static_cast<long double>(c) - mean) * (static_cast<long double>(c) - mean);
    s.mean = static_cast<double>(mean);
    s.stddev = s.counts.size() > 1 ? static_cast<double>(std::sqrt(sq / (N - 1))) : 0.0;
    s.std_error = static_cast<double>(s.stddev / std::sqrt(N));
}

}  // namespace

ExpansionStats check_expansion(const Graph& base, const BaseModel& model, std::uint64_t t, std::size_t samples,
                               Rng& rng)
{
    if (t == 0 || model.n / t == 0)
        throw std::invalid_argument("floor(n/t) must be at least 1 (n=" + std::to_string(model.n) +
                                    ", t=" + std::to_string(t) + ")");
    auto members = part_members(base);
    auto pairs = part_pairs(members.size());
    if (pairs.empty())
        throw std::invalid_argument("expansion needs at least two parts");

    ExpansionStats s;
    s.subset_size = model.n / t;
    const long double a = static_cast<long double>(s.subset_size);
    const long double n = static_cast<long double>(model.n);
    s.expectation = static_cast<double>(static_cast<long double>(model.m) * a * a /
                                        (static_cast<long double>(model.pairs) * n * n));
    s.floor = static_cast<double>(std::pow(n, 1 + static_cast<long double>(model.epsilon)));
    s.half_floor = s.floor / 2;

    std::vector<char> in_b(base.order(), 0);
    for (std::size_t probe = 0; probe < samples; ++probe) {
        auto [i, j] = pairs[rng.below(pairs.size())];
        auto A = pick(members[i], s.subset_size, rng);
        auto B = pick(members[j], s.subset_size, rng);
        for (auto y : B)
            in_b[y] = 1;
        std::uint64_t edges = 0;
        for (auto x : A)
            for (auto y : base.neighbours(x))
                edges += in_b[y];
        for (auto y : B)
            in_b[y] = 0;
        s.counts.push_back(edges);
    }
    summarize(s);
    return s;
}

ExpansionStats montecarlo_expansion(const BaseModel& model, std::uint64_t t, std::size_t trials,
                                    std::size_t samples_per_graph, std::uint64_t seed)
{
    ExpansionStats pooled;
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        auto graph = sample_uniform_partite(model, rng);
        auto s = check_expansion(graph, model, t, samples_per_graph, rng);
        pooled.subset_size = s.subset_size;
        pooled.expectation = s.expectation;
        pooled.floor = s.floor;
        pooled.half_floor = s.half_floor;
        pooled.counts.insert(pooled.counts.end(), s.counts.begin(), s.counts.end());
        pooled.graph_means.push_back(s.mean);
    }
    summarize(pooled);
    if (pooled.graph_means.size() > 1) {
        const auto G = static_cast<long double>(pooled.graph_means.size());
        long double sum = 0, sq = 0;
        for (auto m : pooled.graph_means)
            sum += m;
        for (auto m : pooled.graph_means)
            sq += (m - sum / G) * (m - sum / G);
        pooled.graph_std_error = static_cast<double>(std::sqrt(sq / (G - 1)) / std::sqrt(G));
    }
    return pooled;
}

namespace {

struct LabelledEdge {
    std::size_t a;  // index of the endpoint within A
    std::size_t b;  // index within B
    Label label;
};

// Edges between A (lower part) and B with their labels.
std::vector<LabelledEdge> edges_between(const Graph& base, const SplitLabelling& f, const std::vector<Vertex>& A,
                                        const std::vector<Vertex>& B)
{
    std::vector<LabelledEdge> out;
    const auto& edges = base.edges();
    for (std::size_t ia = 0; ia < A.size(); ++ia)
        for (std::size_t ib = 0; ib < B.size(); ++ib) {
            auto e = Edge::make(A[ia], B[ib]);
            auto it = std::lower_bound(edges.begin(), edges.end(), e);
            if (it != edges.end() && *it == e)
                out.push_back({ia, ib, f.labels[static_cast<std::size_t>(it - edges.begin())]});
        }
    return out;
}

bool is_bad(const std::vector<LabelledEdge>& between, const std::vector<std::uint32_t>& sel_a,
            const std::vector<std::uint32_t>& sel_b)
{
    for (const auto& e : between)
        if (e.label.low == sel_a[e.a] && e.label.high == sel_b[e.b])
            return false;
    return true;
}

}  // namespace

BadPairReport check_no_bad_pair(const Graph& base, const SplitLabelling& labelling, std::uint64_t t,
                                std::size_t probes, Rng& rng)
{
    auto members = part_members(base);
    auto pairs = part_pairs(members.size());
    if (pairs.empty())
        throw std::invalid_argument("bad-pair probes need at least two parts");
    const auto n = members.front().size();
    if (t == 0 || n / t == 0)
        throw std::invalid_argument("floor(n/t) must be at least 1");
    const auto size = n / t;

    BadPairReport report;
    std::vector<std::uint32_t> sel_a(size), sel_b(size);
    for (std::size_t probe = 0; probe < probes; ++probe) {
        auto [i, j] = pairs[rng.below(pairs.size())];
        auto A = pick(members[i], size, rng);
        auto B = pick(members[j], size, rng);
        for (auto& s : sel_a)
            s = static_cast<std::uint32_t>(rng.below(labelling.r));
        for (auto& s : sel_b)
            s = static_cast<std::uint32_t>(rng.below(labelling.r));
        auto between = edges_between(base, labelling, A, B);
        ++report.probes;
        report.edgeless += between.empty();
        report.bad += is_bad(between, sel_a, sel_b);
    }
    return report;
}

namespace {

// Visits every `size`-subset of `from` in lexicographic order.
template <class F>
void for_each_subset(const std::vector<Vertex>& from, std::size_t size, F&& fn)
{
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i)
        idx[i] = i;
    std::vector<Vertex> subset(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i)
            subset[i] = from[idx[i]];
        fn(subset);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == from.size() - size + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

double choose(std::size_t n, std::size_t k)
{
    double c = 1;
    for (std::size_t i = 1; i <= k; ++i)
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

}  // namespace

BadPairReport exhaustive_bad_pairs(const Graph& base, const SplitLabelling& labelling, std::uint64_t t,
                                   std::uint64_t limit)
{
    auto members = part_members(base);
    auto pairs = part_pairs(members.size());
    const auto n = members.empty() ? 0 : members.front().size();
    if (t == 0 || n / t == 0)
        throw std::invalid_argument("floor(n/t) must be at least 1");
    const auto size = n / t;
    const double triples = static_cast<double>(pairs.size()) * choose(n, size) * choose(n, size) *
                           std::pow(static_cast<double>(labelling.r), 2.0 * static_cast<double>(size));
    if (triples > static_cast<double>(limit))
        throw std::invalid_argument("exhaustive bad-pair search would visit " + std::to_string(triples) +
                                    " triples, above the limit of " + std::to_string(limit));

    BadPairReport report;
    std::vector<std::uint32_t> sel(2 * size);
    for (auto [i, j] : pairs)
        for_each_subset(members[i], size, [&](const std::vector<Vertex>& A) {
            for_each_subset(members[j], size, [&](const std::vector<Vertex>& B) {
                auto between = edges_between(base, labelling, A, B);
                bool pair_bad = false;
                std::fill(sel.begin(), sel.end(), 0);
                while (true) {
                    std::vector<std::uint32_t> sa(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(size));
                    std::vector<std::uint32_t> sb(sel.begin() + static_cast<std::ptrdiff_t>(size), sel.end());
                    ++report.probes;
                    report.edgeless += between.empty();
                    if (is_bad(between, sa, sb)) {
                        ++report.bad;
                        pair_bad = true;
                    }
                    std::size_t d = 0;
                    while (d < sel.size() && ++sel[d] == labelling.r)
                        sel[d++] = 0;
                    if (d == sel.size())
                        break;
                }
                ++report.pairs;
                report.bad_pairs += pair_bad;
            });
        });
    return report;
}

BadPairStats montecarlo_bad_pairs(const BaseModel& model, std::size_t r, std::uint64_t t, std::size_t trials,
                                  std::size_t probes, std::uint64_t seed)
{
    BadPairStats stats;
    std::uint64_t bad = 0, edgeless = 0, total = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        auto base = sample_base_graph(model, rng);
        auto labelling = sample_split_labelling(base.graph, r, rng);
        auto report = check_no_bad_pair(base.graph, labelling, t, probes, rng);
        bad += report.bad;
        edgeless += report.edgeless;
        total += report.probes;
        stats.per_trial.push_back(report);
    }
    if (total) {
        stats.bad_fraction = static_cast<double>(bad) / static_cast<double>(total);
        stats.edgeless_fraction = static_cast<double>(edgeless) / static_cast<double>(total);
    }
    return stats;
}

}  // namespace lchoose
