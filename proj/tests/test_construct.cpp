#include "oracles.hpp"

#include "lchoose/bounds.hpp"
#include "lchoose/bundle.hpp"
#include "lchoose/construct.hpp"
#include "lchoose/montecarlo.hpp"
#include "lchoose/occupancy.hpp"
#include "lchoose/text.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>

using namespace lchoose;

namespace {

ConstructedGraph tiny_instance(std::uint64_t seed, std::size_t n = 6, std::size_t g = 5)
{
    auto params = ConstructionParams::make(Partition{1, 1}, {Partition{2}}, g, 0.04, n, 1, seed);
    Rng rng(seed);
    auto base = sample_base_graph(params.base(), rng);
    auto f = sample_split_labelling(base.graph, 1, rng);
    return build_graph(params, base.graph, f, plan_gadgets(params.lambda, g, {}));
}

// Two parts {0..n-1}, {n..2n-1} with the given cross edges.
Graph bipartite_base(std::size_t n, std::vector<Edge> edges)
{
    std::vector<std::uint32_t> parts(2 * n);
    for (std::size_t v = 0; v < 2 * n; ++v)
        parts[v] = static_cast<std::uint32_t>(v / n);
    return Graph(2 * n, std::move(edges), std::move(parts));
}

}  // namespace

TEST_CASE("edge target")
{
    CHECK(edge_target(3, 100, 0.05) == 475);
    CHECK(edge_target(3, 100, 0.05) == static_cast<std::uint64_t>(std::floor(3.0L * std::pow(100.0L, 1.1L))));
    CHECK(edge_target(1, 24, 0.04) == static_cast<std::uint64_t>(std::floor(std::pow(24.0L, 1.08L))));
    CHECK(edge_target(0, 50, 0.01) == 0);
}

TEST_CASE("parameter invariants")
{
    CHECK_THROWS_AS(BaseModel::make(2, 10, 5, 0.05), ParamError);
    CHECK_THROWS_AS(BaseModel::make(2, 10, 5, 0.0), ParamError);
    CHECK_THROWS_AS(BaseModel::make(2, 10, 5, -0.01), ParamError);
    CHECK_NOTHROW(BaseModel::make(2, 10, 5, 0.049));
    CHECK_THROWS_AS(BaseModel::make(2, 0, 5, 0.01), ParamError);

    auto p = ConstructionParams::make(Partition{1, 1}, {Partition{2}}, 5, 0.04, 6, 1, 1);
    CHECK(p.k == 2);
    CHECK(p.q == 1);
    CHECK(p.t == 12);
    CHECK(ConstructionParams::make(Partition{1, 1}, {Partition{2}}, 5, 0.04, 6, 3, 1).t == 36);
    CHECK(ConstructionParams::make(Partition{1, 1, 1}, {Partition{1, 1}}, 5, 0.04, 7, 1, 1).t == 4);
    auto multi = ConstructionParams::make(Partition{1, 1, 1}, {Partition{1, 1}, Partition{2, 1}}, 5, 0.04, 6, 1, 1);
    CHECK(multi.t == 18);

    CHECK_THROWS_AS(ConstructionParams::make(Partition{2}, {Partition{1, 1}}, 5, 0.04, 6, 1, 1), ParamError);
    CHECK_THROWS_AS(ConstructionParams::make(Partition{1, 1}, {Partition{2}}, 5, 0.04, 7, 1, 1), ParamError);
    CHECK_THROWS_AS(ConstructionParams::make(Partition{1, 1}, {}, 5, 0.04, 6, 1, 1), ParamError);
    CHECK_THROWS_AS(ConstructionParams::make(Partition{1, 1}, {Partition{2}}, 5, 0.06, 6, 1, 1), ParamError);
    try {
        ConstructionParams::make(Partition{1, 1}, {Partition{2}}, 5, 0.04, 7, 1, 1);
    } catch (const ParamError& e) {
        CHECK(std::string(e.what()).find("multiple") != std::string::npos);
    }
}

TEST_CASE("adversarial list family")
{
    auto fam = make_list_family(Partition{2});
    CHECK(fam.colour_sets == std::vector<std::vector<Colour>>{{1, 2, 3}});
    CHECK(fam.family == std::vector<std::vector<Colour>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(family_size(Partition{2}) == 3);
    CHECK(family_size(Partition{1, 2}) == 3);
    CHECK(family_size(Partition{1, 1}) == 1);
    CHECK(family_size(Partition{3}) == 10);
    CHECK(family_size(Partition{2, 2}) == 9);
    for (const auto& target : {Partition{1, 2}, Partition{3, 2}, Partition{1, 1, 1}, Partition{4}}) {
        auto f = make_list_family(target);
        std::uint64_t product = 1;
        for (auto k : target.parts()) {
            std::uint64_t c = 1;
            for (int i = 1; i <= k; ++i)
                c = c * static_cast<std::uint64_t>(2 * k - 1 - k + i) / static_cast<std::uint64_t>(i);
            product *= c;
        }
        CHECK(f.family.size() == product);
        CHECK(std::set<std::vector<Colour>>(f.family.begin(), f.family.end()).size() == product);
        for (std::size_t j = 0; j < f.colour_sets.size(); ++j)
            CHECK(f.colour_sets[j].size() == static_cast<std::size_t>(2 * target.part(j) - 1));
    }
    CHECK(threshold_divisor(Partition{2}, 3) == 36);
}

TEST_CASE("base graph sampling")
{
    BaseModel model;
    model.parts = 2;
    model.n = 4;
    model.g = 3;
    model.epsilon = 0.01;
    model.pairs = 1;
    model.m = 8;
    Rng rng(1);
    auto s = sample_base_graph(model, rng);
    CHECK(s.graph.size() == 8);
    CHECK(s.deleted.empty());
    CHECK(s.graph.num_parts() == 2);

    auto m3 = BaseModel::make(3, 100, 4, 0.05);
    CHECK(m3.m == 475);
    Rng a(9), b(9);
    auto ga = sample_base_graph(m3, a), gb = sample_base_graph(m3, b);
    CHECK(serialize_graph(ga.graph) == serialize_graph(gb.graph));
    CHECK(girth(ga.graph).at_least(4));
    CHECK(ga.graph.size() + ga.deleted.size() == ga.sampled_edges);
    CHECK(ga.sampled_edges == 475);
    for (Vertex v = 0; v < ga.graph.order(); ++v)
        CHECK(ga.graph.part_of(v) == v / 100);
}

TEST_CASE("uniform sampling: every possible edge appears with probability m / (q n^2)")
{
    BaseModel model;
    model.parts = 3;
    model.n = 2;
    model.g = 3;
    model.epsilon = 0.01;
    model.pairs = 3;
    model.m = 5;
    const int samples = 12000;
    std::map<std::pair<Vertex, Vertex>, int> freq;
    for (int i = 0; i < samples; ++i) {
        Rng rng(derive_seed(77, static_cast<std::uint64_t>(i)));
        auto g = sample_uniform_partite(model, rng);
        CHECK(g.size() == 5);
        for (const auto& e : g.edges())
            ++freq[{e.u, e.v}];
    }
    CHECK(freq.size() == 12);
    const double p = 5.0 / 12.0;
    const double sd = std::sqrt(samples * p * (1 - p));
    for (const auto& [e, c] : freq)
        CHECK(std::abs(c - samples * p) < 4 * sd);
}

TEST_CASE("short cycle surgery")
{
    Graph g = named::petersen();
    auto deleted = remove_short_cycles(g, 6);
    CHECK(girth(g).at_least(6));
    CHECK(g.size() + deleted.size() == 15);
    Graph h = named::complete(5);
    remove_short_cycles(h, 4);
    CHECK(girth(h).at_least(4));
    Graph tree = named::path(5);
    CHECK(remove_short_cycles(tree, 100).empty());
}

TEST_CASE("split labelling")
{
    auto base = bipartite_base(3, {{0, 3}, {1, 4}, {2, 5}, {0, 4}});
    Rng rng(4);
    auto one = sample_split_labelling(base, 1, rng);
    for (const auto& l : one.labels)
        CHECK(l == Label{0, 0});
    CHECK_THROWS(sample_split_labelling(base, 0, rng));

    std::vector<Edge> many;
    for (Vertex u = 0; u < 60; ++u)
        for (Vertex v = 60; v < 120; ++v)
            many.push_back({u, v});
    auto big = bipartite_base(60, many);
    Rng r1(5), r2(5);
    auto f = sample_split_labelling(big, 3, r1);
    CHECK(f == sample_split_labelling(big, 3, r2));
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> cells;
    for (const auto& l : f.labels)
        ++cells[{l.low, l.high}];
    CHECK(cells.size() == 9);
    const double E = big.size() / 9.0, sd = std::sqrt(big.size() * (1.0 / 9) * (8.0 / 9));
    for (const auto& [cell, c] : cells)
        CHECK(std::abs(c - E) < 4 * sd);
}

TEST_CASE("assembled graph structure")
{
    // r = 1 with single-vertex gadgets reproduces the base graph.
    auto G = tiny_instance(3, 12);
    CHECK(G.graph.edges() == G.base.edges());
    CHECK(G.graph.order() == G.base.order());

    // r = 5 with gadget C5 on part 3 and padded K2 on part 2.
    auto params = ConstructionParams::make(Partition{3, 2}, {Partition{5}}, 5, 0.04, 126, 5, 1);
    Rng rng(2);
    auto base = sample_base_graph(params.base(), rng);
    auto f = sample_split_labelling(base.graph, params.r, rng);
    auto gadgets = plan_gadgets(params.lambda, 5, {});
    auto H = build_graph(params, base.graph, f, gadgets);
    CHECK(H.graph.order() == 2 * 126 * 5);
    CHECK(H.graph.size() == base.graph.size() + 126 * (5 + 1));
    CHECK(girth(H.graph).at_least(5));
    for (std::size_t i = 0; i < base.graph.size(); ++i) {
        auto [x, y] = base.graph.edges()[i];
        CHECK(H.graph.adjacent(H.vertex(x, f.labels[i].low), H.vertex(y, f.labels[i].high)));
    }
    for (Vertex v = 0; v < base.graph.order(); ++v) {
        std::vector<Vertex> block;
        for (std::size_t s = 0; s < 5; ++s)
            block.push_back(H.vertex(v, s));
        CHECK(H.graph.induced(block) == gadgets[base.graph.part_of(v)].graph);
    }
    for (std::size_t part = 0; part < 2; ++part) {
        auto d = degeneracy(H.graph.induced(H.part_vertices(part))).value;
        CHECK(d <= static_cast<std::size_t>(params.lambda.part(part) - 1));
    }
    auto L = build_bad_assignment(H, Partition{5}, rng);
    auto report = verify_construction(H, L);
    CHECK(report.structural_ok());

    CHECK_THROWS_AS(build_graph(params, base.graph, f, plan_gadgets(Partition{1, 1}, 5, {})), std::invalid_argument);
}

TEST_CASE("adversarial assignment")
{
    auto G = tiny_instance(8, 12);
    Rng rng(1);
    auto L = build_bad_assignment(G, Partition{2}, rng);
    CHECK(validate_assignment(G.graph, L));
    CHECK(L.lambda() == Partition{2});
    for (std::size_t part = 0; part < 2; ++part) {
        std::map<std::vector<Colour>, int> uses;
        for (Vertex v = 0; v < G.base.order(); ++v)
            if (G.base.part_of(v) == part)
                ++uses[L.lists[v]];
        CHECK(uses.size() == 3);
        for (const auto& [list, count] : uses)
            CHECK(count == 4);
    }

    // target {1,1}: everyone gets the same 2-list, so L-colourable iff 2-colourable.
    auto p11 = ConstructionParams::make(Partition{1, 1, 1}, {Partition{1, 1}}, 3, 0.05, 5, 1, 4);
    Rng r(4);
    auto base = sample_base_graph(p11.base(), r);
    auto H = build_graph(p11, base.graph, sample_split_labelling(base.graph, 1, r), plan_gadgets(p11.lambda, 3, {}));
    auto L11 = build_bad_assignment(H, Partition{1, 1}, r);
    for (const auto& list : L11.lists)
        CHECK(list == L11.lists.front());
    CHECK(L11.lists.front().size() == 2);
    CHECK(l_colour(H.graph, L11).has_value() == is_k_colourable(H.graph, 2));
    CHECK_THROWS_AS(build_bad_assignment(H, Partition{2}, r), ParamError);
}

TEST_CASE("verification report")
{
    auto G = tiny_instance(5, 6);
    Rng rng(3);
    auto L = build_bad_assignment(G, Partition{2}, rng);
    VerifyOptions with_check;
    with_check.colour_check_cap = 100;
    auto report = verify_construction(G, L, with_check);
    CHECK(report.structural_ok());
    REQUIRE(report.l_colourable.has_value());
    CHECK(*report.l_colourable == l_colour(G.graph, L).has_value());
    CHECK_FALSE(verify_construction(G, L).l_colourable.has_value());
    CHECK(report.to_text().find("structural_ok=true") != std::string::npos);

    // Inject a second cross edge between two adjacent blocks: needs r >= 2.
    auto params = ConstructionParams::make(Partition{2, 2}, {Partition{4}}, 5, 0.04, 35, 2, 1);
    Rng r(6);
    auto base = sample_base_graph(params.base(), r);
    auto f = sample_split_labelling(base.graph, 2, r);
    auto H = build_graph(params, base.graph, f, plan_gadgets(params.lambda, 5, {}));
    auto LH = build_bad_assignment(H, Partition{4}, r);
    CHECK(verify_construction(H, LH).structural_ok());
    REQUIRE(base.graph.size() > 0);
    auto [x, y] = base.graph.edges().front();
    const auto& label = f.labels.front();
    auto extra = Edge::make(H.vertex(x, 1 - label.low), H.vertex(y, 1 - label.high));
    auto corrupted = H;
    corrupted.graph = H.graph.with_edge(extra);
    auto bad = verify_construction(corrupted, LH);
    CHECK_FALSE(bad.cross_edges_ok);
    REQUIRE(bad.crowded_blocks);
    CHECK(*bad.crowded_blocks == std::pair<Vertex, Vertex>{x, y});

    auto wrong = L;
    wrong.lists[0] = wrong.lists[0] == std::vector<Colour>{1, 2} ? std::vector<Colour>{1, 3} : std::vector<Colour>{1, 2};
    CHECK_FALSE(verify_construction(G, wrong).assignment_ok);
}

TEST_CASE("binomial inequalities")
{
    CHECK(binomial_bounds(10, 3, 0).all());
    CHECK(binomial_bounds(10, 3, 2).all());
    CHECK(binomial_bounds(100, 10, 5).all());
    CHECK_THROWS_AS(binomial_bounds(10, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(binomial_bounds(10, 6, 5), std::invalid_argument);
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        auto a = 3 + rng.below(198);
        auto b = 1 + rng.below(a - 2);
        auto room = std::min(b, a - b - 1);
        if (room == 0)
            continue;
        auto x = rng.below(room);
        CHECK(binomial_bounds(a, b, x).all());
    }
}

TEST_CASE("feasibility conditions")
{
    auto p = ConstructionParams::make(Partition{1, 1, 1}, {Partition{1, 1}}, 5, 0.04, 100, 1, 1);
    auto report = feasibility_report(p);
    REQUIRE(report.conditions.size() == 3);
    CHECK(report.conditions[0].name == "short_cycles");
    CHECK_FALSE(report.conditions[0].holds);
    // 100^0.04 against 2 * 3^4 = 162.
    CHECK(report.conditions[0].log_margin ==
          doctest::Approx(std::log(162.0) - 0.04 * std::log(100.0)).epsilon(1e-9));
    for (std::size_t which = 0; which < 3; ++which) {
        const auto& c = report.conditions[which];
        REQUIRE(c.min_n_log2.has_value());
        auto j = static_cast<double>(*c.min_n_log2);
        CHECK(feasibility_margin(p, which, j) < 0);
        if (j > 0)
            CHECK(feasibility_margin(p, which, j - 1) >= 0);
    }
    // n^eps > 162 first at n = 2^j with j = ceil(log2(162) / 0.04) (or one more at the boundary).
    auto j0 = std::ceil(std::log2(162.0) / 0.04);
    CHECK(static_cast<double>(*report.conditions[0].min_n_log2) >= j0);
    CHECK(static_cast<double>(*report.conditions[0].min_n_log2) <= j0 + 1);

    auto g3 = ConstructionParams::make(Partition{1, 1, 1}, {Partition{1, 1}}, 3, 0.04, 100, 1, 1);
    auto r3 = feasibility_report(g3);
    CHECK(r3.conditions[0].holds);
    CHECK(*r3.conditions[0].min_n_log2 == 0);
    CHECK(report.to_text().find("feasibility.short_cycles.holds=false") != std::string::npos);
}

TEST_CASE("cycle counting matches brute-force enumeration")
{
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto n = 3 + rng.below(6);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.below(100) < 45)
                    edges.push_back({u, v});
        Graph g(n, edges);
        auto counts = count_cycles_by_length(g, 6);
        auto ref = oracle::cycles_by_length(g, 6);
        for (std::size_t l = 3; l <= 6; ++l)
            CHECK(counts[l] == (ref.count(l) ? ref.at(l) : 0));
    }
    CHECK(count_cycles_by_length(named::complete(4), 4)[3] == 4);
    CHECK(count_cycles_by_length(named::complete(4), 4)[4] == 3);
}

TEST_CASE("short-cycle Monte Carlo")
{
    auto bip = montecarlo_short_cycles(BaseModel::make(2, 60, 4, 0.05), 5, 1);
    for (auto c : bip.per_trial)
        CHECK(c == 0);
    auto g3 = montecarlo_short_cycles(BaseModel::make(3, 30, 3, 0.05), 3, 1);
    CHECK(g3.max == 0);
    CHECK(g3.bound_sum == 0);
    auto s = montecarlo_short_cycles(BaseModel::make(3, 50, 5, 0.04), 4, 2);
    CHECK(s.per_trial.size() == 4);
    double sum = 0;
    for (auto c : s.per_trial)
        sum += static_cast<double>(c);
    CHECK(s.mean == doctest::Approx(sum / 4));
    double bound = 0;
    for (int l = 3; l <= 4; ++l)
        bound += std::pow(3.0, l) * std::pow(50.0, 2 * 0.04 * l);
    CHECK(s.bound_sum == doctest::Approx(bound));
    CHECK(s.bound_tail == doctest::Approx(std::pow(50.0, -0.04) * std::pow(50.0, 2 * 5 * 0.04)));
    CHECK(montecarlo_short_cycles(BaseModel::make(3, 50, 5, 0.04), 4, 2).per_trial == s.per_trial);
}

TEST_CASE("expansion on a complete bipartite base")
{
    std::vector<Edge> all;
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = 10; v < 20; ++v)
            all.push_back({u, v});
    auto base = bipartite_base(10, all);
    BaseModel model;
    model.parts = 2;
    model.n = 10;
    model.g = 3;
    model.epsilon = 0.01;
    model.pairs = 1;
    model.m = 100;
    Rng rng(1);
    auto s = check_expansion(base, model, 3, 20, rng);
    CHECK(s.subset_size == 3);
    for (auto c : s.counts)
        CHECK(c == 9);
    CHECK(s.expectation == doctest::Approx(9));
    CHECK_THROWS_AS(check_expansion(base, model, 11, 5, rng), std::invalid_argument);
}

TEST_CASE("bad pairs")
{
    // r = 1: a probe is bad iff A and B span no edge.
    auto model = BaseModel::make(3, 40, 5, 0.04);
    auto stats = montecarlo_bad_pairs(model, 1, 4, 3, 300, 7);
    for (const auto& t : stats.per_trial)
        CHECK(t.bad == t.edgeless);
    CHECK(stats.bad_fraction == stats.edgeless_fraction);

    // No edges: every probe is bad.
    auto empty = bipartite_base(6, {});
    Rng rng(2);
    auto f = sample_split_labelling(empty, 3, rng);
    auto rep = check_no_bad_pair(empty, f, 2, 50, rng);
    CHECK(rep.bad == 50);
    CHECK(rep.bad_fraction() == 1.0);
}

TEST_CASE("exhaustive bad pairs match hand enumeration")
{
    // n = 4, t = 2, r = 2: 6 * 6 pairs (A, B), 16 selectors each.
    auto one = bipartite_base(4, {{0, 4}});
    SplitLabelling f1{2, {Label{0, 1}}};
    auto r1 = exhaustive_bad_pairs(one, f1, 2);
    CHECK(r1.probes == 576);
    CHECK(r1.pairs == 36);
    CHECK(r1.bad == 540);  // good only when 0 in A, 4 in B, selector (0, 1) there: 9 pairs * 4
    CHECK(r1.edgeless == 27 * 16);
    CHECK(r1.bad_pairs == 36);

    auto two = bipartite_base(4, {{0, 4}, {1, 5}});
    SplitLabelling f2{2, {Label{0, 1}, Label{1, 1}}};
    auto r2 = exhaustive_bad_pairs(two, f2, 2);
    CHECK(r2.bad == 576 - 71);  // 7 + 8*4 + 8*4 good triples
    CHECK(r2.edgeless == 19 * 16);

    auto r1_all = exhaustive_bad_pairs(one, SplitLabelling{1, {Label{0, 0}}}, 2);
    CHECK(r1_all.bad == r1_all.edgeless);
    CHECK_THROWS_AS(exhaustive_bad_pairs(one, f1, 2, 100), std::invalid_argument);
}

TEST_CASE("occupied colour groups")
{
    // One part, six isolated blocks, target {1}, t = 2: threshold 3.
    ConstructionParams p;
    p.lambda = Partition{1};
    p.targets = {Partition{1}};
    p.g = 3;
    p.epsilon = 0.01;
    p.n = 6;
    p.k = 1;
    p.r = 1;
    p.t = 2;
    auto base = Graph(6, {}, std::vector<std::uint32_t>(6, 0));
    auto G = build_graph(p, base, SplitLabelling{1, {}}, {make_gadget(1, 3)});
    ListAssignment L;
    L.group_parts = {1};
    L.group_of = {{7, 0}};
    L.lists.assign(6, {7});
    auto rep = occupied_groups(G, Colouring{std::vector<Colour>(6, 7)}, L);
    CHECK(rep.threshold == 3);
    CHECK(rep.occupied == std::vector<std::set<std::size_t>>{{0}});

    ListAssignment spread;
    spread.group_parts = {1};
    for (Colour c = 1; c <= 6; ++c)
        spread.group_of[c] = 0;
    spread.lists = {{1}, {2}, {3}, {4}, {5}, {6}};
    auto rep2 = occupied_groups(G, Colouring{{1, 2, 3, 4, 5, 6}}, spread);
    CHECK(rep2.occupied.front().empty());
    CHECK_THROWS_AS(occupied_groups(G, Colouring{{1, 1, 1, 1, 1, 2}}, spread), std::invalid_argument);
}

TEST_CASE("occupied groups are pairwise disjoint when every A, B span an edge")
{
    // Base K_{3,3} with r = 1 and threshold 1: every pair of nonempty sets in
    // different parts spans an edge, which is what the disjointness argument uses.
    ConstructionParams p;
    p.lambda = Partition{1, 1};
    p.targets = {Partition{2}};
    p.g = 3;
    p.epsilon = 0.01;
    p.n = 3;
    p.k = 2;
    p.q = 1;
    p.r = 1;
    p.t = 3;
    std::vector<Edge> all;
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v)
            all.push_back({u, v});
    auto base = bipartite_base(3, all);
    auto G = build_graph(p, base, SplitLabelling{1, std::vector<Label>(9)}, plan_gadgets(p.lambda, 3, {}));
    const auto fam = make_list_family(Partition{2});

    std::size_t colourings = 0;
    std::vector<std::size_t> member(6, 0);
    while (true) {
        ListAssignment L;
        L.group_parts = {2};
        for (Colour c = 1; c <= 3; ++c)
            L.group_of[c] = 0;
        for (auto m : member)
            L.lists.push_back(fam.family[m]);
        for (unsigned pick = 0; pick < 64; ++pick) {
            Colouring phi;
            for (std::size_t v = 0; v < 6; ++v)
                phi.colour_of.push_back(L.lists[v][pick >> v & 1]);
            if (!phi.is_proper(G.graph))
                continue;
            ++colourings;
            auto rep = occupied_groups(G, phi, L);
            CHECK(rep.threshold == 1);
            CHECK(rep.pairwise_disjoint());
            for (std::size_t part = 0; part < 2; ++part) {
                std::set<Colour> used;
                for (std::size_t v = 3 * part; v < 3 * part + 3; ++v)
                    used.insert(phi.colour_of[v]);
                CHECK((rep.occupied[part].count(0) == 1) == (used.size() >= 2));
            }
        }
        std::size_t d = 0;
        while (d < 6 && ++member[d] == 3)
            member[d++] = 0;
        if (d == 6)
            break;
    }
    CHECK(colourings > 0);
}

TEST_CASE("pipeline determinism and bundle round trip")
{
    PipelineRequest req;
    req.lambda = Partition{1, 2};
    req.targets = {Partition{3}};
    req.g = 5;
    req.epsilon = 0.04;
    req.n = 20;
    req.seed = 11;
    auto a = run_pipeline(req), b = run_pipeline(req);
    CHECK(serialize_graph(a.graph.graph) == serialize_graph(b.graph.graph));
    CHECK(serialize_graph(a.graph.base) == serialize_graph(b.graph.base));
    CHECK(a.graph.labelling == b.graph.labelling);
    CHECK(a.assignments == b.assignments);
    CHECK(a.reports.front().structural_ok());

    auto dir = std::filesystem::temp_directory_path() / "lchoose_bundle_test";
    std::filesystem::remove_all(dir);
    write_bundle(dir.string(), a);
    auto back = read_bundle(dir.string());
    CHECK(back.rebuild_matches);
    CHECK(back.graph.graph == a.graph.graph);
    CHECK(back.graph.base == a.graph.base);
    CHECK(back.graph.labelling == a.graph.labelling);
    CHECK(back.assignments == a.assignments);
    CHECK(serialize_params(back.graph.params) == serialize_params(a.graph.params));
    CHECK(verify_construction(back.graph, back.assignments.front()).structural_ok());

    // Tampering with G.graph is detected.
    text::write_file((dir / "G.graph").string(), serialize_graph(a.graph.graph.without_edge(a.graph.graph.edges().front())));
    CHECK_FALSE(read_bundle(dir.string()).rebuild_matches);
    std::filesystem::remove_all(dir);
}

TEST_CASE("params and labelling text")
{
    auto p = ConstructionParams::make(Partition{1, 1}, {Partition{2}}, 5, 0.04, 6, 1, 42);
    auto text = serialize_params(p);
    CHECK(text == "lambda=1,1\ntargets=2\ng=5\nepsilon=0.04\nn=6\nk=2\nq=1\nm=6\nr=1\nt=12\nseed=42\n");
    auto back = parse_params(text);
    CHECK(serialize_params(back) == text);
    CHECK_THROWS_AS(parse_params("lambda=1,1\n"), ParseError);
    auto wrong_m = text;
    wrong_m.replace(wrong_m.find("m=6"), 3, "m=7");
    CHECK_THROWS_AS(parse_params(wrong_m), ParseError);

    auto base = bipartite_base(2, {{0, 2}, {1, 3}});
    SplitLabelling f{3, {Label{0, 2}, Label{1, 1}}};
    auto lt = serialize_labelling(base, f);
    CHECK(lt == "# r=3\nf 1 3 1 3\nf 2 4 2 2\n");
    CHECK(parse_labelling(lt, base, 3) == f);
    CHECK(parse_labelling("f 3 1 3 1\nf 2 4 2 2\n", base, 3) == f);
    CHECK_THROWS_AS(parse_labelling("f 1 3 1 4\nf 2 4 2 2\n", base, 3), ParseError);
    CHECK_THROWS_AS(parse_labelling("f 1 3 1 3\n", base, 3), ParseError);
    CHECK_THROWS_AS(parse_labelling("f 1 2 1 3\nf 1 3 1 3\nf 2 4 2 2\n", base, 3), ParseError);
}
