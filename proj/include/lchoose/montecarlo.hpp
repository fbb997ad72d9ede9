#pragma once

// Monte Carlo diagnostics for the random base graph and split labelling.
// Trial i of a run with seed s draws from the stream derive_seed(s, i), so
// results do not depend on evaluation order.

#include "lchoose/construct.hpp"

#include <cstdint>
#include <vector>

namespace lchoose {

/// Exact number of cycles of each length 3..max_length (index = length).
std::vector<std::uint64_t> count_cycles_by_length(const Graph& g, std::size_t max_length);

struct ShortCycleStats {
    std::vector<std::uint64_t> per_trial;  // cycles of length <= g-1
    double mean = 0;
    std::uint64_t max = 0;
    double bound_sum = 0;   // sum_{l=3}^{g-1} k^l n^{2 eps l}
    double bound_tail = 0;  // n^{-eps} n^{2 g eps}
};

/// Counts short cycles in `trials` uniform samples taken before surgery.
ShortCycleStats montecarlo_short_cycles(const BaseModel& model, std::size_t trials, std::uint64_t seed);

struct ExpansionStats {
    std::size_t subset_size = 0;  // floor(n/t)
    std::vector<std::uint64_t> counts;
    std::uint64_t min = 0;
    double mean = 0;
    double stddev = 0;
    double std_error = 0;
    /// Pooled runs only: mean per sampled graph, and the standard error of
    /// the overall mean computed from those graph means. Samples drawn from
    /// the same graph are correlated, so this is the one to test against.
    std::vector<double> graph_means;
    double graph_std_error = 0;
    double expectation = 0;  // m |A||B| / (q n^2)
    double half_floor = 0;   // n^{1+eps} / 2
    double floor = 0;        // n^{1+eps}

    /// |mean - expectation| in standard errors (graph_std_error when pooled).
    double z() const;
};

/// Edge counts between `samples` random pairs A in V_i, B in V_j (i < j
/// uniform) of size floor(n/t). Throws std::invalid_argument if floor(n/t) = 0.
ExpansionStats check_expansion(const Graph& base, const BaseModel& model, std::uint64_t t, std::size_t samples,
                               Rng& rng);

/// Pools check_expansion over `trials` fresh uniform samples (before surgery).
ExpansionStats montecarlo_expansion(const BaseModel& model, std::uint64_t t, std::size_t trials,
                                    std::size_t samples_per_graph, std::uint64_t seed);

struct BadPairReport {
    std::uint64_t probes = 0;
    std::uint64_t bad = 0;
    /// Probes where A and B span no edge at all.
    std::uint64_t edgeless = 0;
    /// Exhaustive mode only: pairs (A, B) bad for some selector.
    std::uint64_t pairs = 0;
    std::uint64_t bad_pairs = 0;

    double bad_fraction() const { return probes ? static_cast<double>(bad) / static_cast<double>(probes) : 0.0; }
};

/// Probes random (A, B, selector) triples: the triple is bad when no edge
/// xy, x in A, y in B carries the label (selector(x), selector(y)).
BadPairReport check_no_bad_pair(const Graph& base, const SplitLabelling& labelling, std::uint64_t t,
                                std::size_t probes, Rng& rng);

/// Every pair of parts, every A, B of size floor(n/t) and every selector.
/// Throws std::invalid_argument when that exceeds `limit` triples.
BadPairReport exhaustive_bad_pairs(const Graph& base, const SplitLabelling& labelling, std::uint64_t t,
                                   std::uint64_t limit = 50'000'000);

struct BadPairStats {
    std::vector<BadPairReport> per_trial;
    double bad_fraction = 0;
    double edgeless_fraction = 0;
};

/// Samples a base graph (with surgery) and a labelling per trial, then probes.
BadPairStats montecarlo_bad_pairs(const BaseModel& model, std::size_t r, std::uint64_t t, std::size_t trials,
                                  std::size_t probes, std::uint64_t seed);

}  // namespace lchoose
