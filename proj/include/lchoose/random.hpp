#pragma once

// Seeded randomness with platform-independent output.
//
// std::mt19937_64 output is fully specified by the standard, but the
// <random> distributions are not, so bounded draws and shuffles are done
// here by rejection sampling.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lchoose {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream seed for (seed, index); used for per-trial streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        // Reject the short top range so every residue is equally likely.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Fisher-Yates on the first `count` positions only.
    template <class T>
    void partial_shuffle(std::vector<T>& items, std::size_t count)
    {
        for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
            auto j = i + static_cast<std::size_t>(below(items.size() - i));
            std::swap(items[i], items[j]);
        }
    }

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        partial_shuffle(items, items.size());
    }

    /// Uniform `count`-subset of [0, n), sorted.
    std::vector<std::uint32_t> subset(std::uint32_t n, std::size_t count);

private:
    std::mt19937_64 engine_;
};

inline std::vector<std::uint32_t> Rng::subset(std::uint32_t n, std::size_t count)
{
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i)
        pool[i] = i;
    partial_shuffle(pool, count);
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace lchoose
