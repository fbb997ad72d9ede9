#pragma once

// Exact list-colouring search over colour indices 0..C-1.
// Shared by l_colour and the choosability enumerator.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lchoose::detail {

/// Colour set for up to 64 colours.
struct SmallColourSet {
    std::uint64_t bits = 0;

    explicit SmallColourSet(std::size_t = 0) {}
    bool test(std::size_t c) const { return bits >> c & 1; }
    void set(std::size_t c) { bits |= std::uint64_t{1} << c; }
    void reset(std::size_t c) { bits &= ~(std::uint64_t{1} << c); }
    std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
    bool empty() const { return bits == 0; }
    template <class F>
    void for_each(F&& f) const
    {
        for (auto b = bits; b; b &= b - 1)
            f(static_cast<std::size_t>(std::countr_zero(b)));
    }
};

/// Colour set of arbitrary width.
struct WideColourSet {
    std::vector<std::uint64_t> words;

    explicit WideColourSet(std::size_t colours = 0) : words((colours + 63) / 64, 0) {}
    bool test(std::size_t c) const { return words[c / 64] >> (c % 64) & 1; }
    void set(std::size_t c) { words[c / 64] |= std::uint64_t{1} << (c % 64); }
    void reset(std::size_t c) { words[c / 64] &= ~(std::uint64_t{1} << (c % 64)); }
    std::size_t count() const
    {
        std::size_t n = 0;
        for (auto w : words)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const
    {
        for (auto w : words)
            if (w)
                return false;
        return true;
    }
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words.size(); ++i)
            for (auto b = words[i]; b; b &= b - 1)
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    }
};

enum class SearchOutcome { Coloured, Impossible, BudgetExceeded };

/// Backtracking with forward checking. The next vertex is the uncoloured one
/// with the fewest remaining colours (smallest index on ties), so forced
/// singleton lists are always resolved first.
template <class Set>
class ListSearch {
public:
    ListSearch(std::span<const std::vector<std::uint32_t>> adjacency, std::vector<Set> domains,
               std::uint64_t max_nodes)
        : adjacency_(adjacency), domains_(std::move(domains)), colour_(domains_.size(), -1), max_nodes_(max_nodes)
    {
    }

    SearchOutcome run()
    {
        for (const auto& d : domains_)
            if (d.empty())
                return SearchOutcome::Impossible;
        auto found = solve();
        if (over_budget_)
            return SearchOutcome::BudgetExceeded;
        return found ? SearchOutcome::Coloured : SearchOutcome::Impossible;
    }

    /// Chosen colour index per vertex (valid after Coloured).
    const std::vector<std::int64_t>& colours() const { return colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool solve()
    {
        if (++nodes_ > max_nodes_) {
            over_budget_ = true;
            return false;
        }
        std::size_t pick = domains_.size();
        std::size_t best = ~std::size_t{0};
        for (std::size_t v = 0; v < domains_.size(); ++v) {
            if (colour_[v] >= 0)
                continue;
            auto c = domains_[v].count();
            if (c < best) {
                best = c;
                pick = v;
                if (c <= 1)
                    break;
            }
        }
        if (pick == domains_.size())
            return true;
        if (best == 0)
            return false;

        const Set options = domains_[pick];
        bool done = false;
        options.for_each([&](std::size_t c) {
            if (done || over_budget_)
                return;
            colour_[pick] = static_cast<std::int64_t>(c);
            auto mark = trail_.size();
            bool alive = true;
            for (auto w : adjacency_[pick]) {
                if (colour_[w] >= 0 || !domains_[w].test(c))
                    continue;
                domains_[w].reset(c);
                trail_.push_back({w, c});
                if (domains_[w].empty()) {
                    alive = false;
                    break;
                }
            }
            if (alive && solve()) {
                done = true;
                return;
            }
            while (trail_.size() > mark) {
                domains_[trail_.back().first].set(trail_.back().second);
                trail_.pop_back();
            }
            colour_[pick] = -1;
        });
        return done;
    }

    std::span<const std::vector<std::uint32_t>> adjacency_;
    std::vector<Set> domains_;
    std::vector<std::int64_t> colour_;
    std::vector<std::pair<std::uint32_t, std::size_t>> trail_;
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_;
    bool over_budget_ = false;
};

}  // namespace lchoose::detail
