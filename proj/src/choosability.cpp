#include "lchoose/assignment.hpp"
#include "lchoose/detail/list_search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace lchoose {

namespace {

using Mask = std::uint64_t;
using Cover = std::vector<Mask>;  // supports, non-increasing

// Generates every multiset of nonempty vertex subsets covering each of the n
// vertices exactly `times` times, in descending lexicographic order.
//
// The next support must contain the highest vertex that still needs cover:
// supports only shrink, and a support without that vertex lies entirely below
// it, so no later support could reach it.
class CoverGenerator {
public:
    CoverGenerator(std::size_t n, int times) : remaining_(n, times) {}

    template <class F>
    void run(F&& emit)
    {
        stop_ = false;
        recurse(~Mask{0}, emit);
    }

private:
    template <class F>
    void recurse(Mask previous, F& emit)
    {
        int hi = -1;
        for (int v = static_cast<int>(remaining_.size()) - 1; v >= 0; --v)
            if (remaining_[v] > 0) {
                hi = v;
                break;
            }
        if (hi < 0) {
            if (!emit(static_cast<const Cover&>(current_)))
                stop_ = true;
            return;
        }
        Mask lower = 0;
        for (int v = 0; v < hi; ++v)
            if (remaining_[v] > 0)
                lower |= Mask{1} << v;
        const Mask top = Mask{1} << hi;
        for (Mask s = lower;; s = (s - 1) & lower) {
            const Mask support = top | s;
            if (support <= previous) {
                apply(support, -1);
                current_.push_back(support);
                recurse(support, emit);
                current_.pop_back();
                apply(support, +1);
                if (stop_)
                    return;
            }
            if (s == 0)
                break;
        }
    }

    void apply(Mask support, int delta)
    {
        for (auto b = support; b; b &= b - 1)
            remaining_[static_cast<std::size_t>(std::countr_zero(b))] += delta;
    }

    std::vector<int> remaining_;
    Cover current_;
    bool stop_ = false;
};

std::vector<Cover> materialize_covers(std::size_t n, int times, std::uint64_t cap)
{
    std::vector<Cover> out;
    CoverGenerator(n, times).run([&](const Cover& c) {
        out.push_back(c);
        return cap == unlimited || out.size() <= cap;
    });
    return out;
}

// Walks the canonical product of per-group covers. Group 0 is streamed, the
// remaining groups come from materialized lists; groups with equal parts
// take non-decreasing list indices.
class AssignmentWalker {
public:
    AssignmentWalker(std::size_t n, const Partition& lambda, std::uint64_t cap) : n_(n), parts_(lambda.parts())
    {
        if (n > 64)
            throw std::invalid_argument("assignment enumeration supports at most 64 vertices");
        for (std::size_t g = 1; g < parts_.size(); ++g)
            if (!lists_.count(parts_[g]))
                lists_[parts_[g]] = materialize_covers(n, parts_[g], cap);
        chosen_.resize(parts_.size());
        index_.resize(parts_.size());
    }

    /// fn(rank, covers) -> bool (false stops).
    template <class F>
    void run(F&& fn)
    {
        rank_ = 0;
        stop_ = false;
        if (parts_.empty())
            return;
        std::size_t first_index = 0;
        CoverGenerator(n_, parts_[0]).run([&](const Cover& c) {
            chosen_[0] = &c;
            index_[0] = first_index++;
            inner(1, fn);
            return !stop_;
        });
    }

private:
    template <class F>
    void inner(std::size_t g, F& fn)
    {
        if (g == parts_.size()) {
            if (!fn(rank_++, static_cast<const std::vector<const Cover*>&>(chosen_)))
                stop_ = true;
            return;
        }
        const auto& list = lists_.at(parts_[g]);
        std::size_t start = parts_[g] == parts_[g - 1] ? index_[g - 1] : 0;
        for (std::size_t i = start; i < list.size() && !stop_; ++i) {
            chosen_[g] = &list[i];
            index_[g] = i;
            inner(g + 1, fn);
        }
    }

    std::size_t n_;
    std::vector<int> parts_;
    std::map<int, std::vector<Cover>> lists_;
    std::vector<const Cover*> chosen_;
    std::vector<std::size_t> index_;
    std::uint64_t rank_ = 0;
    bool stop_ = false;
};

ListAssignment to_assignment(std::size_t n, const std::vector<int>& parts, const std::vector<const Cover*>& covers)
{
    ListAssignment L;
    L.group_parts = parts;
    L.lists.assign(n, {});
    Colour next = 1;
    for (std::size_t g = 0; g < covers.size(); ++g)
        for (auto support : *covers[g]) {
            L.group_of[next] = g;
            for (auto b = support; b; b &= b - 1)
                L.lists[static_cast<std::size_t>(std::countr_zero(b))].push_back(next);
            ++next;
        }
    return L;
}

std::size_t colour_count(const std::vector<const Cover*>& covers)
{
    std::size_t total = 0;
    for (auto c : covers)
        total += c->size();
    return total;
}

enum class EventKind { Failure, NodeBudget, AssignmentBudget };

struct Event {
    std::uint64_t rank;
    EventKind kind;
    ListAssignment witness;
};

}  // namespace

std::uint64_t enumerate_lambda_assignments(const Graph& g, const Partition& lambda,
                                           const std::function<bool(const ListAssignment&)>& visit)
{
    AssignmentWalker walker(g.order(), lambda, unlimited);
    std::uint64_t visited = 0;
    walker.run([&](std::uint64_t, const std::vector<const Cover*>& covers) {
        ++visited;
        return visit(to_assignment(g.order(), lambda.parts(), covers));
    });
    return visited;
}

std::uint64_t count_lambda_assignments(const Graph& g, const Partition& lambda)
{
    AssignmentWalker walker(g.order(), lambda, unlimited);
    std::uint64_t total = 0;
    walker.run([&](std::uint64_t, const std::vector<const Cover*>&) {
        ++total;
        return true;
    });
    return total;
}

Certificate is_lambda_choosable(const Graph& g, const Partition& lambda, const ChoosabilityOptions& options)
{
    const std::size_t n = g.order();
    const unsigned shards = std::max(1u, options.shards);
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    for (Vertex v = 0; v < n; ++v)
        adjacency[v].assign(g.neighbours(v).begin(), g.neighbours(v).end());

    std::atomic<std::uint64_t> horizon{unlimited};
    std::mutex lock;
    std::optional<Event> first;
    std::uint64_t total = 0;

    auto record = [&](Event e) {
        std::lock_guard guard(lock);
        if (!first || e.rank < first->rank)
            first = std::move(e);
        auto seen = horizon.load();
        while (e.rank < seen && !horizon.compare_exchange_weak(seen, e.rank)) {
        }
    };

    auto work = [&](unsigned shard) {
        AssignmentWalker walker(n, lambda, options.max_assignments);
        std::uint64_t seen = 0;
        walker.run([&](std::uint64_t rank, const std::vector<const Cover*>& covers) {
            if (rank >= horizon.load(std::memory_order_relaxed))
                return false;
            if (rank >= options.max_assignments) {
                record({rank, EventKind::AssignmentBudget, {}});
                return false;
            }
            seen = rank + 1;
            if (rank % shards != shard)
                return true;

            detail::SearchOutcome outcome;
            if (colour_count(covers) <= 64) {
                std::vector<detail::SmallColourSet> domains(n);
                std::size_t colour = 0;
                for (auto cover : covers)
                    for (auto support : *cover) {
                        for (auto b = support; b; b &= b - 1)
                            domains[static_cast<std::size_t>(std::countr_zero(b))].set(colour);
                        ++colour;
                    }
                detail::ListSearch<detail::SmallColourSet> search(adjacency, std::move(domains), options.max_nodes);
                outcome = search.run();
            } else {
                try {
                    outcome = l_colour(g, to_assignment(n, lambda.parts(), covers), options.max_nodes)
                                  ? detail::SearchOutcome::Coloured
                                  : detail::SearchOutcome::Impossible;
                } catch (const BudgetExceeded&) {
                    outcome = detail::SearchOutcome::BudgetExceeded;
                }
            }
            if (outcome == detail::SearchOutcome::Impossible) {
                record({rank, EventKind::Failure, to_assignment(n, lambda.parts(), covers)});
                return false;
            }
            if (outcome == detail::SearchOutcome::BudgetExceeded) {
                record({rank, EventKind::NodeBudget, {}});
                return false;
            }
            return true;
        });
        std::lock_guard guard(lock);
        total = std::max(total, seen);
    };

    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned s = 0; s < shards; ++s)
            pool.emplace_back(work, s);
        for (auto& t : pool)
            t.join();
    }

    if (!first)
        return Choosable{total};
    switch (first->kind) {
    case EventKind::Failure:
        return NotChoosable{std::move(first->witness), first->rank};
    case EventKind::NodeBudget:
        throw BudgetExceeded("list colouring of assignment #" + std::to_string(first->rank) + " exceeded " +
                             std::to_string(options.max_nodes) + " search nodes");
    case EventKind::AssignmentBudget:
        break;
    }
    throw BudgetExceeded("more than " + std::to_string(options.max_assignments) +
                         " assignments to check without a verdict");
}

bool check_certificate(const Graph& g, const Partition& lambda, const Certificate& cert)
{
    if (auto c = std::get_if<Colourable>(&cert))
        return c->colouring.is_proper(g);
    if (auto nc = std::get_if<NotChoosable>(&cert))
        return nc->witness.lambda() == lambda && validate_assignment(g, nc->witness) &&
               !l_colour(g, nc->witness).has_value();
    return true;
}

}  // namespace lchoose
