#include "lchoose/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lchoose {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (auto p : parts_)
        if (p < 1)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    k_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::ones(int k)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

std::string Partition::to_string() const
{
    std::string s = "{";
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (it != parts_.rbegin())
            s += ", ";
        s += std::to_string(*it);
    }
    return s + "}";
}

std::string Partition::to_csv() const
{
    std::string s;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!s.empty())
            s += ',';
        s += std::to_string(*it);
    }
    return s;
}

Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw std::invalid_argument("empty part in partition '" + std::string(text) + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 1)
            throw std::invalid_argument("invalid part '" + token + "' in partition '" + std::string(text) + "'");
        parts.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (c != ' ' && c != '{' && c != '}')
            token += c;
    }
    flush();
    return Partition(std::move(parts));
}

namespace {

bool fill_bins(const std::vector<int>& items, std::size_t next, std::vector<int>& room, RefinementMap& blocks)
{
    if (next == items.size())
        return true;
    for (std::size_t b = 0; b < room.size(); ++b) {
        if (room[b] < items[next])
            continue;
        // Bins with equal remaining room are interchangeable at this point.
        bool seen = false;
        for (std::size_t a = 0; a < b && !seen; ++a)
            seen = room[a] == room[b];
        if (seen)
            continue;
        room[b] -= items[next];
        blocks[b].push_back(items[next]);
        if (fill_bins(items, next + 1, room, blocks))
            return true;
        blocks[b].pop_back();
        room[b] += items[next];
    }
    return false;
}

}  // namespace

std::optional<RefinementMap> refinement(const Partition& fine, const Partition& coarse)
{
    if (fine.k() != coarse.k() || fine.q() < coarse.q())
        return std::nullopt;
    std::vector<int> room = coarse.parts();
    RefinementMap blocks(coarse.q());
    if (!fill_bins(fine.parts(), 0, room, blocks))
        return std::nullopt;
    return blocks;
}

namespace {

// Assigns each part of lambda_p to one of q blocks in restricted-growth
// form, so each set partition into exactly q blocks is visited once.
class BlockSearch {
public:
    BlockSearch(const Partition& lambda, const Partition& lambda_p)
        : lambda_(lambda), items_(lambda_p.parts()), block_of_(items_.size()), sums_(lambda.q(), 0)
    {
    }

    std::optional<OrderWitness> run()
    {
        if (recurse(0, 0))
            return witness_;
        return std::nullopt;
    }

private:
    bool recurse(std::size_t index, std::size_t used)
    {
        const auto q = lambda_.q();
        if (items_.size() - index < q - used)
            return false;
        if (index == items_.size())
            return used == q && accept();
        for (std::size_t b = 0; b <= used && b < q; ++b) {
            block_of_[index] = b;
            sums_[b] += items_[index];
            if (recurse(index + 1, std::max(used, b + 1)))
                return true;
            sums_[b] -= items_[index];
        }
        return false;
    }

    bool accept()
    {
        // Sorted dominance is equivalent to some dominating bijection.
        std::vector<std::size_t> by_sum(sums_.size());
        std::iota(by_sum.begin(), by_sum.end(), 0);
        std::stable_sort(by_sum.begin(), by_sum.end(), [&](auto a, auto b) { return sums_[a] > sums_[b]; });
        for (std::size_t i = 0; i < by_sum.size(); ++i)
            if (sums_[by_sum[i]] < lambda_.part(i))
                return false;

        witness_.lambda_pp = sums_;
        witness_.alignment.assign(sums_.size(), 0);
        for (std::size_t i = 0; i < by_sum.size(); ++i)
            witness_.alignment[by_sum[i]] = i;
        witness_.refinement_map.assign(sums_.size(), {});
        for (std::size_t i = 0; i < items_.size(); ++i)
            witness_.refinement_map[block_of_[i]].push_back(items_[i]);
        return true;
    }

    const Partition& lambda_;
    const std::vector<int>& items_;
    std::vector<std::size_t> block_of_;
    std::vector<int> sums_;
    OrderWitness witness_;
};

}  // namespace

std::optional<OrderWitness> order_witness(const Partition& lambda, const Partition& lambda_p)
{
    if (lambda.empty() || lambda_p.k() < lambda.k() || lambda_p.q() < lambda.q())
        return std::nullopt;
    return BlockSearch(lambda, lambda_p).run();
}

bool check_order_witness(const Partition& lambda, const Partition& lambda_p, const OrderWitness& w)
{
    const auto q = lambda.q();
    if (w.lambda_pp.size() != q || w.alignment.size() != q || w.refinement_map.size() != q)
        return false;
    std::vector<char> hit(q, 0);
    for (std::size_t b = 0; b < q; ++b) {
        auto target = w.alignment[b];
        if (target >= q || hit[target])
            return false;
        hit[target] = 1;
        if (w.lambda_pp[b] < lambda.part(target))
            return false;
        const auto& block = w.refinement_map[b];
        if (block.empty() || std::accumulate(block.begin(), block.end(), 0) != w.lambda_pp[b])
            return false;
    }
    std::vector<int> all;
    for (const auto& block : w.refinement_map)
        all.insert(all.end(), block.begin(), block.end());
    return Partition(all) == lambda_p;
}

std::vector<Partition> enumerate_partitions(int k)
{
    if (k < 1)
        throw std::invalid_argument("enumerate_partitions needs k >= 1");
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(k, k);
    return out;
}

}  // namespace lchoose
