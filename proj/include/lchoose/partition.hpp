#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lchoose {

/// Integer partition: a multiset of positive parts, stored descending.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    /// All-ones partition {1,...,1} of k.
    static Partition ones(int k);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_.at(i); }
    int k() const { return k_; }
    std::size_t q() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Set notation with ascending parts, e.g. "{1, 1, 3}".
    std::string to_string() const;
    /// Comma-separated ascending parts, e.g. "1,1,3".
    std::string to_csv() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int k_ = 0;
};

/// Parses "1,1,3" (any order). Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

/// Blocks of a refinement: block i lists the fine parts grouped under
/// coarse part i (coarse parts in stored order).
using RefinementMap = std::vector<std::vector<int>>;

/// Groups the parts of `fine` into blocks summing to the parts of `coarse`,
/// or nullopt if no such grouping exists.
std::optional<RefinementMap> refinement(const Partition& fine, const Partition& coarse);
inline bool refines(const Partition& fine, const Partition& coarse)
{
    return refinement(fine, coarse).has_value();
}

/// Evidence that lambda <= lambda_p.
struct OrderWitness {
    /// Block sums of lambda_p, one block per part of lambda.
    std::vector<int> lambda_pp;
    /// alignment[b] = index into lambda.parts() dominated by block b.
    std::vector<std::size_t> alignment;
    /// refinement_map[b] = the parts of lambda_p forming block b.
    RefinementMap refinement_map;

    Partition lambda_pp_partition() const { return Partition(lambda_pp); }
};

/// Decides lambda <= lambda_p: some partition lambda'' of lambda_p.k() with
/// lambda.q() parts dominates lambda part-wise and is refined by lambda_p.
std::optional<OrderWitness> order_witness(const Partition& lambda, const Partition& lambda_p);
inline bool le(const Partition& lambda, const Partition& lambda_p)
{
    return order_witness(lambda, lambda_p).has_value();
}

/// Re-checks every claim carried by `w`.
bool check_order_witness(const Partition& lambda, const Partition& lambda_p, const OrderWitness& w);

/// Every partition of k exactly once, descending-lex ({k} first, ones last).
std::vector<Partition> enumerate_partitions(int k);

}  // namespace lchoose
