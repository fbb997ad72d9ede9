#pragma once

#include "lchoose/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lchoose {

/// Graph attached to every split block of a part with part size `part`:
/// (part-1)-degenerate, girth at least target_girth, not (part-1)-colourable.
struct Gadget {
    Graph graph;
    int part = 0;
    std::size_t target_girth = 0;

    std::size_t order() const { return graph.order(); }
};

class UnsupportedGadget : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Smallest member of the built-in family: a vertex (part 1), an edge
/// (part 2), or the shortest odd cycle of length >= max(g, 3) (part 3).
/// Throws UnsupportedGadget for part >= 4; supply and verify a graph instead.
Gadget make_gadget(int part, std::size_t g);

struct GadgetReport {
    bool degeneracy_ok = false;
    bool girth_ok = false;
    bool not_colourable_ok = false;
    std::size_t degeneracy = 0;
    Girth girth = Girth::infinite();

    bool ok() const { return degeneracy_ok && girth_ok && not_colourable_ok; }
    /// Human-readable list of violated properties (empty when ok()).
    std::vector<std::string> violations(int part, std::size_t g) const;
};

GadgetReport verify_gadget(const Graph& j, int part, std::size_t g);

/// Wraps a user-supplied graph after checking it. Throws std::invalid_argument
/// naming the violated property.
Gadget adopt_gadget(Graph j, int part, std::size_t g);

/// Adds isolated vertices up to order r. Throws std::invalid_argument if r < J.order().
Gadget pad_to_order(const Gadget& j, std::size_t r);

/// Comment line recorded in gadget files.
std::string gadget_header(int part, std::size_t g);

}  // namespace lchoose
