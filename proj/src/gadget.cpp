#include "lchoose/gadget.hpp"

#include <algorithm>

namespace lchoose {

Gadget make_gadget(int part, std::size_t g)
{
    if (part < 1)
        throw std::invalid_argument("gadget part size must be positive");
    switch (part) {
    case 1:
        return {Graph(1, {}), 1, g};
    case 2:
        return {Graph(2, {{0, 1}}), 2, g};
    case 3: {
        auto len = std::max<std::size_t>(g, 3);
        if (len % 2 == 0)
            ++len;
        return {named::cycle(len), 3, g};
    }
    default:
        throw UnsupportedGadget("no built-in gadget for part size " + std::to_string(part) +
                                "; supply a graph file and it will be verified");
    }
}

std::vector<std::string> GadgetReport::violations(int part, std::size_t g) const
{
    std::vector<std::string> out;
    if (!degeneracy_ok)
        out.push_back("degeneracy " + std::to_string(degeneracy) + " exceeds " + std::to_string(part - 1));
    if (!girth_ok)
        out.push_back("girth " + girth.to_string() + " below " + std::to_string(g));
    if (!not_colourable_ok)
        out.push_back("graph is " + std::to_string(part - 1) + "-colourable");
    return out;
}

GadgetReport verify_gadget(const Graph& j, int part, std::size_t g)
{
    GadgetReport r;
    r.degeneracy = degeneracy(j).value;
    r.degeneracy_ok = part >= 1 && r.degeneracy <= static_cast<std::size_t>(part - 1);
    r.girth = girth(j);
    r.girth_ok = r.girth.at_least(g);
    r.not_colourable_ok = part >= 1 && !is_k_colourable(j, static_cast<std::size_t>(part - 1));
    return r;
}

Gadget adopt_gadget(Graph j, int part, std::size_t g)
{
    auto report = verify_gadget(j, part, g);
    if (!report.ok()) {
        std::string msg = "supplied gadget for part " + std::to_string(part) + " rejected:";
        for (const auto& v : report.violations(part, g))
            msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    return {std::move(j), part, g};
}

Gadget pad_to_order(const Gadget& j, std::size_t r)
{
    if (r < j.order())
        throw std::invalid_argument("cannot pad a gadget of order " + std::to_string(j.order()) + " down to " +
                                    std::to_string(r));
    return {Graph(r, j.graph.edges()), j.part, j.target_girth};
}

std::string gadget_header(int part, std::size_t g)
{
    return "gadget part=" + std::to_string(part) + " g=" + std::to_string(g);
}

}  // namespace lchoose
