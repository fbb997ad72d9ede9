#pragma once

// Construction bundle directory:
//   params.txt      key=value lines
//   base.graph      base graph (graph text format)
//   labelling.txt   lines "f <u> <v> <s> <t>": copy s at u, copy t at v
//   G.graph         assembled graph
//   assignment.txt  adversarial assignment for the first target
//                   (assignment_2.txt, ... for further targets)
//   report.txt      verification and feasibility results

#include "lchoose/construct.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lchoose {

std::string serialize_params(const ConstructionParams& p);
ConstructionParams parse_params(std::string_view text);

std::string serialize_labelling(const Graph& base, const SplitLabelling& f);
SplitLabelling parse_labelling(std::string_view text, const Graph& base, std::size_t r);

/// Name of the assignment file for target `index` (0-based).
std::string assignment_file_name(std::size_t index);

std::string pipeline_report_text(const PipelineResult& result);

void write_bundle(const std::string& dir, const PipelineResult& result);

struct Bundle {
    ConstructedGraph graph;
    std::vector<ListAssignment> assignments;
    /// Whether rebuilding G from params, base graph, labelling and the
    /// gadgets found on the blocks reproduces G.graph exactly.
    bool rebuild_matches = false;
};

Bundle read_bundle(const std::string& dir);

}  // namespace lchoose
