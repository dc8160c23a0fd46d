#pragma once

#include <json.hpp>

#include "sepmatch/contraction.hpp"
#include "sepmatch/factors.hpp"
#include "sepmatch/graph.hpp"
#include "sepmatch/matching.hpp"
#include "sepmatch/separation.hpp"

namespace sepmatch {

using Json = nlohmann::ordered_json;

// [[u,v],...]
Json edges_json(const EdgeList& edges);

// {"type":"matching","edges":[...],"size":k}
Json matching_json(const Matching& m);

// matching_json plus "witness_side".
Json certificate_json(const SeparationCertificate& cert);

// {"type":"spanning","edges":[...],"degree_census":[...]}
Json spanning_json(const SpanningSubgraphCertificate& s);

// {"type":"coloring","edges":[...],"colors":[...]} aligned with g.edges().
Json coloring_json(const Graph& g, const EdgeColoring& c);

Json contraction_json(const ContractionMap& cm);

}  // namespace sepmatch
