#include "sepmatch/json_io.hpp"

namespace sepmatch {

Json edges_json(const EdgeList& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json matching_json(const Matching& m) {
  Json out;
  out["type"] = "matching";
  out["edges"] = edges_json(m.edges);
  out["size"] = m.size();
  return out;
}

Json certificate_json(const SeparationCertificate& cert) {
  Json out = matching_json(cert.matching);
  out["witness_side"] = cert.witness_side;
  return out;
}

Json spanning_json(const SpanningSubgraphCertificate& s) {
  Json out;
  out["type"] = "spanning";
  out["edges"] = edges_json(s.edges);
  out["degree_census"] = s.degree_census;
  return out;
}

Json coloring_json(const Graph& g, const EdgeColoring& c) {
  Json out;
  out["type"] = "coloring";
  out["edges"] = edges_json(g.edges());
  out["colors"] = c.color;
  return out;
}

Json contraction_json(const ContractionMap& cm) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < cm.contracted.edges().size(); ++i) {
    const MultiEdge& e = cm.contracted.edges()[i];
    edges.push_back({{"edge", {e.u, e.v}}, {"origin", cm.edge_origin[i].path}});
  }
  Json out;
  out["type"] = "multigraph";
  out["n"] = cm.contracted.order();
  out["branch_vertex"] = cm.branch_vertex;
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace sepmatch
