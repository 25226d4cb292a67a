#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sidonplex/complex.hpp"
#include "sidonplex/link_graph.hpp"
#include "sidonplex/puzzle.hpp"
#include "sidonplex/rings.hpp"
#include "sidonplex/sidon.hpp"
#include "sidonplex/spec.hpp"

namespace sidonplex {

using Json = nlohmann::json;

// Every *_from_json throws Error(Parse) on schema violations and the
// module's own error kinds on semantically invalid content.

/// [a0, a1, ...]
Json sequence_to_json(const Sequence& seq);
Sequence sequence_from_json(const Json& j);

/// [{residue, first:[a,b,c], second:[a,b,c]}, ...]
Json collisions_to_json(const std::vector<CollisionPair>& pairs);
std::vector<CollisionPair> collisions_from_json(const Json& j);

/// S_N graphs: {modulus, sequence, sigma, tau, edges:[[v,r],...]} with v the
/// even endpoint and r the term index. Other graphs:
/// {order, edges:[[u,v,label],...], vertexColours}.
Json graph_to_json(const LinkGraph& g);
LinkGraph graph_from_json(const Json& j);

/// {vertexType, faces:[6], neighborTypes:[6], canonicalKey}
Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

/// {region:[[x,y,"up"|"down"],...], labels:[...]}
Json labelling_to_json(const FaceLabelling& lab);
FaceLabelling labelling_from_json(const Json& j);

/// {basis:[[a,0],[b,c]], period, fundamental:<labelling>}
Json periodic_to_json(const PeriodicSolution& sol);
PeriodicSolution periodic_from_json(const Json& j);

/// {sequences, moduli, sigmas, taus}
Json spec_to_json(const ComplexSpec& spec);
ComplexSpec spec_from_json(const Json& j);

/// {vertices:[{id,colour,layer}], edges:[{v,w,colour}], faces:[{v,w,x,colour}],
/// center, radius, spec}; layers are recomputed from the 1-skeleton on input.
Json ball_to_json(const CellComplexBall& ball);
CellComplexBall ball_from_json(const Json& j);

/// Undirected DOT; vertex colour as node attribute, edge label as edge attribute.
std::string link_to_dot(const LinkGraph& g);

Json parse_json(const std::string& text);

}  // namespace sidonplex
