#pragma once

#include <array>
#include <string>
#include <vector>

#include "sidonplex/link_graph.hpp"
#include "sidonplex/sidon.hpp"

namespace sidonplex {

using Word6 = std::array<int, 6>;

/// A length-2pi cycle in a vertex link: six face labels and the colours of
/// the six link vertices. faces[i] sits between neighbour_types[i] and
/// neighbour_types[i+1]. Stored in dihedral-canonical position.
struct Ring {
  int vertex_type = 0;  // 0 when not attached to a vertex type
  Word6 faces{};
  Word6 neighbour_types{};
  std::string canonical_key;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vertex_type == b.vertex_type && a.canonical_key == b.canonical_key;
  }
  friend bool operator<(const Ring& a, const Ring& b) {
    return std::tie(a.vertex_type, a.canonical_key) < std::tie(b.vertex_type, b.canonical_key);
  }
};

/// The 12 images of (faces, types) under rotations and reflections acting
/// jointly on both words.
std::array<std::pair<Word6, Word6>, 12> dihedral_orbit(const Word6& faces, const Word6& types);

/// Lexicographically least (faces, types) over the dihedral orbit.
/// Throws MalformedWord if labels are negative or the types do not alternate
/// between two values different from `vertex_type` (when nonzero).
Ring canonical_ring(const Word6& faces, const Word6& types, int vertex_type = 0);

/// Canonical key of the face word alone (the unsigned view, ignoring marks).
std::string untyped_key(const Ring& ring);

/// One ring per collision pair: faces sigma(a),sigma(b),sigma(c),sigma(c'),
/// sigma(b'),sigma(a') with marks tau(0),tau(1),... Deduplicated and sorted.
std::vector<Ring> rings_from_collisions(const Sequence& seq, Int modulus, const Sigma& sigma, const Tau& tau,
                                        int vertex_type);

/// Every 6-cycle of a vertex- and edge-coloured graph read as a ring.
/// Deduplicated and sorted.
std::vector<Ring> rings_from_hexagons(const LinkGraph& g, int vertex_type);

}  // namespace sidonplex
