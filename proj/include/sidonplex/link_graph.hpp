#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sidonplex/sidon.hpp"

namespace sidonplex {

/// Face-label bijection: sigma[r] is the label of the r-th term.
using Sigma = std::vector<int>;
/// Vertex-colour bijection: tau[parity] is the colour of even (0) / odd (1) vertices.
using Tau = std::array<int, 2>;

/// For S_N graphs `u` is the even endpoint and `term` the index r of the
/// increment 2*a_r - 1. Abstract graphs use term == -1.
struct Edge {
  int u = 0;
  int v = 0;
  int term = -1;
  int colour = -1;
};

struct Incidence {
  int neighbour;
  int edge;
};

struct SidonOrigin {
  Sequence sequence;
  Int modulus;
  std::optional<Sigma> sigma;
  std::optional<Tau> tau;
};

/// Finite multigraph used for the link graphs S_N (and the reference graphs
/// they are compared against). Immutable after construction.
class LinkGraph {
 public:
  LinkGraph(int order, std::vector<Edge> edges, std::vector<int> vertex_colours = {},
            std::optional<SidonOrigin> origin = std::nullopt);

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Incidence> incident(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

  bool has_vertex_colours() const noexcept { return !vertex_colours_.empty(); }
  /// -1 when uncoloured.
  int vertex_colour(int v) const {
    return vertex_colours_.empty() ? -1 : vertex_colours_[static_cast<std::size_t>(v)];
  }
  /// Edge colour if installed, else the term index (S_N) or -1 (abstract).
  int edge_label(int e) const {
    const Edge& ed = edge(e);
    return ed.colour >= 0 ? ed.colour : ed.term;
  }
  bool has_edge_colours() const noexcept;

  /// Number of edges joining u and v.
  int multiplicity(int u, int v) const;
  /// Some edge joining u and v with the given label, if any.
  std::optional<int> edge_between(int u, int v) const;
  /// The neighbour of v across the edge carrying `label` (first match).
  std::optional<int> neighbour_by_label(int v, int label) const;

  const std::optional<SidonOrigin>& origin() const noexcept { return origin_; }

  bool is_bipartite_by_parity() const;
  bool has_loops() const;
  bool is_connected() const;

 private:
  int order_;
  std::vector<Edge> edges_;
  std::vector<int> vertex_colours_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::optional<SidonOrigin> origin_;
};

/// The graph S_N(seq) on residues mod 2N: from every even v an edge to
/// v + 2*a_r - 1 for each r. Colours are installed when sigma/tau are given.
/// Non-Sidon inputs produce multigraphs. Throws ModulusTooSmall / BadBijection.
LinkGraph build_link(const Sequence& seq, Int modulus, std::optional<Sigma> sigma = std::nullopt,
                     std::optional<Tau> tau = std::nullopt);

/// Generalized Petersen graph GP(8,3).
LinkGraph canonical_mk();
/// Incidence graph of the Fano plane (points 0..6, lines 7..13).
LinkGraph canonical_heawood();

/// Shortest cycle length, parallel edges counting as 2-cycles; nullopt for forests.
std::optional<int> girth(const LinkGraph& g);

/// Number of 6-cycles (each counted once).
std::size_t count_hexagons(const LinkGraph& g);

/// Calls `visit` with the vertex cycle v0..v5 and the edges e_i = (v_i, v_{i+1})
/// of every 6-cycle; v0 is the least vertex and v1 < v5.
void for_each_hexagon(const LinkGraph& g,
                      const std::function<void(std::span<const int, 6>, std::span<const int, 6>)>& visit);

struct GraphAutomorphism {
  std::vector<int> mapping;
  bool preserves_edge_labels = false;
  bool swaps_parity = false;
};

/// Checks that `mapping` is an automorphism (edges to edges with equal
/// multiplicity) and fills in the flags; nullopt otherwise.
std::optional<GraphAutomorphism> as_automorphism(const LinkGraph& g, std::span<const int> mapping);

/// k -> -k + 2*a_p - 1 (mod 2N). Requires an S_N graph.
GraphAutomorphism polarity(const LinkGraph& g, std::size_t p);

/// k -> k + shift (mod 2N), shift even. Requires an S_N graph.
GraphAutomorphism translation(const LinkGraph& g, Int shift);

enum class IsoMode {
  Plain,         // unlabelled multigraph isomorphism
  EdgeLabels,    // preserve edge labels
  FullColours,   // preserve edge labels and vertex colours
};

/// Enumerates isomorphisms g1 -> g2 extending `seed` (pairs g1 vertex -> g2
/// vertex) in a fixed deterministic order. `visit` returns false to stop.
/// Returns the number visited.
std::size_t enumerate_isomorphisms(const LinkGraph& g1, const LinkGraph& g2, IsoMode mode,
                                   std::span<const std::pair<int, int>> seed,
                                   const std::function<bool(const std::vector<int>&)>& visit);

std::optional<std::vector<int>> find_isomorphism(const LinkGraph& g1, const LinkGraph& g2, IsoMode mode,
                                                 std::span<const std::pair<int, int>> seed = {});

/// Witness isomorphism (preserving edge labels when `respect_labels`), or nullopt.
std::optional<std::vector<int>> is_isomorphic(const LinkGraph& g1, const LinkGraph& g2, bool respect_labels);

std::vector<std::vector<int>> automorphisms(const LinkGraph& g, IsoMode mode);

/// A subtree given by its edges (pairs of vertices of the host graph).
struct SubTree {
  std::vector<std::pair<int, int>> edges;
};

/// The unique edge-label-preserving automorphism of `g` restricting to
/// `phi0` on T. Throws NoExtension when phi0 is not label preserving or has
/// no extension, NotUnique if the search finds more than one.
GraphAutomorphism extend_tripod(const LinkGraph& g, const SubTree& tree, const SubTree& image,
                                std::span<const std::pair<int, int>> phi0);

/// Whether Aut(g) is transitive on 2-arcs. Disconnected graphs give false.
/// Throws SizeLimitExceeded above 64 vertices.
bool two_arc_transitive(const LinkGraph& g);

}  // namespace sidonplex
