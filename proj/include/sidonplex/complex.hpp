#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidonplex/link_graph.hpp"
#include "sidonplex/puzzle.hpp"
#include "sidonplex/spec.hpp"

namespace sidonplex {

struct BallVertex {
  int colour = 0;  // 1..3
  int layer = 0;   // distance from the centre in the 1-skeleton
};

struct BallEdge {
  int v = 0;
  int w = 0;
  int colour = 0;  // endpoint colour pair written as 10*low + high: 12, 13 or 23
};

struct BallFace {
  std::array<int, 3> vertices{};  // ordered by vertex colour 1, 2, 3
  int label = 0;
};

/// Link of a ball vertex: one link vertex per neighbour, one link edge per
/// incident face (edge colour = face label, vertex colour = neighbour colour).
struct VertexLink {
  LinkGraph graph;
  std::vector<int> ball_vertex;  // link vertex -> ball vertex
};

/// Finite coloured triangle complex built around a centre vertex.
class CellComplexBall {
 public:
  CellComplexBall() = default;

  int add_vertex(int colour, int layer);
  /// Adds the triangle on three vertices of distinct colours (edges created as
  /// needed). Throws InvalidArgument on repeated colours or a duplicate face.
  int add_face(int a, int b, int c, int label);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }

  const BallVertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const BallEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const BallFace& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
  const std::vector<BallVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<BallEdge>& edges() const noexcept { return edges_; }
  const std::vector<BallFace>& faces() const noexcept { return faces_; }

  std::span<const int> neighbours(int v) const { return neighbours_[static_cast<std::size_t>(v)]; }
  std::span<const int> faces_at(int v) const { return faces_at_[static_cast<std::size_t>(v)]; }
  std::span<const int> faces_on_edge(int e) const { return faces_on_edge_[static_cast<std::size_t>(e)]; }
  std::optional<int> edge_between(int v, int w) const;
  std::optional<int> face_between(int a, int b, int c) const;
  /// Vertex of face f other than a and b.
  int third_vertex(int f, int a, int b) const;

  VertexLink link(int v) const;
  /// Breadth-first distances from the centre.
  std::vector<int> distances() const;

  /// Every incident face exists: the vertex link is complete.
  bool is_interior(int v) const { return vertex(v).layer < radius; }

  int centre = 0;
  int radius = 0;
  std::optional<ComplexSpec> spec;

  friend bool operator==(const CellComplexBall& a, const CellComplexBall& b) {
    return a.centre == b.centre && a.radius == b.radius && a.vertices_.size() == b.vertices_.size() &&
           a.faces_.size() == b.faces_.size() && a.spec == b.spec && a.same_cells(b);
  }

 private:
  bool same_cells(const CellComplexBall& other) const;

  std::vector<BallVertex> vertices_;
  std::vector<BallEdge> edges_;
  std::vector<BallFace> faces_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::vector<int>> faces_at_;
  std::vector<std::vector<int>> faces_on_edge_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::map<std::array<int, 3>, int> face_index_;
};

int edge_colour(int c1, int c2);

/// The radius-R ball of X around a vertex of `centre_colour`. B_1 is the cone
/// over the centre link; each further layer first completes every sphere edge
/// to its n+1 faces and then completes the link of every sphere vertex by
/// embedding its partial link into the model link. A `seed` shuffles the
/// processing order and the embedding anchors. Throws InvalidSpec or LinkEmbedding.
CellComplexBall build_ball(const ComplexSpec& spec, int radius, int centre_colour = 1,
                           std::optional<std::uint64_t> seed = std::nullopt);

struct BallReport {
  bool ok = true;
  std::size_t interior_checked = 0;
  std::vector<std::string> problems;
};

/// Colour axioms on every cell, distinct labels on faces sharing an edge,
/// and for every interior vertex of colour k a link coloured-isomorphic to
/// L_k with girth at least 6.
BallReport verify_ball(const CellComplexBall& ball, const ComplexSpec& spec);

struct BallIsoOptions {
  bool preserve_labels = true;
  bool preserve_colours = false;
};

/// Enumerates isomorphisms a -> b extending `seed` (pairs a vertex -> b vertex),
/// in a fixed order; `visit` returns false to stop. Returns the number visited.
std::size_t enumerate_ball_isomorphisms(const CellComplexBall& a, const CellComplexBall& b, BallIsoOptions options,
                                        std::span<const std::pair<int, int>> seed,
                                        const std::function<bool(const std::vector<int>&)>& visit);

std::optional<std::vector<int>> find_ball_isomorphism(const CellComplexBall& a, const CellComplexBall& b,
                                                      BallIsoOptions options,
                                                      std::span<const std::pair<int, int>> seed = {});

/// Ball isomorphism mapping centre to centre, tried from every isomorphism of
/// the centre links compatible with `options`.
std::optional<std::vector<int>> centred_isomorphism(const CellComplexBall& a, const CellComplexBall& b,
                                                    BallIsoOptions options);

/// Rank 2: exactly three simple length-3 paths join the end points of the
/// root `path` (four link vertices). Throws MalformedPath unless the path is
/// simple, has three edges, and its end points are at distance 3.
bool root_is_rank2(const LinkGraph& link, std::span<const int> path);

/// Rank of the root at ball vertex v running through ball vertices
/// path[0..3] in the link of v; read off the model link of v's colour and,
/// for interior v, cross-checked against the ball's own link.
bool ball_root_is_rank2(const CellComplexBall& ball, int v, std::span<const int> path);

/// Every side of `face` has all n+1 faces present in the ball.
bool fully_interior(const CellComplexBall& ball, int face);

/// Parity of rank-2 roots over one adjacent face per side, checked equal for
/// every such choice. Throws InsufficientNeighborhood when a side has no
/// other face and ParityNotWellDefined when choices disagree.
bool triangle_is_odd(const CellComplexBall& ball, int face);

struct OddnessReport {
  std::size_t faces_checked = 0;
  std::size_t odd = 0;
  std::size_t choices_checked = 0;
  bool all_odd() const { return faces_checked > 0 && odd == faces_checked; }
};

/// triangle_is_odd over every fully interior face.
OddnessReport check_oddness(const CellComplexBall& ball);

/// Radius-R balls of the two sign variants at colour-1 centres admit a
/// face-label-preserving isomorphism, found by seeding with the label
/// preserving maps between the centre links (translations and polarities).
bool sign_variants_isomorphic(const ComplexSpec& spec, const std::array<int, 3>& signs_a,
                              const std::array<int, 3>& signs_b, int radius);

/// Lattice point -> ball vertex on the star of the disk centre.
using StarSeed = std::map<Point, int>;

struct DiskEmbedding {
  std::map<Point, int> vertices;
  std::map<FaceId, int> faces;
  friend bool operator==(const DiskEmbedding&, const DiskEmbedding&) = default;
};

/// Every map of the star of `centre` onto the star of `ball_vertex` that
/// preserves face labels and sends lattice types to vertex colours.
std::vector<StarSeed> star_seeds(const CellComplexBall& ball, const FaceLabelling& lab, int ball_vertex,
                                 Point centre = {});

/// The label-preserving extension of `seed` to the R-disk of `lab`, built star
/// by star; at each step the extension is checked to be the only one.
/// Throws OutOfBall, NoExtension, Coverage or InvalidArgument.
DiskEmbedding embed_disk(const CellComplexBall& ball, const FaceLabelling& lab, int disk_radius,
                         const StarSeed& seed, Point centre = {});

/// For each pair of vertex colours, radius-R balls at centres of those colours
/// admit a face-label-preserving isomorphism.
bool vertex_transitivity_check(const ComplexSpec& spec, int radius);

/// All isomorphisms of the radius-1 balls (centre colour 1) of the two specs,
/// as maps between the centre links.
std::vector<std::vector<int>> one_ball_isomorphisms(const CellComplexBall& a, const CellComplexBall& b);

/// Number of isomorphisms a -> b (no label or colour constraint) extending the
/// centre-link map `link_map` (a.link(centre) vertex -> b.link(centre) vertex).
std::size_t count_extensions(const CellComplexBall& a, const CellComplexBall& b, const std::vector<int>& link_map,
                             std::size_t limit = 2);

/// Throws SpecNotOdd unless every link of both specs is the Moebius-Kantor
/// graph and every fully interior face of their radius-2 balls is odd.
void require_odd_mk(const ComplexSpec& spec);

/// For every map in `link_maps` (all radius-1 isomorphisms when empty),
/// exactly one radius-R isomorphism extends it.
bool extension_uniqueness_check(const ComplexSpec& spec, const ComplexSpec& other, int radius,
                                const std::vector<std::vector<int>>& link_maps = {});

/// DOT rendering of the 1-skeleton.
std::string ball_to_dot(const CellComplexBall& ball);

}  // namespace sidonplex
