#pragma once

#include <array>
#include <compare>
#include <functional>
#include <tuple>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sidonplex/rings.hpp"
#include "sidonplex/spec.hpp"

namespace sidonplex {

// Triangular lattice in axial coordinates: the six neighbours of (x,y) are
// (x+1,y), (x,y+1), (x-1,y+1), (x-1,y), (x,y-1), (x+1,y-1).

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

enum class Orientation : std::uint8_t { Up, Down };

/// up(x,y) has corners (x,y),(x+1,y),(x,y+1); down(x,y) has corners
/// (x+1,y),(x,y+1),(x+1,y+1).
struct FaceId {
  int x = 0;
  int y = 0;
  Orientation orientation = Orientation::Up;
  friend auto operator<=>(const FaceId&, const FaceId&) = default;
};

/// ((x + 2y) mod 3) + 1. Every unit triangle sees all three values.
int vertex_type(Point p);
inline int vertex_type(int x, int y) { return vertex_type(Point{x, y}); }

std::array<Point, 3> corners(const FaceId& f);
/// The face with these three corners (any order); throws InvalidArgument if
/// they do not bound a unit triangle.
FaceId face_from_corners(std::array<Point, 3> pts);

/// Counter-clockwise neighbours n_0..n_5 and faces f_0..f_5, f_i between n_i and n_{i+1}.
std::array<Point, 6> star_neighbours(Point p);
std::array<FaceId, 6> star_faces(Point p);

int hex_distance(Point a, Point b);

/// Faces of the combinatorial R-disk: all corners within distance R of the
/// centre (R = 0 and R = 1 both give the centre star), in spiral order.
std::vector<FaceId> disk_faces(Point centre, int radius);
/// Vertices whose whole star lies in the R-disk.
std::vector<Point> disk_interior(Point centre, int radius);

struct PuzzleInstance {
  int n = 0;  // labels are 0..n
  std::map<int, std::vector<Ring>> ring_sets;  // keyed by vertex type 1..3

  /// Throws InvalidArgument unless keys are exactly {1,2,3} and rings are well formed.
  void validate() const;
};

/// Ring sets of the three vertex types read off the spec's collisions.
PuzzleInstance puzzle_instance(const ComplexSpec& spec);

/// Partial or total assignment of labels to lattice faces; the region is the key set.
using FaceLabelling = std::map<FaceId, int>;

/// Ring membership of the star at v. Throws IncompleteStar if a face is unlabelled.
bool check_vertex(const PuzzleInstance& inst, const FaceLabelling& lab, Point v);

/// Every interior vertex of the R-disk passes check_vertex. Throws Coverage
/// if a disk face is unlabelled.
bool check_disk(const PuzzleInstance& inst, const FaceLabelling& lab, Point centre, int radius);

/// Every labelling of the R-disk around `centre` passing all interior checks,
/// extending `seed` when given. Faces are assigned in spiral order with
/// labels ascending; the output is truncated at `max_solutions`.
std::vector<FaceLabelling> solve_disk(const PuzzleInstance& inst, int radius, std::size_t max_solutions = 1000,
                                      const std::optional<FaceLabelling>& seed = std::nullopt,
                                      Point centre = {});

/// Doubly periodic labelling. The period lattice is stored in Hermite normal
/// form (a,0),(b,c) with 0 <= b < a; `fundamental` labels the faces with
/// 0 <= x < a and 0 <= y < c. Normalized so the fundamental word is least
/// under type-preserving translations.
struct PeriodicSolution {
  std::array<Point, 2> basis{};
  FaceLabelling fundamental;

  int label_at(const FaceId& f) const;
  /// Lagrange-Gauss reduced basis of the period lattice.
  std::array<Point, 2> reduced_basis() const;
  /// Largest hex norm of the reduced basis vectors.
  int period() const;

  friend bool operator==(const PeriodicSolution&, const PeriodicSolution&) = default;
  friend bool operator<(const PeriodicSolution& a, const PeriodicSolution& b) {
    return std::tie(a.basis, a.fundamental) < std::tie(b.basis, b.fundamental);
  }
};

/// Builds the normalized periodic solution with periods u1, u2 from a labelling
/// function. Throws InvalidArgument if the periods are dependent or move vertex types.
PeriodicSolution make_periodic(Point u1, Point u2, const std::function<int(const FaceId&)>& label);

/// Translation by t (must preserve vertex types).
PeriodicSolution translate(const PeriodicSolution& sol, Point t);

/// Image under the type-preserving point symmetry: `rotations` turns by 120
/// degrees about the origin, then an optional reflection (x,y) -> (x+y,-y).
PeriodicSolution transform(const PeriodicSolution& sol, int rotations, bool reflect);

/// All primitive periodic solutions whose reduced period vectors have hex norm
/// at most `max_period`, one per translation class, each verified on a disk
/// covering two periods. Sorted; truncated at `max_solutions`.
std::vector<PeriodicSolution> find_periodic(const PuzzleInstance& inst, int max_period,
                                            std::size_t max_solutions = 1000);

/// The R-disk around `centre` of the plane labelling.
FaceLabelling expand_periodic(const PeriodicSolution& sol, int radius, Point centre = {});

/// Text rendering of a labelling, one lattice row per line ('.' for gaps).
std::string render_text(const FaceLabelling& lab);

}  // namespace sidonplex
