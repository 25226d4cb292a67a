#include <algorithm>
#include <set>

#include "sidonplex/complex.hpp"
#include "sidonplex/error.hpp"

namespace sidonplex {

namespace {

int label_of(const FaceLabelling& lab, const FaceId& f) {
  auto it = lab.find(f);
  if (it == lab.end()) throw Error(ErrorKind::Coverage, "face of the disk is unlabelled");
  return it->second;
}

/// Faces on the ball edge [a,b] carrying `label`.
std::vector<int> faces_with_label(const CellComplexBall& ball, int a, int b, int label) {
  std::vector<int> out;
  auto e = ball.edge_between(a, b);
  if (!e) return out;
  for (int f : ball.faces_on_edge(*e))
    if (ball.face(f).label == label) out.push_back(f);
  return out;
}

}  // namespace

std::vector<StarSeed> star_seeds(const CellComplexBall& ball, const FaceLabelling& lab, int ball_vertex,
                                 Point centre) {
  if (ball_vertex < 0 || static_cast<std::size_t>(ball_vertex) >= ball.vertex_count())
    throw Error(ErrorKind::IndexOutOfRange, "ball vertex out of range");
  const auto nb = star_neighbours(centre);
  const auto fs = star_faces(centre);
  std::array<int, 6> word{};
  for (std::size_t i = 0; i < 6; ++i) {
    auto it = lab.find(fs[i]);
    if (it == lab.end()) throw Error(ErrorKind::IncompleteStar, "star of the disk centre is unlabelled");
    word[i] = it->second;
  }
  std::vector<StarSeed> out;
  if (ball.vertex(ball_vertex).colour != vertex_type(centre)) return out;
  std::vector<int> starts;
  for (int u : ball.neighbours(ball_vertex))
    if (ball.vertex(u).colour == vertex_type(nb[0])) starts.push_back(u);
  std::sort(starts.begin(), starts.end());
  for (int u0 : starts) {
    StarSeed seed{{centre, ball_vertex}, {nb[0], u0}};
    int cur = u0;
    bool ok = true;
    for (std::size_t i = 0; i < 6 && ok; ++i) {
      auto fs_here = faces_with_label(ball, ball_vertex, cur, word[i]);
      if (fs_here.size() != 1) {
        ok = false;
        break;
      }
      const int next = ball.third_vertex(fs_here.front(), ball_vertex, cur);
      if (ball.vertex(next).colour != vertex_type(nb[(i + 1) % 6])) ok = false;
      else if (i == 5) ok = next == u0;
      else {
        for (const auto& [p, v] : seed)
          if (v == next) ok = false;
        seed[nb[i + 1]] = next;
      }
      cur = next;
    }
    if (ok) out.push_back(std::move(seed));
  }
  return out;
}

DiskEmbedding embed_disk(const CellComplexBall& ball, const FaceLabelling& lab, int disk_radius,
                         const StarSeed& seed, Point centre) {
  if (disk_radius < 0) throw Error(ErrorKind::InvalidArgument, "disk radius must be non-negative");
  const auto faces = disk_faces(centre, disk_radius);
  for (const FaceId& f : faces) label_of(lab, f);
  if (ball.spec && !check_disk(puzzle_instance(*ball.spec), lab, centre, disk_radius))
    throw Error(ErrorKind::InvalidArgument, "labelling is not a puzzle solution");

  const auto nb = star_neighbours(centre);
  const auto fs = star_faces(centre);
  std::set<Point> wanted(nb.begin(), nb.end());
  wanted.insert(centre);
  std::set<Point> given;
  std::set<int> images;
  for (const auto& [p, v] : seed) {
    given.insert(p);
    if (v < 0 || static_cast<std::size_t>(v) >= ball.vertex_count())
      throw Error(ErrorKind::InvalidArgument, "seed vertex out of range");
    if (!images.insert(v).second) throw Error(ErrorKind::InvalidArgument, "seed is not injective");
    if (ball.vertex(v).colour != vertex_type(p))
      throw Error(ErrorKind::InvalidArgument, "seed does not send lattice types to vertex colours");
  }
  if (given != wanted) throw Error(ErrorKind::InvalidArgument, "seed must cover exactly the centre star");

  DiskEmbedding out;
  out.vertices = seed;
  const int hub = seed.at(centre);
  for (std::size_t i = 0; i < 6; ++i) {
    auto f = ball.face_between(hub, seed.at(nb[i]), seed.at(nb[(i + 1) % 6]));
    if (!f || ball.face(*f).label != label_of(lab, fs[i]))
      throw Error(ErrorKind::InvalidArgument, "seed does not preserve the star faces");
    out.faces[fs[i]] = *f;
  }
  if (ball.vertex(hub).layer + std::max(disk_radius, 1) > ball.radius)
    throw Error(ErrorKind::OutOfBall, "disk does not fit in the ball around the seed");

  for (const Point& v : disk_interior(centre, disk_radius)) {
    if (v == centre) continue;
    const auto vn = star_neighbours(v);
    const auto vf = star_faces(v);
    auto mapped = [&](const Point& p) { return out.vertices.contains(p); };
    if (!mapped(v)) throw Error(ErrorKind::NoExtension, "spiral order reached an unmapped vertex");
    std::size_t start = 6;
    for (std::size_t i = 0; i < 6 && start == 6; ++i)
      if (mapped(vn[i]) && mapped(vn[(i + 1) % 6])) start = i;
    if (start == 6) throw Error(ErrorKind::NoExtension, "no mapped face at an interior vertex");
    const int image = out.vertices.at(v);
    for (std::size_t step = 1; step < 6; ++step) {
      const std::size_t j = (start + step) % 6;
      const Point from = vn[j], to = vn[(j + 1) % 6];
      const auto cands = faces_with_label(ball, image, out.vertices.at(from), label_of(lab, vf[j]));
      if (cands.empty()) throw Error(ErrorKind::NoExtension, "no ball face carries the required label");
      if (cands.size() > 1) throw Error(ErrorKind::NotUnique, "two ball faces carry the same label on an edge");
      const int third = ball.third_vertex(cands.front(), image, out.vertices.at(from));
      if (ball.vertex(third).colour != vertex_type(to))
        throw Error(ErrorKind::NoExtension, "vertex colour disagrees with the lattice type");
      if (mapped(to)) {
        if (out.vertices.at(to) != third) throw Error(ErrorKind::NoExtension, "star does not close up");
      } else {
        if (!images.insert(third).second) throw Error(ErrorKind::NoExtension, "embedding is not injective");
        out.vertices[to] = third;
      }
      if (auto it = out.faces.find(vf[j]); it != out.faces.end() && it->second != cands.front())
        throw Error(ErrorKind::NoExtension, "face images disagree");
      out.faces[vf[j]] = cands.front();
    }
    // the face at `start` was mapped earlier; confirm it agrees with this star
    auto f = ball.face_between(image, out.vertices.at(vn[start]), out.vertices.at(vn[(start + 1) % 6]));
    if (!f || ball.face(*f).label != label_of(lab, vf[start]))
      throw Error(ErrorKind::NoExtension, "face images disagree");
    if (auto it = out.faces.find(vf[start]); it != out.faces.end() && it->second != *f)
      throw Error(ErrorKind::NoExtension, "face images disagree");
    out.faces[vf[start]] = *f;
  }
  return out;
}

}  // namespace sidonplex
