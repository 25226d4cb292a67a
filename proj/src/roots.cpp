#include <algorithm>
#include <set>
#include <stdexcept>

#include "sidonplex/complex.hpp"
#include "sidonplex/error.hpp"

namespace sidonplex {

namespace {

std::set<int> neighbour_set(const LinkGraph& g, int v) {
  std::set<int> out;
  for (const Incidence& inc : g.incident(v)) out.insert(inc.neighbour);
  return out;
}

int distance(const LinkGraph& g, int from, int to) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue{from};
  dist[static_cast<std::size_t>(from)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (v == to) return dist[static_cast<std::size_t>(v)];
    for (const Incidence& inc : g.incident(v))
      if (dist[static_cast<std::size_t>(inc.neighbour)] < 0) {
        dist[static_cast<std::size_t>(inc.neighbour)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(inc.neighbour);
      }
  }
  return -1;
}

std::size_t label_count_of(const CellComplexBall& ball) {
  if (!ball.spec) throw Error(ErrorKind::InvalidArgument, "ball carries no spec");
  return ball.spec->label_count();
}

/// Faces other than `face` on the edge [a,b].
std::vector<int> side_options(const CellComplexBall& ball, int face, int a, int b) {
  std::vector<int> out;
  auto e = ball.edge_between(a, b);
  if (!e) return out;
  for (int f : ball.faces_on_edge(*e))
    if (f != face) out.push_back(f);
  return out;
}

}  // namespace

bool root_is_rank2(const LinkGraph& link, std::span<const int> path) {
  if (path.size() != 4) throw Error(ErrorKind::MalformedPath, "a root has four vertices");
  for (int v : path)
    if (v < 0 || v >= link.order()) throw Error(ErrorKind::MalformedPath, "root vertex out of range");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (path[i] == path[j]) throw Error(ErrorKind::MalformedPath, "root is not simple");
  for (std::size_t i = 0; i + 1 < 4; ++i)
    if (link.multiplicity(path[i], path[i + 1]) == 0) throw Error(ErrorKind::MalformedPath, "root skips an edge");
  if (distance(link, path[0], path[3]) != 3)
    throw Error(ErrorKind::MalformedPath, "root end points are not at distance 3");
  const int s = path[0], t = path[3];
  const auto near_t = neighbour_set(link, t);
  int paths = 0;
  for (int a : neighbour_set(link, s)) {
    if (a == t) continue;
    for (int b : neighbour_set(link, a))
      if (b != s && b != t && near_t.contains(b)) ++paths;
  }
  return paths == 3;
}

bool ball_root_is_rank2(const CellComplexBall& ball, int v, std::span<const int> path) {
  if (path.size() != 4) throw Error(ErrorKind::MalformedPath, "a root has four vertices");
  if (!ball.spec) throw Error(ErrorKind::InvalidArgument, "ball carries no spec");
  if (v < 0 || static_cast<std::size_t>(v) >= ball.vertex_count())
    throw Error(ErrorKind::IndexOutOfRange, "ball vertex out of range");
  for (int p : path)
    if (p < 0 || static_cast<std::size_t>(p) >= ball.vertex_count())
      throw Error(ErrorKind::MalformedPath, "root vertex out of range");
  std::array<int, 3> labels{};
  for (std::size_t i = 0; i < 3; ++i) {
    auto f = ball.face_between(v, path[i], path[i + 1]);
    if (!f) throw Error(ErrorKind::MalformedPath, "root edge is not a face at the vertex");
    labels[i] = ball.face(*f).label;
  }
  const LinkGraph model = spec_link(*ball.spec, ball.vertex(v).colour);
  // The ball link is label-rigid: transport the path along the labels from any
  // model vertex of the right colour. Translations act transitively on those.
  int start = -1;
  for (int u = 0; u < model.order() && start < 0; ++u)
    if (model.vertex_colour(u) == ball.vertex(path[0]).colour) start = u;
  if (start < 0) throw Error(ErrorKind::MalformedPath, "root colour absent from the model link");
  std::array<int, 4> image{start, 0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    auto next = model.neighbour_by_label(image[i], labels[i]);
    if (!next) throw Error(ErrorKind::MalformedPath, "root labels do not fit the model link");
    image[i + 1] = *next;
  }
  const bool rank2 = root_is_rank2(model, image);
  if (ball.is_interior(v)) {
    const VertexLink local = ball.link(v);
    std::array<int, 4> own{};
    for (std::size_t i = 0; i < 4; ++i) {
      auto it = std::find(local.ball_vertex.begin(), local.ball_vertex.end(), path[i]);
      own[i] = static_cast<int>(it - local.ball_vertex.begin());
    }
    if (root_is_rank2(local.graph, own) != rank2)
      throw std::logic_error("root rank differs between the ball link and the model link");
  }
  return rank2;
}

bool fully_interior(const CellComplexBall& ball, int face) {
  const std::size_t want = label_count_of(ball);
  const auto& vs = ball.face(face).vertices;
  for (std::size_t i = 0; i < 3; ++i) {
    auto e = ball.edge_between(vs[i], vs[(i + 1) % 3]);
    if (!e || ball.faces_on_edge(*e).size() != want) return false;
  }
  return true;
}

namespace {

std::size_t odd_choices(const CellComplexBall& ball, int face, bool& odd) {
  const auto [x, y, z] = ball.face(face).vertices;
  const auto on_xy = side_options(ball, face, x, y);
  const auto on_yz = side_options(ball, face, y, z);
  const auto on_xz = side_options(ball, face, x, z);
  if (on_xy.empty() || on_yz.empty() || on_xz.empty())
    throw Error(ErrorKind::InsufficientNeighborhood, "a side of the face has no other face");
  std::optional<bool> parity;
  std::size_t choices = 0;
  for (int fxy : on_xy)
    for (int fyz : on_yz)
      for (int fxz : on_xz) {
        const int p = ball.third_vertex(fxy, x, y);
        const int r = ball.third_vertex(fyz, y, z);
        const int q = ball.third_vertex(fxz, x, z);
        int rank2 = 0;
        rank2 += ball_root_is_rank2(ball, x, std::array{p, y, z, q});
        rank2 += ball_root_is_rank2(ball, y, std::array{p, x, z, r});
        rank2 += ball_root_is_rank2(ball, z, std::array{q, x, y, r});
        const bool this_odd = rank2 % 2 == 1;
        if (parity && *parity != this_odd)
          throw Error(ErrorKind::ParityNotWellDefined, "root parity depends on the adjacent faces");
        parity = this_odd;
        ++choices;
      }
  odd = *parity;
  return choices;
}

}  // namespace

bool triangle_is_odd(const CellComplexBall& ball, int face) {
  if (face < 0 || static_cast<std::size_t>(face) >= ball.face_count())
    throw Error(ErrorKind::IndexOutOfRange, "face out of range");
  bool odd = false;
  odd_choices(ball, face, odd);
  return odd;
}

OddnessReport check_oddness(const CellComplexBall& ball) {
  OddnessReport report;
  for (std::size_t f = 0; f < ball.face_count(); ++f) {
    if (!fully_interior(ball, static_cast<int>(f))) continue;
    bool odd = false;
    report.choices_checked += odd_choices(ball, static_cast<int>(f), odd);
    ++report.faces_checked;
    report.odd += odd;
  }
  return report;
}

}  // namespace sidonplex
