#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "sidonplex/complex.hpp"
#include "sidonplex/error.hpp"

namespace sidonplex {

int edge_colour(int c1, int c2) { return 10 * std::min(c1, c2) + std::max(c1, c2); }

int CellComplexBall::add_vertex(int colour, int layer) {
  if (colour < 1 || colour > 3) throw Error(ErrorKind::InvalidArgument, "vertex colour must be 1, 2 or 3");
  vertices_.push_back({colour, layer});
  neighbours_.emplace_back();
  faces_at_.emplace_back();
  return static_cast<int>(vertices_.size()) - 1;
}

int CellComplexBall::add_face(int a, int b, int c, int label) {
  std::array<int, 3> vs{a, b, c};
  for (int v : vs)
    if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
      throw Error(ErrorKind::InvalidArgument, "face uses an unknown vertex");
  std::sort(vs.begin(), vs.end(), [&](int x, int y) { return vertex(x).colour < vertex(y).colour; });
  if (vertex(vs[0]).colour != 1 || vertex(vs[1]).colour != 2 || vertex(vs[2]).colour != 3)
    throw Error(ErrorKind::InvalidArgument, "a face needs one vertex of each colour");
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  if (face_index_.contains(key)) throw Error(ErrorKind::InvalidArgument, "duplicate face");

  const int id = static_cast<int>(faces_.size());
  faces_.push_back({vs, label});
  face_index_[key] = id;
  faces_on_edge_.reserve(edges_.size() + 3);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    int u = vs[static_cast<std::size_t>(i)], w = vs[static_cast<std::size_t>(j)];
    auto e = edge_between(u, w);
    if (!e) {
      e = static_cast<int>(edges_.size());
      edges_.push_back({std::min(u, w), std::max(u, w), edge_colour(vertex(u).colour, vertex(w).colour)});
      faces_on_edge_.emplace_back();
      edge_index_[{std::min(u, w), std::max(u, w)}] = *e;
      neighbours_[static_cast<std::size_t>(u)].push_back(w);
      neighbours_[static_cast<std::size_t>(w)].push_back(u);
    }
    faces_on_edge_[static_cast<std::size_t>(*e)].push_back(id);
  }
  for (int v : vs) faces_at_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

std::optional<int> CellComplexBall::edge_between(int v, int w) const {
  auto it = edge_index_.find({std::min(v, w), std::max(v, w)});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CellComplexBall::face_between(int a, int b, int c) const {
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  auto it = face_index_.find(key);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

int CellComplexBall::third_vertex(int f, int a, int b) const {
  for (int v : face(f).vertices)
    if (v != a && v != b) return v;
  throw std::logic_error("face has no third vertex");
}

VertexLink CellComplexBall::link(int v) const {
  std::vector<int> nb(neighbours(v).begin(), neighbours(v).end());
  std::sort(nb.begin(), nb.end());
  std::map<int, int> local;
  std::vector<int> colours;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    local[nb[i]] = static_cast<int>(i);
    colours.push_back(vertex(nb[i]).colour);
  }
  std::vector<Edge> es;
  for (int f : faces_at(v)) {
    std::array<int, 2> other{};
    std::size_t k = 0;
    for (int u : face(f).vertices)
      if (u != v) other[k++] = local.at(u);
    es.push_back({other[0], other[1], -1, face(f).label});
  }
  return {LinkGraph(static_cast<int>(nb.size()), std::move(es), std::move(colours)), nb};
}

std::vector<int> CellComplexBall::distances() const {
  std::vector<int> dist(vertices_.size(), -1);
  if (vertices_.empty()) return dist;
  std::deque<int> queue{centre};
  dist[static_cast<std::size_t>(centre)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : neighbours(v))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool CellComplexBall::same_cells(const CellComplexBall& other) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].colour != other.vertices_[i].colour || vertices_[i].layer != other.vertices_[i].layer)
      return false;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices != other.faces_[i].vertices || faces_[i].label != other.faces_[i].label) return false;
  return true;
}

namespace {

class BallBuilder {
 public:
  BallBuilder(const ComplexSpec& spec, std::optional<std::uint64_t> seed) : spec_(spec), seed_(seed) {
    for (int k = 1; k <= 3; ++k) links_.push_back(spec_link(spec, k));
    if (seed) rng_.seed(*seed);
  }

  CellComplexBall run(int radius, int centre_colour) {
    CellComplexBall ball;
    ball.spec = spec_;
    ball.centre = ball.add_vertex(centre_colour, 0);
    const LinkGraph& lc = model(centre_colour);
    std::vector<int> image(static_cast<std::size_t>(lc.order()));
    for (int u = 0; u < lc.order(); ++u) image[static_cast<std::size_t>(u)] = ball.add_vertex(lc.vertex_colour(u), 1);
    for (const Edge& e : lc.edges())
      ball.add_face(ball.centre, image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)], e.colour);
    ball.radius = 1;
    while (ball.radius < radius) grow(ball);
    return ball;
  }

 private:
  const LinkGraph& model(int colour) const { return links_[static_cast<std::size_t>(colour - 1)]; }

  template <class T>
  void maybe_shuffle(std::vector<T>& v) {
    if (seed_) std::shuffle(v.begin(), v.end(), rng_);
  }

  void grow(CellComplexBall& ball) {
    const int layer = ball.radius;
    const int labels = static_cast<int>(spec_.label_count());
    std::vector<int> sphere;
    for (int v = 0; v < static_cast<int>(ball.vertex_count()); ++v)
      if (ball.vertex(v).layer == layer) sphere.push_back(v);

    // Sphere edges first: every missing label gets a fresh apex.
    std::vector<int> sphere_edges;
    for (int e = 0; e < static_cast<int>(ball.edge_count()); ++e) {
      const BallEdge& ed = ball.edge(e);
      if (ball.vertex(ed.v).layer == layer && ball.vertex(ed.w).layer == layer) sphere_edges.push_back(e);
    }
    maybe_shuffle(sphere_edges);
    for (int e : sphere_edges) {
      const BallEdge ed = ball.edge(e);
      std::vector<bool> present(static_cast<std::size_t>(labels), false);
      for (int f : ball.faces_on_edge(e)) present[static_cast<std::size_t>(ball.face(f).label)] = true;
      const int apex_colour = 6 - ball.vertex(ed.v).colour - ball.vertex(ed.w).colour;
      for (int label = 0; label < labels; ++label) {
        if (present[static_cast<std::size_t>(label)]) continue;
        int apex = ball.add_vertex(apex_colour, layer + 1);
        ball.add_face(ed.v, ed.w, apex, label);
      }
    }

    maybe_shuffle(sphere);
    for (int y : sphere) complete_link(ball, y, layer + 1);
    ball.radius = layer + 1;
  }

  void complete_link(CellComplexBall& ball, int y, int new_layer) {
    const LinkGraph& model_link = model(ball.vertex(y).colour);
    const VertexLink partial = ball.link(y);
    const LinkGraph& tree = partial.graph;
    const int tn = tree.order();
    if (tn == 0) throw Error(ErrorKind::LinkEmbedding, "empty partial link");

    int anchor = 0;
    std::vector<int> candidates;
    if (seed_) anchor = static_cast<int>(rng_() % static_cast<std::uint64_t>(tn));
    for (int u = 0; u < model_link.order(); ++u)
      if (model_link.vertex_colour(u) == tree.vertex_colour(anchor)) candidates.push_back(u);
    if (candidates.empty()) throw Error(ErrorKind::LinkEmbedding, "no model vertex of the anchor colour");
    int anchor_image = seed_ ? candidates[rng_() % candidates.size()] : candidates.front();

    // Propagate along partial-link edges by label.
    std::vector<int> phi(static_cast<std::size_t>(tn), -1);
    std::vector<int> inverse(static_cast<std::size_t>(model_link.order()), -1);
    phi[static_cast<std::size_t>(anchor)] = anchor_image;
    inverse[static_cast<std::size_t>(anchor_image)] = anchor;
    std::deque<int> queue{anchor};
    std::vector<bool> used_model_edge(model_link.edge_count(), false);
    std::size_t tree_edges_seen = 0;
    auto fail = [&](const std::string& why) {
      std::ostringstream os;
      os << "partial link at vertex " << y << " does not embed: " << why;
      throw Error(ErrorKind::LinkEmbedding, os.str());
    };
    std::vector<bool> edge_done(tree.edge_count(), false);
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (const Incidence& inc : tree.incident(t)) {
        if (edge_done[static_cast<std::size_t>(inc.edge)]) continue;
        edge_done[static_cast<std::size_t>(inc.edge)] = true;
        ++tree_edges_seen;
        const int label = tree.edge_label(inc.edge);
        auto target = model_link.neighbour_by_label(phi[static_cast<std::size_t>(t)], label);
        if (!target) fail("missing label");
        auto me = model_link.edge_between(phi[static_cast<std::size_t>(t)], *target);
        used_model_edge[static_cast<std::size_t>(*me)] = true;
        const int s = inc.neighbour;
        if (phi[static_cast<std::size_t>(s)] >= 0) {
          if (phi[static_cast<std::size_t>(s)] != *target) fail("cycle closes inconsistently");
          continue;
        }
        if (inverse[static_cast<std::size_t>(*target)] >= 0) fail("not injective");
        if (model_link.vertex_colour(*target) != tree.vertex_colour(s)) fail("colour mismatch");
        phi[static_cast<std::size_t>(s)] = *target;
        inverse[static_cast<std::size_t>(*target)] = s;
        queue.push_back(s);
      }
    }
    if (tree_edges_seen != tree.edge_count() ||
        std::count(phi.begin(), phi.end(), -1) != 0)
      fail("partial link is disconnected");

    // New vertices for unused model vertices, then faces for unused model edges.
    std::vector<int> ball_of(static_cast<std::size_t>(model_link.order()), -1);
    for (int u = 0; u < model_link.order(); ++u) {
      int t = inverse[static_cast<std::size_t>(u)];
      ball_of[static_cast<std::size_t>(u)] =
          t >= 0 ? partial.ball_vertex[static_cast<std::size_t>(t)] : ball.add_vertex(model_link.vertex_colour(u), new_layer);
    }
    std::vector<int> order(model_link.edge_count());
    std::iota(order.begin(), order.end(), 0);
    maybe_shuffle(order);
    for (int e : order) {
      if (used_model_edge[static_cast<std::size_t>(e)]) continue;
      const Edge& me = model_link.edge(e);
      ball.add_face(y, ball_of[static_cast<std::size_t>(me.u)], ball_of[static_cast<std::size_t>(me.v)], me.colour);
    }
  }

  const ComplexSpec& spec_;
  std::optional<std::uint64_t> seed_;
  std::vector<LinkGraph> links_;
  std::mt19937_64 rng_;
};

}  // namespace

CellComplexBall build_ball(const ComplexSpec& spec, int radius, int centre_colour, std::optional<std::uint64_t> seed) {
  require_valid(spec);
  if (radius < 1) throw Error(ErrorKind::InvalidArgument, "ball radius must be at least 1");
  if (centre_colour < 1 || centre_colour > 3) throw Error(ErrorKind::InvalidArgument, "centre colour must be 1, 2 or 3");
  BallBuilder builder(spec, seed);
  return builder.run(radius, centre_colour);
}

BallReport verify_ball(const CellComplexBall& ball, const ComplexSpec& spec) {
  BallReport report;
  auto problem = [&](std::string msg) {
    report.ok = false;
    if (report.problems.size() < 50) report.problems.push_back(std::move(msg));
  };
  const auto labels = static_cast<int>(spec.label_count());
  for (std::size_t f = 0; f < ball.face_count(); ++f) {
    const BallFace& face = ball.face(static_cast<int>(f));
    for (int i = 0; i < 3; ++i)
      if (ball.vertex(face.vertices[static_cast<std::size_t>(i)]).colour != i + 1)
        problem("face " + std::to_string(f) + " does not have one vertex of each colour");
    if (face.label < 0 || face.label >= labels) problem("face " + std::to_string(f) + " label out of range");
  }
  for (std::size_t e = 0; e < ball.edge_count(); ++e) {
    const BallEdge& ed = ball.edge(static_cast<int>(e));
    if (ed.colour != edge_colour(ball.vertex(ed.v).colour, ball.vertex(ed.w).colour) ||
        ball.vertex(ed.v).colour == ball.vertex(ed.w).colour)
      problem("edge " + std::to_string(e) + " colour does not match its end points");
    std::vector<int> seen;
    for (int f : ball.faces_on_edge(static_cast<int>(e))) seen.push_back(ball.face(f).label);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      problem("edge " + std::to_string(e) + " carries two faces with the same label");
  }
  auto dist = ball.distances();
  std::vector<LinkGraph> models;
  for (int k = 1; k <= 3; ++k) models.push_back(spec_link(spec, k));
  for (int v = 0; v < static_cast<int>(ball.vertex_count()); ++v) {
    if (dist[static_cast<std::size_t>(v)] != ball.vertex(v).layer)
      problem("vertex " + std::to_string(v) + " layer differs from its distance to the centre");
    if (!ball.is_interior(v)) continue;
    ++report.interior_checked;
    const int colour = ball.vertex(v).colour;
    if (colour < 1 || colour > 3) continue;
    VertexLink lk = ball.link(v);
    auto g = girth(lk.graph);
    if (g && *g < 6) problem("link of vertex " + std::to_string(v) + " has girth below 6");
    if (!find_isomorphism(lk.graph, models[static_cast<std::size_t>(colour - 1)], IsoMode::FullColours))
      problem("link of vertex " + std::to_string(v) + " is not coloured-isomorphic to the model link");
  }
  return report;
}

std::string ball_to_dot(const CellComplexBall& ball) {
  std::ostringstream os;
  os << "graph ball {\n";
  for (std::size_t v = 0; v < ball.vertex_count(); ++v) {
    const auto& bv = ball.vertex(static_cast<int>(v));
    os << "  " << v << " [colour=" << bv.colour << ", layer=" << bv.layer << (static_cast<int>(v) == ball.centre ? ", centre=true" : "")
       << "];\n";
  }
  for (const BallEdge& e : ball.edges()) os << "  " << e.v << " -- " << e.w << " [colour=" << e.colour << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sidonplex
