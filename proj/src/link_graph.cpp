#include "sidonplex/link_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "sidonplex/error.hpp"

namespace sidonplex {

namespace {

Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

void check_sigma(const Sigma& sigma, std::size_t terms) {
  if (sigma.size() != terms)
    throw Error(ErrorKind::BadBijection, "sigma has " + std::to_string(sigma.size()) + " entries for " +
                                             std::to_string(terms) + " terms");
  std::vector<bool> hit(terms, false);
  for (int label : sigma) {
    if (label < 0 || static_cast<std::size_t>(label) >= terms || hit[static_cast<std::size_t>(label)])
      throw Error(ErrorKind::BadBijection, "sigma is not a bijection onto {0..n}");
    hit[static_cast<std::size_t>(label)] = true;
  }
}

}  // namespace

LinkGraph::LinkGraph(int order, std::vector<Edge> edges, std::vector<int> vertex_colours,
                     std::optional<SidonOrigin> origin)
    : order_(order),
      edges_(std::move(edges)),
      vertex_colours_(std::move(vertex_colours)),
      adjacency_(static_cast<std::size_t>(order)),
      origin_(std::move(origin)) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  if (!vertex_colours_.empty() && vertex_colours_.size() != static_cast<std::size_t>(order))
    throw Error(ErrorKind::InvalidArgument, "vertex colour count does not match order");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v < 0 || ed.u >= order || ed.v >= order)
      throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    adjacency_[static_cast<std::size_t>(ed.u)].push_back({ed.v, static_cast<int>(e)});
    if (ed.u != ed.v) adjacency_[static_cast<std::size_t>(ed.v)].push_back({ed.u, static_cast<int>(e)});
  }
}

bool LinkGraph::has_edge_colours() const noexcept {
  return !edges_.empty() && std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.colour >= 0; });
}

int LinkGraph::multiplicity(int u, int v) const {
  int count = 0;
  for (const Incidence& inc : incident(u))
    if (inc.neighbour == v) ++count;
  return count;
}

std::optional<int> LinkGraph::edge_between(int u, int v) const {
  for (const Incidence& inc : incident(u))
    if (inc.neighbour == v) return inc.edge;
  return std::nullopt;
}

std::optional<int> LinkGraph::neighbour_by_label(int v, int label) const {
  for (const Incidence& inc : incident(v))
    if (edge_label(inc.edge) == label) return inc.neighbour;
  return std::nullopt;
}

bool LinkGraph::is_bipartite_by_parity() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return (e.u + e.v) % 2 == 1; });
}

bool LinkGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool LinkGraph::is_connected() const {
  if (order_ == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(order_), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : incident(v)) {
      if (!seen[static_cast<std::size_t>(inc.neighbour)]) {
        seen[static_cast<std::size_t>(inc.neighbour)] = true;
        ++reached;
        queue.push_back(inc.neighbour);
      }
    }
  }
  return reached == order_;
}

LinkGraph build_link(const Sequence& seq, Int modulus, std::optional<Sigma> sigma, std::optional<Tau> tau) {
  if (modulus < 2) throw Error(ErrorKind::ModulusTooSmall, "modulus must be at least 2");
  if (sigma) check_sigma(*sigma, seq.size());
  if (tau && (*tau)[0] == (*tau)[1]) throw Error(ErrorKind::BadBijection, "tau is not injective");

  const Int order = 2 * modulus;
  if (order > std::numeric_limits<int>::max() / 2) throw Error(ErrorKind::SizeLimitExceeded, "modulus too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(modulus) * seq.size());
  for (Int v = 0; v < order; v += 2) {
    for (std::size_t r = 0; r < seq.size(); ++r) {
      Edge e;
      e.u = static_cast<int>(v);
      e.v = static_cast<int>(mod(v + 2 * seq[r] - 1, order));
      e.term = static_cast<int>(r);
      e.colour = sigma ? (*sigma)[r] : -1;
      edges.push_back(e);
    }
  }
  std::vector<int> colours;
  if (tau) {
    colours.resize(static_cast<std::size_t>(order));
    for (Int v = 0; v < order; ++v) colours[static_cast<std::size_t>(v)] = (*tau)[static_cast<std::size_t>(v % 2)];
  }
  return LinkGraph(static_cast<int>(order), std::move(edges), std::move(colours),
                   SidonOrigin{seq, modulus, std::move(sigma), tau});
}

LinkGraph canonical_mk() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) {
    edges.push_back({i, (i + 1) % 8});
    edges.push_back({i, 8 + i});
    edges.push_back({8 + i, 8 + (i + 3) % 8});
  }
  return LinkGraph(16, std::move(edges));
}

LinkGraph canonical_heawood() {
  std::vector<Edge> edges;
  for (int line = 0; line < 7; ++line)
    for (int offset : {0, 1, 3}) edges.push_back({(line + offset) % 7, 7 + line});
  return LinkGraph(14, std::move(edges));
}

std::optional<int> girth(const LinkGraph& g) {
  int best = std::numeric_limits<int>::max();
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n), parent_edge(n);
  for (int root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[static_cast<std::size_t>(u)] + 1 >= best) break;
      for (const Incidence& inc : g.incident(u)) {
        if (inc.edge == parent_edge[static_cast<std::size_t>(u)]) continue;
        auto w = static_cast<std::size_t>(inc.neighbour);
        if (inc.neighbour == u) {
          best = 1;
          continue;
        }
        if (dist[w] < 0) {
          dist[w] = dist[static_cast<std::size_t>(u)] + 1;
          parent_edge[w] = inc.edge;
          queue.push_back(inc.neighbour);
        } else {
          best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

void for_each_hexagon(const LinkGraph& g,
                      const std::function<void(std::span<const int, 6>, std::span<const int, 6>)>& visit) {
  std::array<int, 6> verts{};
  std::array<int, 6> edges{};
  std::function<void(int)> extend = [&](int depth) {
    int last = verts[static_cast<std::size_t>(depth - 1)];
    for (const Incidence& inc : g.incident(last)) {
      int w = inc.neighbour;
      if (depth == 6) {
        if (w == verts[0] && verts[1] < verts[5]) {
          edges[5] = inc.edge;
          visit(std::span<const int, 6>(verts), std::span<const int, 6>(edges));
        }
        continue;
      }
      if (w <= verts[0]) continue;
      if (std::find(verts.begin(), verts.begin() + depth, w) != verts.begin() + depth) continue;
      verts[static_cast<std::size_t>(depth)] = w;
      edges[static_cast<std::size_t>(depth - 1)] = inc.edge;
      extend(depth + 1);
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    verts[0] = s;
    extend(1);
  }
}

std::size_t count_hexagons(const LinkGraph& g) {
  std::size_t count = 0;
  for_each_hexagon(g, [&](auto, auto) { ++count; });
  return count;
}

std::optional<GraphAutomorphism> as_automorphism(const LinkGraph& g, std::span<const int> mapping) {
  if (mapping.size() != static_cast<std::size_t>(g.order())) return std::nullopt;
  std::vector<bool> hit(mapping.size(), false);
  for (int m : mapping) {
    if (m < 0 || m >= g.order() || hit[static_cast<std::size_t>(m)]) return std::nullopt;
    hit[static_cast<std::size_t>(m)] = true;
  }
  // Compare edge multisets (with labels) under the mapping.
  using Key = std::tuple<int, int, int>;
  auto key = [](int a, int b, int label) { return Key{std::min(a, b), std::max(a, b), label}; };
  std::multiset<Key> original, image, image_unlabelled, original_unlabelled;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(static_cast<int>(e));
    int label = g.edge_label(static_cast<int>(e));
    int mu = mapping[static_cast<std::size_t>(ed.u)];
    int mv = mapping[static_cast<std::size_t>(ed.v)];
    original.insert(key(ed.u, ed.v, label));
    image.insert(key(mu, mv, label));
    original_unlabelled.insert(key(ed.u, ed.v, 0));
    image_unlabelled.insert(key(mu, mv, 0));
  }
  if (original_unlabelled != image_unlabelled) return std::nullopt;

  GraphAutomorphism out;
  out.mapping.assign(mapping.begin(), mapping.end());
  out.preserves_edge_labels = original == image;
  out.swaps_parity = g.order() % 2 == 0;
  for (int v = 0; v < g.order() && out.swaps_parity; ++v)
    out.swaps_parity = (mapping[static_cast<std::size_t>(v)] - v) % 2 != 0;
  return out;
}

GraphAutomorphism polarity(const LinkGraph& g, std::size_t p) {
  if (!g.origin()) throw Error(ErrorKind::InvalidArgument, "polarity needs an S_N graph");
  const SidonOrigin& o = *g.origin();
  if (p >= o.sequence.size())
    throw Error(ErrorKind::IndexOutOfRange, "polarity index " + std::to_string(p) + " out of range");
  const Int order = 2 * o.modulus;
  std::vector<int> mapping(static_cast<std::size_t>(order));
  for (Int k = 0; k < order; ++k)
    mapping[static_cast<std::size_t>(k)] = static_cast<int>(mod(-k + 2 * o.sequence[p] - 1, order));
  auto aut = as_automorphism(g, mapping);
  if (!aut) throw std::logic_error("polarity failed to be an automorphism");
  return *aut;
}

GraphAutomorphism translation(const LinkGraph& g, Int shift) {
  if (!g.origin()) throw Error(ErrorKind::InvalidArgument, "translation needs an S_N graph");
  if (shift % 2 != 0) throw Error(ErrorKind::InvalidArgument, "translation shift must be even");
  const Int order = 2 * g.origin()->modulus;
  std::vector<int> mapping(static_cast<std::size_t>(order));
  for (Int k = 0; k < order; ++k) mapping[static_cast<std::size_t>(k)] = static_cast<int>(mod(k + shift, order));
  auto aut = as_automorphism(g, mapping);
  if (!aut) throw std::logic_error("translation failed to be an automorphism");
  return *aut;
}

}  // namespace sidonplex
