#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "sidonplex/error.hpp"
#include "sidonplex/link_graph.hpp"

namespace sidonplex {

namespace {

int edge_key(const LinkGraph& g, int e, IsoMode mode) { return mode == IsoMode::Plain ? 0 : g.edge_label(e); }

/// Sorted labels of the edges joining u and v.
std::vector<int> pair_keys(const LinkGraph& g, int u, int v, IsoMode mode) {
  std::vector<int> keys;
  for (const Incidence& inc : g.incident(u))
    if (inc.neighbour == v) keys.push_back(edge_key(g, inc.edge, mode));
  std::sort(keys.begin(), keys.end());
  return keys;
}

/// Joint 1-dimensional colour refinement of both graphs so that class ids are
/// comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine(const LinkGraph& g1, const LinkGraph& g2, IsoMode mode) {
  using Sig = std::vector<int>;
  auto initial = [&](const LinkGraph& g, int v) {
    Sig s{mode == IsoMode::FullColours ? g.vertex_colour(v) : 0, g.degree(v)};
    std::vector<int> keys;
    for (const Incidence& inc : g.incident(v)) keys.push_back(edge_key(g, inc.edge, mode) * 2 + (inc.neighbour == v));
    std::sort(keys.begin(), keys.end());
    s.insert(s.end(), keys.begin(), keys.end());
    return s;
  };
  std::vector<int> c1(static_cast<std::size_t>(g1.order())), c2(static_cast<std::size_t>(g2.order()));
  auto assign = [&](auto&& sig_of) {
    std::map<Sig, int> ids;
    std::vector<Sig> s1, s2;
    for (int v = 0; v < g1.order(); ++v) s1.push_back(sig_of(g1, c1, v));
    for (int v = 0; v < g2.order(); ++v) s2.push_back(sig_of(g2, c2, v));
    for (const Sig& s : s1) ids.emplace(s, 0);
    for (const Sig& s : s2) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < s1.size(); ++v) c1[v] = ids[s1[v]];
    for (std::size_t v = 0; v < s2.size(); ++v) c2[v] = ids[s2[v]];
    return next;
  };
  int classes = assign([&](const LinkGraph& g, const std::vector<int>&, int v) { return initial(g, v); });
  for (;;) {
    int refined = assign([&](const LinkGraph& g, const std::vector<int>& c, int v) {
      Sig s{c[static_cast<std::size_t>(v)]};
      std::vector<std::pair<int, int>> nb;
      for (const Incidence& inc : g.incident(v))
        nb.emplace_back(c[static_cast<std::size_t>(inc.neighbour)], edge_key(g, inc.edge, mode));
      std::sort(nb.begin(), nb.end());
      for (auto [cls, key] : nb) {
        s.push_back(cls);
        s.push_back(key);
      }
      return s;
    });
    if (refined == classes) break;
    classes = refined;
  }
  return {std::move(c1), std::move(c2)};
}

class IsoSearch {
 public:
  IsoSearch(const LinkGraph& g1, const LinkGraph& g2, IsoMode mode, std::span<const std::pair<int, int>> seed,
            const std::function<bool(const std::vector<int>&)>& visit)
      : g1_(g1), g2_(g2), mode_(mode), visit_(visit) {
    const auto n = static_cast<std::size_t>(g1.order());
    map_.assign(n, -1);
    inverse_.assign(static_cast<std::size_t>(g2.order()), -1);
    position_.assign(n, -1);
    feasible_ = g1.order() == g2.order() && g1.edge_count() == g2.edge_count();
    if (!feasible_) return;

    std::tie(class1_, class2_) = refine(g1, g2, mode);
    std::vector<int> h1 = class1_, h2 = class2_;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) {
      feasible_ = false;
      return;
    }

    // Vertex order: seeded vertices first, then BFS (ascending neighbours).
    std::vector<bool> placed(n, false);
    auto place = [&](int v) {
      placed[static_cast<std::size_t>(v)] = true;
      position_[static_cast<std::size_t>(v)] = static_cast<int>(order_.size());
      order_.push_back(v);
    };
    for (auto [a, b] : seed) {
      if (a < 0 || a >= g1.order() || b < 0 || b >= g2.order()) {
        feasible_ = false;
        return;
      }
      if (placed[static_cast<std::size_t>(a)]) {
        if (seed_target_[a] != b) feasible_ = false;
        continue;
      }
      seed_target_[a] = b;
      place(a);
    }
    std::deque<int> queue(order_.begin(), order_.end());
    auto drain = [&] {
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        std::vector<int> nbs;
        for (const Incidence& inc : g1.incident(v)) nbs.push_back(inc.neighbour);
        std::sort(nbs.begin(), nbs.end());
        for (int w : nbs) {
          if (!placed[static_cast<std::size_t>(w)]) {
            place(w);
            queue.push_back(w);
          }
        }
      }
    };
    drain();
    for (int v = 0; v < g1.order(); ++v) {
      if (!placed[static_cast<std::size_t>(v)]) {
        place(v);
        queue.push_back(v);
        drain();
      }
    }
    anchor_.assign(n, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      int v = order_[i];
      int best = -1;
      for (const Incidence& inc : g1.incident(v)) {
        int p = position_[static_cast<std::size_t>(inc.neighbour)];
        if (p < static_cast<int>(i) && (best < 0 || p < position_[static_cast<std::size_t>(best)])) best = inc.neighbour;
      }
      anchor_[i] = best;
    }
  }

  std::size_t run() {
    if (feasible_) descend(0);
    return found_;
  }

 private:
  bool consistent(int v, int c, std::size_t depth) const {
    if (class1_[static_cast<std::size_t>(v)] != class2_[static_cast<std::size_t>(c)]) return false;
    if (inverse_[static_cast<std::size_t>(c)] >= 0) return false;
    std::set<int> mapped1;
    for (const Incidence& inc : g1_.incident(v)) {
      int u = inc.neighbour;
      if (u != v && position_[static_cast<std::size_t>(u)] >= static_cast<int>(depth)) continue;
      if (!mapped1.insert(u).second) continue;
      int fu = u == v ? c : map_[static_cast<std::size_t>(u)];
      if (pair_keys(g1_, v, u, mode_) != pair_keys(g2_, c, fu, mode_)) return false;
    }
    std::set<int> mapped2;
    for (const Incidence& inc : g2_.incident(c)) {
      int w = inc.neighbour;
      if (w == c || inverse_[static_cast<std::size_t>(w)] >= 0) mapped2.insert(w);
    }
    return mapped1.size() == mapped2.size();
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      ++found_;
      return visit_(map_);
    }
    int v = order_[depth];
    std::vector<int> candidates;
    if (auto it = seed_target_.find(v); it != seed_target_.end()) {
      candidates.push_back(it->second);
    } else if (int a = anchor_[depth]; a >= 0) {
      for (const Incidence& inc : g2_.incident(map_[static_cast<std::size_t>(a)])) candidates.push_back(inc.neighbour);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else {
      for (int c = 0; c < g2_.order(); ++c) candidates.push_back(c);
    }
    for (int c : candidates) {
      if (!consistent(v, c, depth)) continue;
      map_[static_cast<std::size_t>(v)] = c;
      inverse_[static_cast<std::size_t>(c)] = v;
      bool keep_going = descend(depth + 1);
      map_[static_cast<std::size_t>(v)] = -1;
      inverse_[static_cast<std::size_t>(c)] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const LinkGraph& g1_;
  const LinkGraph& g2_;
  IsoMode mode_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  bool feasible_ = false;
  std::vector<int> class1_, class2_;
  std::vector<int> order_, position_, anchor_;
  std::map<int, int> seed_target_;
  std::vector<int> map_, inverse_;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t enumerate_isomorphisms(const LinkGraph& g1, const LinkGraph& g2, IsoMode mode,
                                   std::span<const std::pair<int, int>> seed,
                                   const std::function<bool(const std::vector<int>&)>& visit) {
  IsoSearch search(g1, g2, mode, seed, visit);
  return search.run();
}

std::optional<std::vector<int>> find_isomorphism(const LinkGraph& g1, const LinkGraph& g2, IsoMode mode,
                                                 std::span<const std::pair<int, int>> seed) {
  std::optional<std::vector<int>> out;
  enumerate_isomorphisms(g1, g2, mode, seed, [&](const std::vector<int>& m) {
    out = m;
    return false;
  });
  return out;
}

std::optional<std::vector<int>> is_isomorphic(const LinkGraph& g1, const LinkGraph& g2, bool respect_labels) {
  return find_isomorphism(g1, g2, respect_labels ? IsoMode::EdgeLabels : IsoMode::Plain);
}

std::vector<std::vector<int>> automorphisms(const LinkGraph& g, IsoMode mode) {
  std::vector<std::vector<int>> out;
  enumerate_isomorphisms(g, g, mode, {}, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

namespace {

struct TreeInfo {
  std::vector<int> vertices;
  std::map<int, int> degree;
};

TreeInfo check_tree(const LinkGraph& g, const SubTree& t, const char* name) {
  TreeInfo info;
  std::set<int> verts;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : t.edges) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || g.multiplicity(a, b) == 0)
      throw Error(ErrorKind::InvalidArgument, std::string(name) + " uses a non-edge");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw Error(ErrorKind::InvalidArgument, std::string(name) + " repeats an edge");
    verts.insert(a);
    verts.insert(b);
    ++info.degree[a];
    ++info.degree[b];
  }
  if (verts.size() != t.edges.size() + 1) throw Error(ErrorKind::InvalidArgument, std::string(name) + " is not a tree");
  // Connectivity (with |V| = |E| + 1 this also rules out cycles).
  std::set<int> reached{*verts.begin()};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [a, b] : t.edges) {
      if (reached.contains(a) != reached.contains(b)) {
        reached.insert(a);
        reached.insert(b);
        grew = true;
      }
    }
  }
  if (reached.size() != verts.size()) throw Error(ErrorKind::InvalidArgument, std::string(name) + " is not connected");
  info.vertices.assign(verts.begin(), verts.end());
  return info;
}

}  // namespace

GraphAutomorphism extend_tripod(const LinkGraph& g, const SubTree& tree, const SubTree& image,
                                std::span<const std::pair<int, int>> phi0) {
  TreeInfo t = check_tree(g, tree, "T");
  TreeInfo t2 = check_tree(g, image, "T'");
  if (std::none_of(t.degree.begin(), t.degree.end(), [](auto kv) { return kv.second >= 3; }))
    throw Error(ErrorKind::InvalidArgument, "T contains no tripod");

  std::map<int, int> phi;
  std::set<int> targets;
  for (auto [a, b] : phi0) {
    if (!phi.emplace(a, b).second) throw Error(ErrorKind::NoExtension, "phi0 maps a vertex twice");
    targets.insert(b);
  }
  if (phi.size() != t.vertices.size() ||
      !std::all_of(t.vertices.begin(), t.vertices.end(), [&](int v) { return phi.contains(v); }))
    throw Error(ErrorKind::NoExtension, "phi0 is not defined exactly on T");
  if (targets != std::set<int>(t2.vertices.begin(), t2.vertices.end()))
    throw Error(ErrorKind::NoExtension, "phi0 is not onto T'");

  std::set<std::pair<int, int>> image_edges;
  for (auto [a, b] : image.edges) image_edges.insert({std::min(a, b), std::max(a, b)});
  for (auto [a, b] : tree.edges) {
    int fa = phi[a], fb = phi[b];
    if (!image_edges.contains({std::min(fa, fb), std::max(fa, fb)}))
      throw Error(ErrorKind::NoExtension, "phi0 does not map T onto T'");
    auto e1 = g.edge_between(a, b);
    auto e2 = g.edge_between(fa, fb);
    if (g.edge_label(*e1) != g.edge_label(*e2)) throw Error(ErrorKind::NoExtension, "phi0 does not preserve edge labels");
  }

  std::vector<std::pair<int, int>> seed(phi.begin(), phi.end());
  std::vector<std::vector<int>> found;
  enumerate_isomorphisms(g, g, IsoMode::EdgeLabels, seed, [&](const std::vector<int>& m) {
    found.push_back(m);
    return found.size() < 2;
  });
  if (found.empty()) throw Error(ErrorKind::NoExtension, "phi0 has no label-preserving extension");
  if (found.size() > 1) throw Error(ErrorKind::NotUnique, "phi0 extends in more than one way");
  return *as_automorphism(g, found.front());
}

bool two_arc_transitive(const LinkGraph& g) {
  if (g.order() > 64) throw Error(ErrorKind::SizeLimitExceeded, "two_arc_transitive is limited to 64 vertices");
  if (!g.is_connected()) return false;
  std::vector<std::array<int, 3>> arcs;
  for (int v = 0; v < g.order(); ++v)
    for (const Incidence& a : g.incident(v))
      for (const Incidence& b : g.incident(v))
        if (a.edge != b.edge && a.neighbour != b.neighbour) arcs.push_back({a.neighbour, v, b.neighbour});
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (arcs.empty()) return true;
  const auto& base = arcs.front();
  for (const auto& arc : arcs) {
    std::array<std::pair<int, int>, 3> seed{{{base[0], arc[0]}, {base[1], arc[1]}, {base[2], arc[2]}}};
    if (!find_isomorphism(g, g, IsoMode::Plain, seed)) return false;
  }
  return true;
}

}  // namespace sidonplex
