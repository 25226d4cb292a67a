#include <algorithm>
#include <map>

#include "sidonplex/complex.hpp"
#include "sidonplex/error.hpp"

namespace sidonplex {

namespace {

/// Backtracking isomorphism search between two balls. Almost every vertex of
/// `a` is placed as the apex of a face over an already mapped edge, so its
/// image is one of at most n+1 apexes.
class BallMatcher {
 public:
  BallMatcher(const CellComplexBall& a, const CellComplexBall& b, BallIsoOptions options,
              std::span<const std::pair<int, int>> seed, const std::function<bool(const std::vector<int>&)>& visit)
      : a_(a), b_(b), opt_(options), visit_(visit) {
    map_.assign(a.vertex_count(), -1);
    inverse_.assign(b.vertex_count(), -1);
    feasible_ = a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
                a.face_count() == b.face_count();
    for (auto [u, v] : seed) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= a.vertex_count() ||
          static_cast<std::size_t>(v) >= b.vertex_count())
        throw Error(ErrorKind::InvalidArgument, "seed vertex out of range");
      if (forced_.contains(u)) {
        if (forced_[u] != v) feasible_ = false;
        continue;
      }
      forced_[u] = v;
    }
    if (feasible_) plan(seed);
  }

  std::size_t run() {
    if (!feasible_ || a_.vertex_count() == 0) return 0;
    extend(0);
    return found_;
  }

 private:
  struct Step {
    int vertex = -1;
    int face_a = -1, face_b = -1, face_label = -1;  // an earlier pair closing a triangle
    int anchor = -1;                                // an earlier neighbour
  };

  // Hubs are taken in placement order; around each hub the unplaced vertices
  // of its link are placed by walking the link from placed vertices, so each
  // link is pinned down before the next hub is opened.
  void plan(std::span<const std::pair<int, int>> seed) {
    const std::size_t n = a_.vertex_count();
    std::vector<bool> placed(n, false);
    auto is_placed = [&](int v) { return placed[static_cast<std::size_t>(v)]; };
    auto place = [&](int v, int fa, int fb, int label, int anchor) {
      placed[static_cast<std::size_t>(v)] = true;
      steps_.push_back({v, fa, fb, label, anchor});
    };
    for (auto [u, v] : seed)
      if (!is_placed(u)) place(u, -1, -1, -1, -1);
    if (steps_.empty()) place(a_.centre, -1, -1, -1, -1);
    for (std::size_t hub_pos = 0; steps_.size() < n; ++hub_pos) {
      if (hub_pos == steps_.size()) {
        for (std::size_t v = 0; v < n; ++v)
          if (!placed[v]) {
            place(static_cast<int>(v), -1, -1, -1, -1);
            break;
          }
      }
      const int hub = steps_[hub_pos].vertex;
      auto walk = [&] {
        for (bool grew = true; grew;) {
          grew = false;
          for (int f : a_.faces_at(hub)) {
            int p = -1, q = -1;
            for (int u : a_.face(f).vertices)
              if (u != hub) (p < 0 ? p : q) = u;
            if (is_placed(p) == is_placed(q)) continue;
            if (is_placed(q)) std::swap(p, q);
            place(q, hub, p, a_.face(f).label, hub);
            grew = true;
          }
        }
      };
      walk();
      for (int u : a_.neighbours(hub))
        if (!is_placed(u)) {
          place(u, -1, -1, -1, hub);
          walk();
        }
    }
  }

  std::vector<int> candidates(const Step& s) const {
    if (auto it = forced_.find(s.vertex); it != forced_.end()) return {it->second};
    std::vector<int> out;
    if (s.face_a >= 0) {
      auto e = b_.edge_between(map_[static_cast<std::size_t>(s.face_a)], map_[static_cast<std::size_t>(s.face_b)]);
      if (!e) return out;
      for (int f : b_.faces_on_edge(*e)) {
        if (opt_.preserve_labels && b_.face(f).label != s.face_label) continue;
        out.push_back(b_.third_vertex(f, map_[static_cast<std::size_t>(s.face_a)],
                                      map_[static_cast<std::size_t>(s.face_b)]));
      }
    } else if (s.anchor >= 0) {
      auto nb = b_.neighbours(map_[static_cast<std::size_t>(s.anchor)]);
      out.assign(nb.begin(), nb.end());
    } else {
      out.resize(b_.vertex_count());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool consistent(int v, int x) const {
    if (inverse_[static_cast<std::size_t>(x)] >= 0) return false;
    const BallVertex& va = a_.vertex(v);
    const BallVertex& vb = b_.vertex(x);
    if (va.layer != vb.layer) return false;
    if (opt_.preserve_colours && va.colour != vb.colour) return false;
    if (a_.neighbours(v).size() != b_.neighbours(x).size() || a_.faces_at(v).size() != b_.faces_at(x).size())
      return false;
    int mapped_a = 0, mapped_b = 0;
    for (int u : a_.neighbours(v)) {
      int img = map_[static_cast<std::size_t>(u)];
      if (img < 0) continue;
      ++mapped_a;
      if (!b_.edge_between(x, img)) return false;
    }
    for (int w : b_.neighbours(x)) mapped_b += inverse_[static_cast<std::size_t>(w)] >= 0;
    if (mapped_a != mapped_b) return false;
    int faces_a = 0, faces_b = 0;
    for (int f : a_.faces_at(v)) {
      int p = -1, q = -1;
      for (int u : a_.face(f).vertices)
        if (u != v) (p < 0 ? p : q) = u;
      int ip = map_[static_cast<std::size_t>(p)], iq = map_[static_cast<std::size_t>(q)];
      if (ip < 0 || iq < 0) continue;
      ++faces_a;
      auto g = b_.face_between(x, ip, iq);
      if (!g) return false;
      if (opt_.preserve_labels && b_.face(*g).label != a_.face(f).label) return false;
    }
    for (int f : b_.faces_at(x)) {
      int mapped = 0;
      for (int u : b_.face(f).vertices)
        if (u != x && inverse_[static_cast<std::size_t>(u)] >= 0) ++mapped;
      faces_b += mapped == 2;
    }
    return faces_a == faces_b;
  }

  void extend(std::size_t depth) {
    if (stop_) return;
    if (depth == steps_.size()) {
      ++found_;
      stop_ = !visit_(map_);
      return;
    }
    const Step& s = steps_[depth];
    for (int x : candidates(s)) {
      if (!consistent(s.vertex, x)) continue;
      map_[static_cast<std::size_t>(s.vertex)] = x;
      inverse_[static_cast<std::size_t>(x)] = s.vertex;
      extend(depth + 1);
      map_[static_cast<std::size_t>(s.vertex)] = -1;
      inverse_[static_cast<std::size_t>(x)] = -1;
      if (stop_) return;
    }
  }

  const CellComplexBall& a_;
  const CellComplexBall& b_;
  BallIsoOptions opt_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::map<int, int> forced_;
  std::vector<Step> steps_;
  std::vector<int> map_, inverse_;
  bool feasible_ = true;
  bool stop_ = false;
  std::size_t found_ = 0;
};

std::vector<std::pair<int, int>> lift_link_map(const CellComplexBall& a, const VertexLink& la, const CellComplexBall& b,
                                               const VertexLink& lb, const std::vector<int>& link_map) {
  std::vector<std::pair<int, int>> seed{{a.centre, b.centre}};
  for (std::size_t u = 0; u < link_map.size(); ++u)
    seed.emplace_back(la.ball_vertex[u], lb.ball_vertex[static_cast<std::size_t>(link_map[u])]);
  return seed;
}

}  // namespace

std::size_t enumerate_ball_isomorphisms(const CellComplexBall& a, const CellComplexBall& b, BallIsoOptions options,
                                        std::span<const std::pair<int, int>> seed,
                                        const std::function<bool(const std::vector<int>&)>& visit) {
  BallMatcher m(a, b, options, seed, visit);
  return m.run();
}

std::optional<std::vector<int>> find_ball_isomorphism(const CellComplexBall& a, const CellComplexBall& b,
                                                      BallIsoOptions options,
                                                      std::span<const std::pair<int, int>> seed) {
  std::optional<std::vector<int>> out;
  enumerate_ball_isomorphisms(a, b, options, seed, [&](const std::vector<int>& m) {
    out = m;
    return false;
  });
  return out;
}

std::optional<std::vector<int>> centred_isomorphism(const CellComplexBall& a, const CellComplexBall& b,
                                                    BallIsoOptions options) {
  if (a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count()) return std::nullopt;
  if (options.preserve_colours && a.vertex(a.centre).colour != b.vertex(b.centre).colour) return std::nullopt;
  const VertexLink la = a.link(a.centre), lb = b.link(b.centre);
  IsoMode mode = !options.preserve_labels    ? IsoMode::Plain
                 : options.preserve_colours ? IsoMode::FullColours
                                            : IsoMode::EdgeLabels;
  std::optional<std::vector<int>> out;
  enumerate_isomorphisms(la.graph, lb.graph, mode, {}, [&](const std::vector<int>& link_map) {
    auto seed = lift_link_map(a, la, b, lb, link_map);
    out = find_ball_isomorphism(a, b, options, seed);
    return !out.has_value();
  });
  return out;
}

bool sign_variants_isomorphic(const ComplexSpec& spec, const std::array<int, 3>& signs_a,
                              const std::array<int, 3>& signs_b, int radius) {
  if (radius < 1 || radius > 3) throw Error(ErrorKind::InvalidArgument, "sign comparison radius must be 1..3");
  auto a = build_ball(with_signs(spec, signs_a), radius);
  auto b = build_ball(with_signs(spec, signs_b), radius);
  return centred_isomorphism(a, b, {true, false}).has_value();
}

bool vertex_transitivity_check(const ComplexSpec& spec, int radius) {
  if (radius < 1 || radius > 2) throw Error(ErrorKind::InvalidArgument, "transitivity radius must be 1 or 2");
  std::vector<CellComplexBall> balls;
  for (int c = 1; c <= 3; ++c) balls.push_back(build_ball(spec, radius, c));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!centred_isomorphism(balls[i], balls[j], {true, false})) return false;
  return true;
}

std::vector<std::vector<int>> one_ball_isomorphisms(const CellComplexBall& a, const CellComplexBall& b) {
  std::vector<std::vector<int>> out;
  const VertexLink la = a.link(a.centre), lb = b.link(b.centre);
  enumerate_isomorphisms(la.graph, lb.graph, IsoMode::Plain, {}, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t count_extensions(const CellComplexBall& a, const CellComplexBall& b, const std::vector<int>& link_map,
                             std::size_t limit) {
  const VertexLink la = a.link(a.centre), lb = b.link(b.centre);
  if (link_map.size() != static_cast<std::size_t>(la.graph.order()) || la.graph.order() != lb.graph.order())
    throw Error(ErrorKind::InvalidArgument, "link map does not match the centre links");
  auto seed = lift_link_map(a, la, b, lb, link_map);
  std::size_t count = 0;
  enumerate_ball_isomorphisms(a, b, {false, false}, seed, [&](const std::vector<int>&) { return ++count < limit; });
  return count;
}

void require_odd_mk(const ComplexSpec& spec) {
  require_valid(spec);
  const LinkGraph mk = canonical_mk();
  for (int k = 1; k <= 3; ++k)
    if (!is_isomorphic(spec_link(spec, k), mk, false))
      throw Error(ErrorKind::SpecNotOdd, "link of colour " + std::to_string(k) + " is not the Moebius-Kantor graph");
  for (int c = 1; c <= 3; ++c) {
    auto report = check_oddness(build_ball(spec, 2, c));
    if (!report.all_odd()) throw Error(ErrorKind::SpecNotOdd, "some face is not odd");
  }
}

bool extension_uniqueness_check(const ComplexSpec& spec, const ComplexSpec& other, int radius,
                                const std::vector<std::vector<int>>& link_maps) {
  if (radius < 1 || radius > 3) throw Error(ErrorKind::InvalidArgument, "extension radius must be 1..3");
  require_odd_mk(spec);
  require_odd_mk(other);
  auto a = build_ball(spec, radius);
  auto b = build_ball(other, radius);
  auto maps = link_maps.empty() ? one_ball_isomorphisms(a, b) : link_maps;
  if (maps.empty()) return false;
  for (const auto& m : maps)
    if (count_extensions(a, b, m, 2) != 1) return false;
  return true;
}

}  // namespace sidonplex
