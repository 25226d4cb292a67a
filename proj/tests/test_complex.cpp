#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "sidonplex/complex.hpp"
#include "sidonplex/error.hpp"

using namespace sidonplex;

namespace {

// Sizes of B_2 counted directly from the link: every sphere edge gets n new
// apexes, then every sphere vertex gains the link vertices and edges its
// partial link (centre, sphere neighbours, apexes) is still missing.
std::pair<std::size_t, std::size_t> two_ball_size(const LinkGraph& link, std::size_t n_plus_1) {
  const std::size_t v = static_cast<std::size_t>(link.order()), e = link.edge_count();
  const std::size_t n = n_plus_1 - 1, deg = n_plus_1;
  const std::size_t apexes = e * n;
  const std::size_t new_vertices = v * (v - (1 + deg + deg * n));
  const std::size_t new_faces = v * (e - deg * (1 + n));
  return {1 + v + apexes + new_vertices, e + apexes + new_faces};
}

CellComplexBall copy_with_label(const CellComplexBall& b, int face, int label) {
  CellComplexBall out;
  for (const auto& v : b.vertices()) out.add_vertex(v.colour, v.layer);
  for (std::size_t f = 0; f < b.face_count(); ++f) {
    const auto& vs = b.face(static_cast<int>(f)).vertices;
    out.add_face(vs[0], vs[1], vs[2], static_cast<int>(f) == face ? label : b.face(static_cast<int>(f)).label);
  }
  out.centre = b.centre;
  out.radius = b.radius;
  out.spec = b.spec;
  return out;
}

// Number of simple paths s-a-b-t, by scanning all vertex pairs.
int three_paths(const LinkGraph& g, int s, int t) {
  int count = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      if (a == b || a == s || a == t || b == s || b == t) continue;
      if (g.multiplicity(s, a) && g.multiplicity(a, b) && g.multiplicity(b, t)) ++count;
    }
  return count;
}

std::size_t outer_vertices(const CellComplexBall& b, int f) {
  std::size_t k = 0;
  for (int v : b.face(f).vertices) k += b.vertex(v).layer == b.radius;
  return k;
}

}  // namespace

TEST_CASE("ball sizes") {
  for (const auto& spec : {mk_spec(), heawood_spec()}) {
    const auto link = spec_link(spec, 1);
    auto b1 = build_ball(spec, 1);
    CHECK(b1.vertex_count() == static_cast<std::size_t>(link.order()) + 1);
    CHECK(b1.face_count() == link.edge_count());
    auto b2 = build_ball(spec, 2);
    auto [v, f] = two_ball_size(link, spec.label_count());
    CHECK(b2.vertex_count() == v);
    CHECK(b2.face_count() == f);
  }
  CHECK(build_ball(mk_spec(), 1).vertex_count() == 17);
  CHECK(build_ball(mk_spec(), 1).face_count() == 24);
  CHECK(build_ball(heawood_spec(), 1).vertex_count() == 15);
  CHECK(build_ball(heawood_spec(), 1).face_count() == 21);
  CHECK(build_ball(mk_spec(), 2).vertex_count() == 161);
  CHECK(build_ball(heawood_spec(), 2).face_count() == 231);
}

TEST_CASE("build_ball arguments") {
  CHECK_THROWS_AS(build_ball(mk_spec(), 0), Error);
  CHECK_THROWS_AS(build_ball(mk_spec(), 1, 4), Error);
  auto bad = mk_spec();
  bad.moduli = {6, 7, 7};
  try {
    build_ball(bad, 1);
    FAIL("expected InvalidSpec");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }
}

TEST_CASE("verify_ball on built balls") {
  for (const auto& spec : {mk_spec(), heawood_spec()})
    for (int r = 1; r <= 3; ++r)
      for (int c = 1; c <= 3; ++c) {
        auto b = build_ball(spec, r, c);
        auto rep = verify_ball(b, spec);
        CHECK(rep.ok);
        std::size_t interior = 0;
        for (const auto& v : b.vertices()) interior += v.layer < r;
        CHECK(rep.interior_checked == interior);
        auto d = b.distances();
        for (std::size_t v = 0; v < b.vertex_count(); ++v) CHECK(d[v] == b.vertex(static_cast<int>(v)).layer);
      }
  CHECK(verify_ball(build_ball(mk_spec(), 1), mk_spec()).interior_checked == 1);
}

TEST_CASE("verify_ball catches a mutated face label") {
  const auto spec = mk_spec();
  auto b = build_ball(spec, 2);
  CHECK(verify_ball(copy_with_label(b, 0, b.face(0).label), spec).ok);
  std::size_t caught = 0, tried = 0;
  for (std::size_t f = 0; f < b.face_count(); f += 7)
    for (int label = 0; label < 3; ++label) {
      if (label == b.face(static_cast<int>(f)).label) continue;
      ++tried;
      caught += !verify_ball(copy_with_label(b, static_cast<int>(f), label), spec).ok;
    }
  CHECK(caught == tried);
}

TEST_CASE("ball construction does not depend on completion order") {
  for (const auto& spec : {mk_spec(), heawood_spec()}) {
    auto base = build_ball(spec, 2);
    bool some_differ = false;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto other = build_ball(spec, 2, 1, seed);
      CHECK(verify_ball(other, spec).ok);
      some_differ = some_differ || !(other == base);
      CHECK(centred_isomorphism(base, other, {true, true}).has_value());
    }
    CHECK(some_differ);
    CHECK(build_ball(spec, 2, 1, 9) == build_ball(spec, 2, 1, 9));
  }
}

TEST_CASE("ball isomorphism search") {
  auto a = build_ball(mk_spec(), 2);
  auto id = find_ball_isomorphism(a, a, {true, true}, std::vector<std::pair<int, int>>{{a.centre, a.centre}});
  REQUIRE(id);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) CHECK((*id)[v] == static_cast<int>(v));
  auto h = build_ball(heawood_spec(), 2);
  CHECK_FALSE(find_ball_isomorphism(a, h, {false, false}));
  CHECK_THROWS_AS(find_ball_isomorphism(a, a, {}, std::vector<std::pair<int, int>>{{-1, 0}}), Error);
}

TEST_CASE("root rank lemma over all (b,a,b) roots") {
  const auto spec = mk_spec();
  for (int k = 1; k <= 3; ++k) {
    const auto g = spec_link(spec, k);
    const int special = spec.sigmas[static_cast<std::size_t>(k - 1)][0];
    std::size_t roots = 0;
    for (int x = 0; x < g.order(); ++x)
      for (const auto& i1 : g.incident(x))
        for (const auto& i2 : g.incident(i1.neighbour))
          for (const auto& i3 : g.incident(i2.neighbour)) {
            const int b = g.edge_label(i1.edge), a = g.edge_label(i2.edge);
            if (a == b || g.edge_label(i3.edge) != b) continue;
            std::array<int, 4> path{x, i1.neighbour, i2.neighbour, i3.neighbour};
            ++roots;
            const bool rank2 = root_is_rank2(g, path);
            CHECK(rank2 == (three_paths(g, path[0], path[3]) == 3));
            CHECK(rank2 == (a == special));
          }
    CHECK(roots > 0);
  }
  const auto g = spec_link(spec, 1);
  CHECK_THROWS_AS(root_is_rank2(g, std::array{0, 1, 2}), Error);
  const int n0 = g.incident(0)[0].neighbour;
  CHECK_THROWS_AS(root_is_rank2(g, std::array{0, n0, 0, n0}), Error);
}

TEST_CASE("oddness of the Moebius-Kantor complex") {
  for (int c = 1; c <= 3; ++c) {
    auto b = build_ball(mk_spec(), 2, c);
    std::size_t expected = 0;
    for (std::size_t f = 0; f < b.face_count(); ++f) {
      const bool inside = outer_vertices(b, static_cast<int>(f)) <= 1;
      expected += inside;
      CHECK(fully_interior(b, static_cast<int>(f)) == inside);
    }
    auto rep = check_oddness(b);
    CHECK(rep.faces_checked == expected);
    CHECK(rep.all_odd());
    CHECK(rep.choices_checked == rep.faces_checked * 8);
  }
  CHECK(check_oddness(build_ball(mk_spec(), 2)).faces_checked == 72);
  auto b3 = build_ball(mk_spec(), 3);
  CHECK(check_oddness(b3).all_odd());

  auto b = build_ball(mk_spec(), 2);
  bool thrown = false;
  for (std::size_t f = 0; f < b.face_count() && !thrown; ++f) {
    if (outer_vertices(b, static_cast<int>(f)) < 2) continue;
    try {
      triangle_is_odd(b, static_cast<int>(f));
    } catch (const Error& e) {
      thrown = e.kind() == ErrorKind::InsufficientNeighborhood;
    }
  }
  CHECK(thrown);
}

TEST_CASE("rank read through the ball agrees with the link") {
  auto b = build_ball(mk_spec(), 3);
  std::size_t checked = 0;
  for (int v = 0; v < static_cast<int>(b.vertex_count()) && checked < 400; ++v) {
    if (b.vertex(v).layer > 1) continue;
    const auto l = b.link(v);
    for (const auto& i1 : l.graph.incident(0))
      for (const auto& i2 : l.graph.incident(i1.neighbour))
        for (const auto& i3 : l.graph.incident(i2.neighbour)) {
          std::array<int, 4> local{0, i1.neighbour, i2.neighbour, i3.neighbour};
          std::set<int> distinct(local.begin(), local.end());
          if (distinct.size() < 4) continue;
          std::array<int, 4> path{};
          for (std::size_t i = 0; i < 4; ++i) path[i] = l.ball_vertex[static_cast<std::size_t>(local[i])];
          bool in_link = false;
          try {
            in_link = root_is_rank2(l.graph, local);
          } catch (const Error&) {
            continue;
          }
          CHECK(ball_root_is_rank2(b, v, path) == in_link);
          ++checked;
        }
  }
  CHECK(checked > 100);
}

TEST_CASE("sign variants") {
  const auto spec = mk_spec();
  std::vector<std::array<int, 3>> all;
  for (int s = 0; s < 8; ++s) all.push_back({s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1});
  for (const auto& a : all)
    for (const auto& b : all) CHECK(sign_variants_isomorphic(spec, a, b, 2));
  CHECK(sign_variants_isomorphic(heawood_spec(), {1, 1, 1}, {-1, 1, -1}, 2));
  CHECK_THROWS_AS(sign_variants_isomorphic(spec, all[0], all[1], 4), Error);
}

TEST_CASE("polarities lift to radius-1 balls across a sign flip") {
  for (const auto& spec : {mk_spec(), heawood_spec()})
    for (int j = 1; j <= 3; ++j) {
      std::array<int, 3> flip = spec.signs();
      flip[static_cast<std::size_t>(j - 1)] *= -1;
      auto a = build_ball(spec, 1, j);
      auto b = build_ball(with_signs(spec, flip), 1, j);
      const auto model = spec_link(spec, j);
      const auto la = a.link(a.centre), lb = b.link(b.centre);
      std::vector<int> identity(static_cast<std::size_t>(model.order()));
      for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
      REQUIRE(find_isomorphism(model, la.graph, IsoMode::EdgeLabels, {}) == identity);
      REQUIRE(find_isomorphism(spec_link(with_signs(spec, flip), j), lb.graph, IsoMode::EdgeLabels, {}) == identity);
      for (std::size_t p = 0; p < spec.label_count(); ++p) {
        auto pol = polarity(model, p);
        std::vector<std::pair<int, int>> seed{{a.centre, b.centre}};
        for (std::size_t u = 0; u < pol.mapping.size(); ++u)
          seed.emplace_back(la.ball_vertex[u], lb.ball_vertex[static_cast<std::size_t>(pol.mapping[u])]);
        CHECK(find_ball_isomorphism(a, b, {true, true}, seed).has_value());
      }
    }
}

TEST_CASE("embedding of puzzle solutions") {
  const auto spec = heawood_spec();
  auto inst = puzzle_instance(spec);
  auto ball = build_ball(spec, 3);
  auto sols = solve_disk(inst, 2, 100000);
  REQUIRE(sols.size() == 1536);
  std::size_t embedded = 0;
  for (std::size_t s = 0; s < sols.size(); s += 11) {
    const auto& lab = sols[s];
    auto seeds = star_seeds(ball, lab, ball.centre);
    REQUIRE_FALSE(seeds.empty());
    for (const auto& seed : seeds) {
      auto emb = embed_disk(ball, lab, 2, seed);
      CHECK(emb.faces.size() == disk_faces({}, 2).size());
      std::set<int> images;
      for (const auto& [p, v] : emb.vertices) {
        images.insert(v);
        CHECK(ball.vertex(v).colour == vertex_type(p));
      }
      CHECK(images.size() == emb.vertices.size());
      for (const auto& [f, g] : emb.faces) {
        CHECK(ball.face(g).label == lab.at(f));
        auto cs = corners(f);
        auto want = ball.face_between(emb.vertices.at(cs[0]), emb.vertices.at(cs[1]), emb.vertices.at(cs[2]));
        CHECK(want == g);
      }
      ++embedded;
    }
  }
  CHECK(embedded > 0);
}

TEST_CASE("star seeds match a brute-force count") {
  const auto spec = heawood_spec();
  auto ball = build_ball(spec, 2);
  auto sols = solve_disk(puzzle_instance(spec), 1, 5);
  const auto nb = star_neighbours({});
  const auto fs = star_faces({});
  for (const auto& lab : sols) {
    std::size_t brute = 0;
    auto around = ball.neighbours(ball.centre);
    std::vector<int> pick(6);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == 6) {
        for (std::size_t k = 0; k < 6; ++k) {
          auto f = ball.face_between(ball.centre, pick[k], pick[(k + 1) % 6]);
          if (!f || ball.face(*f).label != lab.at(fs[k])) return;
        }
        ++brute;
        return;
      }
      for (int u : around) {
        if (ball.vertex(u).colour != vertex_type(nb[i])) continue;
        if (std::find(pick.begin(), pick.begin() + static_cast<long>(i), u) != pick.begin() + static_cast<long>(i))
          continue;
        pick[i] = u;
        rec(i + 1);
      }
    };
    rec(0);
    CHECK(star_seeds(ball, lab, ball.centre).size() == brute);
    CHECK(brute > 0);
  }
}

TEST_CASE("embedding is functorial and bounded by the ball") {
  const auto spec = heawood_spec();
  auto inst = puzzle_instance(spec);
  auto b4 = build_ball(spec, 4);
  auto sols = solve_disk(inst, 3, 4);
  REQUIRE(sols.size() == 4);
  for (const auto& lab : sols) {
    for (const auto& seed : star_seeds(b4, lab, b4.centre)) {
      auto big = embed_disk(b4, lab, 3, seed);
      for (int r = 0; r <= 2; ++r) {
        auto small = embed_disk(b4, lab, r, seed);
        for (const auto& [f, g] : small.faces) CHECK(big.faces.at(f) == g);
        for (const auto& [p, v] : small.vertices) CHECK(big.vertices.at(p) == v);
      }
      CHECK(embed_disk(b4, lab, 0, seed).vertices == seed);
    }
  }
  auto b2 = build_ball(spec, 2);
  auto seeds = star_seeds(b2, sols[0], b2.centre);
  REQUIRE_FALSE(seeds.empty());
  try {
    embed_disk(b2, sols[0], 3, seeds[0]);
    FAIL("expected OutOfBall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfBall);
  }
  auto partial = sols[0];
  partial.erase(partial.begin());
  CHECK_THROWS_AS(embed_disk(b4, partial, 3, seeds[0]), Error);
  auto shifted = seeds[0];
  std::swap(shifted.begin()->second, std::next(shifted.begin())->second);
  CHECK_THROWS_AS(embed_disk(b4, sols[0], 2, shifted), Error);
}

TEST_CASE("vertex transitivity") {
  CHECK(vertex_transitivity_check(heawood_spec(), 2));
  CHECK(vertex_transitivity_check(heawood_spec(), 1));
  CHECK_FALSE(vertex_transitivity_check(uniform_spec({0, 1, 3}, {7, 7, 8}), 1));
  auto h = build_ball(heawood_spec(), 2, 2);
  CHECK(centred_isomorphism(h, h, {true, true}).has_value());
  CHECK_THROWS_AS(vertex_transitivity_check(heawood_spec(), 3), Error);
}

TEST_CASE("extension uniqueness") {
  const auto spec = mk_spec();
  auto a = build_ball(spec, 2);
  auto maps = one_ball_isomorphisms(a, a);
  CHECK(maps.size() == 96);
  std::vector<int> identity(16);
  for (std::size_t i = 0; i < 16; ++i) identity[i] = static_cast<int>(i);
  CHECK(std::find(maps.begin(), maps.end(), identity) != maps.end());
  for (const auto& m : maps) CHECK(count_extensions(a, a, m, 3) == 1);
  CHECK(extension_uniqueness_check(spec, spec, 2));
  CHECK(extension_uniqueness_check(spec, spec, 2, {identity}));
  try {
    extension_uniqueness_check(heawood_spec(), spec, 2);
    FAIL("expected SpecNotOdd");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpecNotOdd);
  }
  std::vector<int> broken = identity;
  std::swap(broken[0], broken[1]);
  CHECK(count_extensions(a, a, broken) == 0);
}

TEST_CASE("ball_to_dot") {
  auto dot = ball_to_dot(build_ball(heawood_spec(), 1));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
