#include <set>

#include "doctest.h"
#include "sidonplex/error.hpp"
#include "sidonplex/puzzle.hpp"

using namespace sidonplex;

namespace {

// Oriented star words for a vertex type, rebuilt here from the ring sets by
// rotating and reflecting directly (no call into the solver's tables).
std::vector<Word6> star_words(const PuzzleInstance& inst, int type) {
  Point rep{type - 1, 0};
  Word6 pattern{};
  auto nb = star_neighbours(rep);
  for (std::size_t i = 0; i < 6; ++i) pattern[i] = vertex_type(nb[i]);
  std::set<Word6> out;
  for (const Ring& r : inst.ring_sets.at(type))
    for (int refl = 0; refl < 2; ++refl)
      for (std::size_t rot = 0; rot < 6; ++rot) {
        Word6 f{}, t{};
        for (std::size_t i = 0; i < 6; ++i) {
          // refl: vertex i -> -i, face i -> -i-1.
          std::size_t vi = refl ? (12 - i - rot) % 6 : (i + rot) % 6;
          std::size_t fi = refl ? (11 - i - rot) % 6 : (i + rot) % 6;
          f[i] = r.faces[fi];
          t[i] = r.neighbour_types[vi];
        }
        if (t == pattern) out.insert(f);
      }
  return {out.begin(), out.end()};
}

// Disk labellings assembled vertex by vertex from whole star words.
std::set<FaceLabelling> join_oracle(const PuzzleInstance& inst, int radius) {
  auto interior = disk_interior({0, 0}, radius);
  std::set<FaceLabelling> out;
  FaceLabelling cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == interior.size()) {
      out.insert(cur);
      return;
    }
    auto fs = star_faces(interior[k]);
    for (const Word6& w : star_words(inst, vertex_type(interior[k]))) {
      bool ok = true;
      for (std::size_t i = 0; i < 6 && ok; ++i) {
        auto it = cur.find(fs[i]);
        ok = it == cur.end() || it->second == w[i];
      }
      if (!ok) continue;
      FaceLabelling saved = cur;
      for (std::size_t i = 0; i < 6; ++i) cur[fs[i]] = w[i];
      self(self, k + 1);
      cur = std::move(saved);
    }
  };
  rec(rec, 0);
  return out;
}

PuzzleInstance permuted(const PuzzleInstance& inst, const std::vector<int>& pi) {
  PuzzleInstance out;
  out.n = inst.n;
  for (const auto& [type, rings] : inst.ring_sets) {
    std::set<Ring> s;
    for (const Ring& r : rings) {
      Word6 f = r.faces;
      for (int& x : f) x = pi[static_cast<std::size_t>(x)];
      s.insert(canonical_ring(f, r.neighbour_types, type));
    }
    out.ring_sets[type] = {s.begin(), s.end()};
  }
  return out;
}

PuzzleInstance empty_instance() {
  PuzzleInstance inst;
  inst.n = 2;
  inst.ring_sets = {{1, {}}, {2, {}}, {3, {}}};
  return inst;
}

}  // namespace

TEST_CASE("lattice conventions") {
  CHECK(vertex_type(0, 0) == 1);
  CHECK(vertex_type(1, 0) == 2);
  CHECK(vertex_type(0, 1) == 3);
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y)
      for (auto o : {Orientation::Up, Orientation::Down}) {
        FaceId f{x, y, o};
        std::set<int> types;
        for (Point p : corners(f)) types.insert(vertex_type(p));
        CHECK(types == std::set<int>{1, 2, 3});
        CHECK(face_from_corners(corners(f)) == f);
      }
  CHECK_THROWS_AS(face_from_corners({Point{0, 0}, Point{1, 0}, Point{2, 0}}), Error);

  Point v{2, -1};
  auto nb = star_neighbours(v);
  auto fs = star_faces(v);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(hex_distance(nb[i], v) == 1);
    auto cs = corners(fs[i]);
    std::set<Point> s(cs.begin(), cs.end());
    CHECK(s == std::set<Point>{v, nb[i], nb[(i + 1) % 6]});
  }

  for (int r = 1; r <= 4; ++r) {
    CHECK(disk_faces({0, 0}, r).size() == static_cast<std::size_t>(6 * r * r));
    CHECK(disk_interior({0, 0}, r).size() == static_cast<std::size_t>(3 * r * (r - 1) + 1));
  }
  CHECK(disk_faces({0, 0}, 0) == disk_faces({0, 0}, 1));
  auto star = star_faces({0, 0});
  CHECK(disk_faces({0, 0}, 1) == std::vector<FaceId>(star.begin(), star.end()));
}

TEST_CASE("puzzle instance validation") {
  auto inst = puzzle_instance(heawood_spec());
  CHECK_NOTHROW(inst.validate());
  for (int k = 1; k <= 3; ++k) CHECK(inst.ring_sets[k].size() == 4);
  auto broken = inst;
  broken.ring_sets.erase(2);
  CHECK_THROWS_AS(broken.validate(), Error);
  broken = inst;
  broken.n = 1;
  CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("check_vertex on stars read off link hexagons") {
  const auto spec = heawood_spec();
  const auto inst = puzzle_instance(spec);
  const auto link = spec_link(spec, 1);
  int tried = 0;
  for_each_hexagon(link, [&](std::span<const int, 6> verts, std::span<const int, 6> edges) {
    Word6 f{}, t{};
    for (std::size_t i = 0; i < 6; ++i) {
      f[i] = link.edge_label(edges[i]);
      t[i] = link.vertex_colour(verts[i]);
    }
    // Lay the hexagon around the origin, shifting by one if the marks are out of phase.
    auto nb = star_neighbours({0, 0});
    std::size_t shift = t[0] == vertex_type(nb[0]) ? 0 : 1;
    FaceLabelling lab;
    auto fs = star_faces({0, 0});
    for (std::size_t i = 0; i < 6; ++i) lab[fs[i]] = f[(i + shift) % 6];
    CHECK(check_vertex(inst, lab, {0, 0}));
    ++tried;
  });
  CHECK(tried == 28);

  FaceLabelling zeros;
  for (const FaceId& f : disk_faces({0, 0}, 2)) zeros[f] = 0;
  CHECK_FALSE(check_vertex(empty_instance(), zeros, {0, 0}));
  try {
    check_vertex(inst, zeros, {2, 0});
    FAIL("expected IncompleteStar");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteStar);
  }
  try {
    check_disk(inst, zeros, {0, 0}, 3);
    FAIL("expected Coverage");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Coverage);
  }
}

TEST_CASE("solve_disk completeness at R=1") {
  CHECK(solve_disk(empty_instance(), 1).empty());
  for (const auto& spec : {heawood_spec(), mk_spec()}) {
    auto inst = puzzle_instance(spec);
    auto sols = solve_disk(inst, 1);
    auto words = star_words(inst, 1);
    REQUIRE(sols.size() == words.size());
    std::set<Word6> got;
    auto fs = star_faces({0, 0});
    for (const auto& lab : sols) {
      Word6 w{};
      for (std::size_t i = 0; i < 6; ++i) w[i] = lab.at(fs[i]);
      got.insert(w);
      CHECK(check_disk(inst, lab, {0, 0}, 1));
    }
    CHECK(got == std::set<Word6>(words.begin(), words.end()));
  }
  // Each Heawood ring has six planar placements, each MK ring six as well.
  CHECK(solve_disk(puzzle_instance(heawood_spec()), 1).size() == 24);
  CHECK(solve_disk(puzzle_instance(mk_spec()), 1).size() == 18);
}

TEST_CASE("solve_disk at R=2 agrees with the star-join oracle") {
  for (const auto& spec : {heawood_spec(), mk_spec()}) {
    auto inst = puzzle_instance(spec);
    auto sols = solve_disk(inst, 2, 100000);
    std::set<FaceLabelling> set(sols.begin(), sols.end());
    CHECK(set.size() == sols.size());
    CHECK(set == join_oracle(inst, 2));
    for (const auto& lab : sols) CHECK(check_disk(inst, lab, {0, 0}, 2));
  }
  CHECK(solve_disk(puzzle_instance(heawood_spec()), 2, 100000).size() == 1536);
  CHECK(solve_disk(puzzle_instance(mk_spec()), 2, 100000).size() == 252);
  CHECK(solve_disk(puzzle_instance(heawood_spec()), 2, 10).size() == 10);
}

TEST_CASE("solve_disk is deterministic, seeded, and spiral ordered") {
  auto inst = puzzle_instance(heawood_spec());
  auto a = solve_disk(inst, 2, 50);
  auto b = solve_disk(inst, 2, 50);
  CHECK(a == b);
  auto first = a.front();
  FaceLabelling seed;
  for (const FaceId& f : star_faces({0, 0})) seed[f] = first.at(f);
  auto seeded = solve_disk(inst, 2, 100000, seed);
  std::size_t expect = 0;
  for (const auto& lab : solve_disk(inst, 2, 100000)) {
    bool match = true;
    for (const auto& [f, l] : seed) match = match && lab.at(f) == l;
    expect += match;
  }
  CHECK(seeded.size() == expect);
  CHECK(seeded.front() == first);
  for (const auto& lab : seeded)
    for (const auto& [f, l] : seed) CHECK(lab.at(f) == l);

  FaceLabelling outside{{FaceId{9, 9, Orientation::Up}, 0}};
  CHECK_THROWS_AS(solve_disk(inst, 2, 10, outside), Error);
}

TEST_CASE("mutating one face breaks the disk") {
  auto inst = puzzle_instance(heawood_spec());
  auto sols = solve_disk(inst, 2, 40);
  std::size_t survivors = 0, total = 0;
  for (const auto& lab : sols)
    for (const auto& [f, l] : lab)
      for (int x = 0; x <= inst.n; ++x) {
        if (x == l) continue;
        auto m = lab;
        m[f] = x;
        survivors += check_disk(inst, m, {0, 0}, 2);
        ++total;
      }
  CHECK(total == 40 * 24 * 2);
  CHECK(survivors == 0);
}

TEST_CASE("label-permutation equivariance") {
  auto inst = puzzle_instance(heawood_spec());
  const std::vector<std::vector<int>> perms{{1, 2, 0}, {0, 2, 1}, {2, 1, 0}};
  auto base = solve_disk(inst, 2, 100000);
  for (const auto& pi : perms) {
    auto moved = solve_disk(permuted(inst, pi), 2, 100000);
    std::set<FaceLabelling> mapped;
    for (const auto& lab : base) {
      FaceLabelling m;
      for (const auto& [f, l] : lab) m[f] = pi[static_cast<std::size_t>(l)];
      mapped.insert(m);
    }
    CHECK(mapped == std::set<FaceLabelling>(moved.begin(), moved.end()));
  }
}

TEST_CASE("periodic solutions") {
  CHECK(find_periodic(empty_instance(), 3).empty());
  auto inst = puzzle_instance(heawood_spec());
  auto sols = find_periodic(inst, 3);
  REQUIRE_FALSE(sols.empty());
  std::set<PeriodicSolution> set(sols.begin(), sols.end());
  CHECK(set.size() == sols.size());
  for (const auto& s : sols) {
    CHECK(s.period() <= 3);
    const int r = 2 * s.period();
    CHECK(check_disk(inst, expand_periodic(s, r), {0, 0}, r));
    CHECK(check_disk(inst, expand_periodic(s, 3, {5, -2}), {5, -2}, 3));
    for (const FaceId& f : disk_faces({0, 0}, 3))
      for (Point u : s.basis) CHECK(s.label_at({f.x + u.x, f.y + u.y, f.orientation}) == s.label_at(f));
    CHECK(expand_periodic(s, 0).size() == 6);
    // Closure under translations and the type-preserving point group.
    for (Point t : {Point{1, 1}, Point{3, 0}, Point{-2, 1}, Point{2, 2}}) CHECK(set.contains(translate(s, t)));
    for (int rot = 0; rot < 3; ++rot)
      for (bool refl : {false, true}) CHECK(set.contains(transform(s, rot, refl)));
  }
  CHECK(translate(sols.front(), {0, 0}) == sols.front());
  CHECK_THROWS_AS(translate(sols.front(), {1, 0}), Error);
  CHECK_THROWS_AS(make_periodic({1, 0}, {0, 3}, [](const FaceId&) { return 0; }), Error);
  CHECK_THROWS_AS(make_periodic({3, 0}, {6, 0}, [](const FaceId&) { return 0; }), Error);
  CHECK(find_periodic(inst, 3, 5).size() == 5);
}

TEST_CASE("periodic search on the twisted instance is exploratory") {
  auto sols = find_periodic(puzzle_instance(mk_spec()), 3);
  for (const auto& s : sols) CHECK(check_disk(puzzle_instance(mk_spec()), expand_periodic(s, 4), {0, 0}, 4));
  MESSAGE("periodic solutions of the twisted instance up to period 3: " << sols.size());
}

TEST_CASE("render_text") {
  FaceLabelling lab{{FaceId{0, 0, Orientation::Up}, 1}, {FaceId{0, 0, Orientation::Down}, 2}};
  CHECK(render_text(lab) == " 1 2\n");
  CHECK(render_text({}).empty());
}
