#include "doctest.h"
#include "sidonplex/error.hpp"
#include "sidonplex/io.hpp"

using namespace sidonplex;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

Json reparse(const Json& j) { return parse_json(j.dump()); }

}  // namespace

TEST_CASE("sequences and collisions round-trip") {
  Sequence s{0, 2, 7, 8, 11};
  CHECK(sequence_to_json(s).dump() == "[0,2,7,8,11]");
  CHECK(sequence_from_json(reparse(sequence_to_json(s))) == s);
  CHECK_THROWS_AS(sequence_from_json(parse_json("[3,1]")), Error);
  CHECK(kind_of([] { sequence_from_json(parse_json("{\"a\":1}")); }) == ErrorKind::Parse);

  auto pairs = alternating_collisions({0, 1, 3}, 7);
  auto j = collisions_to_json(pairs);
  CHECK(j.size() == 12);
  CHECK(j[0].contains("residue"));
  CHECK(collisions_from_json(reparse(j)) == pairs);
}

TEST_CASE("graphs round-trip") {
  auto g = build_link({0, 1, 3}, 8, Sigma{0, 1, 2}, Tau{2, 3});
  auto j = graph_to_json(g);
  CHECK(j.at("modulus") == 8);
  CHECK(j.at("edges").size() == 24);
  auto back = graph_from_json(reparse(j));
  CHECK(graph_to_json(back) == j);
  CHECK(find_isomorphism(g, back, IsoMode::FullColours, {}).has_value());

  auto bare = build_link({0, 1, 3}, 7);
  CHECK(graph_to_json(graph_from_json(reparse(graph_to_json(bare)))) == graph_to_json(bare));

  auto mk = canonical_mk();
  auto jm = graph_to_json(mk);
  CHECK(jm.at("order") == 16);
  auto mk2 = graph_from_json(reparse(jm));
  CHECK(mk2.edge_count() == mk.edge_count());
  CHECK(find_isomorphism(mk, mk2, IsoMode::Plain, {}).has_value());

  j["edges"][0][1] = 2;
  CHECK(kind_of([&] { graph_from_json(j); }) == ErrorKind::Parse);
  CHECK(kind_of([] { graph_from_json(parse_json("{\"modulus\":8,\"sequence\":[0,1,3],\"sigma\":[0,0,1]}")); }) ==
        ErrorKind::BadBijection);
}

TEST_CASE("rings round-trip") {
  for (const Ring& r : rings_from_hexagons(build_link({0, 1, 3}, 8, Sigma{0, 1, 2}, Tau{2, 3}), 1)) {
    auto j = ring_to_json(r);
    CHECK(j.at("canonicalKey") == r.canonical_key);
    Ring back = ring_from_json(reparse(j));
    CHECK(back == r);
    CHECK(back.faces == r.faces);
  }
  auto j = ring_to_json(rings_from_hexagons(build_link({0, 1, 3}, 7, Sigma{0, 1, 2}, Tau{2, 3}), 1).front());
  j["canonicalKey"] = "0.0.0.0.0.0|1.1.1.1.1.1";
  CHECK(kind_of([&] { ring_from_json(j); }) == ErrorKind::Parse);
}

TEST_CASE("labellings and periodic solutions round-trip") {
  auto inst = puzzle_instance(heawood_spec());
  for (const auto& lab : solve_disk(inst, 2, 5)) {
    auto j = labelling_to_json(lab);
    CHECK(j.at("region").size() == 24);
    CHECK(labelling_from_json(reparse(j)) == lab);
  }
  CHECK(labelling_to_json({{FaceId{1, -2, Orientation::Down}, 2}}).dump() ==
        "{\"labels\":[2],\"region\":[[1,-2,\"down\"]]}");
  CHECK(kind_of([] { labelling_from_json(parse_json("{\"region\":[[0,0,\"left\"]],\"labels\":[1]}")); }) ==
        ErrorKind::Parse);

  auto sols = find_periodic(inst, 3);
  REQUIRE_FALSE(sols.empty());
  for (const auto& s : sols) {
    auto j = periodic_to_json(s);
    CHECK(j.at("period") == s.period());
    CHECK(periodic_from_json(reparse(j)) == s);
  }
  auto j = periodic_to_json(sols.front());
  j["basis"][0][0] = j["basis"][0][0].get<int>() + 3;
  CHECK(kind_of([&] { periodic_from_json(j); }) == ErrorKind::Parse);
}

TEST_CASE("specs and balls round-trip") {
  for (const auto& spec : {mk_spec(), heawood_spec()}) {
    CHECK(spec_from_json(reparse(spec_to_json(spec))) == spec);
    auto ball = build_ball(spec, 2, 2);
    auto j = ball_to_json(ball);
    CHECK(j.at("center") == ball.centre);
    CHECK(j.at("faces").size() == ball.face_count());
    auto back = ball_from_json(reparse(j));
    CHECK(back == ball);
    CHECK(verify_ball(back, spec).ok);
    CHECK(ball_to_json(back) == j);
  }
  auto j = ball_to_json(build_ball(mk_spec(), 1));
  j["vertices"][3]["layer"] = 2;
  CHECK(kind_of([&] { ball_from_json(j); }) == ErrorKind::Parse);
  j = ball_to_json(build_ball(mk_spec(), 1));
  j["faces"][0]["x"] = 500;
  CHECK(kind_of([&] { ball_from_json(j); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_json("{not json"); }) == ErrorKind::Parse);
}

TEST_CASE("link DOT export") {
  auto dot = link_to_dot(build_link({0, 1, 3}, 7, Sigma{0, 1, 2}, Tau{2, 3}));
  CHECK(dot.rfind("graph link {", 0) == 0);
  CHECK(dot.find("0 [colour=2];") != std::string::npos);
  CHECK(dot.find("0 -- 13 [label=0];") != std::string::npos);
}
