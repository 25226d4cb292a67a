#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sidonplex/cli.hpp"
#include "sidonplex/io.hpp"
#include "sidonplex/oracles.hpp"

using namespace sidonplex;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sidonplex");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "sidonplex_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("sidon commands") {
  auto r = run({"sidon", "verify", "0,2,7,8,11"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out == "true\n");
  r = run({"sidon", "verify", "0,1,2"});
  CHECK(r.code == kExitFalse);
  CHECK(r.out == "false\n");

  r = run({"sidon", "extend", "0", "--count", "10"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out == "0,1,3,7,12,20,30,44,65,80,96\n");

  r = run({"sidon", "verify-mod", "0,1,3", "--mod", "7"});
  CHECK(r.code == kExitTrue);
  r = run({"sidon", "verify-mod", "0,1,3", "--mod", "5"});
  CHECK(r.code == (oracle::sidon_mod({0, 1, 3}, 5) ? kExitTrue : kExitFalse));

  r = run({"sidon", "collisions", "--seq", "0,1,3", "--mod", "7", "--format", "json"});
  REQUIRE(r.code == kExitTrue);
  CHECK(parse_json(r.out).size() == oracle::collision_count({0, 1, 3}, 7));
  r = run({"sidon", "collisions", "0,1,3", "--mod", "7"});
  CHECK(lines(r.out).back() == "pairs: " + std::to_string(oracle::collision_count({0, 1, 3}, 7)));

  r = run({"sidon", "n0", "0,1,3", "--format", "json"});
  CHECK(r.code == kExitTrue);
  CHECK(parse_json(r.out).contains("n0"));
}

TEST_CASE("link and rings commands") {
  auto r = run({"rings", "xcheck", "0,1,3", "--mod", "7"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out == "agree: true, hexagons: 28, pairs: 12\n");

  r = run({"link", "build", "--seq", "0,1,3", "--mod", "8"});
  CHECK(r.out == "order 16, edges 24, girth 6\n");
  r = run({"link", "girth", "--seq", "0,1,3", "--mod", "8", "--format", "json"});
  CHECK(parse_json(r.out).at("girth") ==
        oracle::girth_bruteforce(oracle::adjacency({0, 1, 3}, 8)));

  r = run({"link", "iso", "--seq", "0,1,3", "--mod", "8", "--target", "mk"});
  CHECK(r.code == kExitTrue);
  r = run({"link", "iso", "--seq", "0,1,3", "--mod", "8", "--target", "heawood"});
  CHECK(r.code == kExitFalse);
  CHECK(r.out == "isomorphic: false\n");

  r = run({"link", "export", "--seq", "0,1,3", "--mod", "7", "--sigma", "0,1,2", "--tau", "2,3"});
  CHECK(r.out.rfind("graph link {", 0) == 0);

  auto graph_file = scratch("s8.json");
  r = run({"link", "build", "--seq", "0,1,3", "--mod", "8", "--format", "json", "--out", graph_file.string()});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.empty());
  CHECK(graph_to_json(graph_from_json(parse_json(read_file(graph_file)))) == parse_json(read_file(graph_file)));
  r = run({"link", "iso", graph_file.string(), "--seq", "0,1,3", "--mod", "8"});
  CHECK(r.code == kExitTrue);

  r = run({"link", "polarity", "--seq", "0,1,3", "--mod", "8", "--format", "json"});
  CHECK(lines(r.out).size() == 3);

  r = run({"rings", "enum", "0,1,3", "--mod", "7", "--format", "json"});
  const auto rings = rings_from_hexagons(build_link({0, 1, 3}, 7, Sigma{0, 1, 2}, Tau{2, 3}), 1);
  REQUIRE(parse_json(r.out).size() == rings.size());
  for (std::size_t i = 0; i < rings.size(); ++i) CHECK(ring_from_json(parse_json(r.out)[i]) == rings[i]);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"sidon"}).code == kExitInput);
  CHECK(run({"frobnicate", "now"}).code == kExitInput);
  CHECK(run({"sidon", "verify"}).code == kExitInput);
  CHECK(run({"sidon", "verify", "0,x,2"}).code == kExitInput);
  CHECK(run({"sidon", "verify-mod", "0,1,3"}).code == kExitInput);
  CHECK(run({"sidon", "verify", "0,1,3", "--format", "xml"}).code == kExitInput);
  CHECK(run({"sidon", "verify", "0,1,3", "--no-such-flag"}).code == kExitInput);
  CHECK(run({"complex", "build"}).code == kExitInput);
  CHECK(run({"complex", "build", "--preset", "octagon"}).code == kExitInput);
  CHECK(run({"puzzle", "check", scratch("missing.json").string(), "--preset", "mk"}).code == kExitInput);
  CHECK(run({"sidon", "verify", "0,1,3", "--config", scratch("missing.cfg").string()}).code == kExitInput);

  auto bad = scratch("bad.json");
  write_file(bad, "{not json");
  auto r = run({"puzzle", "check", bad.string(), "--preset", "heawood"});
  CHECK(r.code == kExitInput);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("config file with flag override") {
  auto cfg = scratch("run.cfg");
  write_file(cfg, "seq=0,1,3\nmod=7\n");
  auto r = run({"rings", "xcheck", "--config", cfg.string()});
  CHECK(r.code == kExitTrue);
  CHECK(r.out == "agree: true, hexagons: 28, pairs: 12\n");
  r = run({"link", "build", "--config", cfg.string(), "--mod", "8"});
  CHECK(r.out == "order 16, edges 24, girth 6\n");
}

TEST_CASE("puzzle commands round-trip through files") {
  auto r = run({"puzzle", "solve", "--preset", "heawood", "--radius", "2", "--max-solutions", "3", "--format", "json"});
  REQUIRE(r.code == kExitTrue);
  auto sols = lines(r.out);
  REQUIRE(sols.size() == 3);
  auto inst = puzzle_instance(heawood_spec());
  for (const auto& line : sols) CHECK(check_disk(inst, labelling_from_json(parse_json(line)), {}, 2));

  auto lab_file = scratch("disk.json");
  write_file(lab_file, sols.front());
  r = run({"puzzle", "check", lab_file.string(), "--preset", "heawood", "--radius", "2"});
  CHECK(r.code == kExitTrue);
  r = run({"puzzle", "check", lab_file.string(), "--preset", "heawood"});
  CHECK(r.code == kExitTrue);

  auto lab = labelling_from_json(parse_json(sols.front()));
  lab.begin()->second = (lab.begin()->second + 1) % 3;
  auto broken = scratch("broken.json");
  write_file(broken, labelling_to_json(lab).dump());
  r = run({"puzzle", "check", broken.string(), "--preset", "heawood", "--radius", "2"});
  CHECK(r.code == (check_disk(inst, lab, {}, 2) ? kExitTrue : kExitFalse));

  r = run({"puzzle", "periodic", "--preset", "heawood", "--max-period", "2", "--format", "json"});
  REQUIRE(r.code == kExitTrue);
  auto per_file = scratch("periodic.json");
  write_file(per_file, lines(r.out).front());
  r = run({"puzzle", "expand", per_file.string(), "--radius", "3", "--format", "json"});
  REQUIRE(r.code == kExitTrue);
  CHECK(check_disk(inst, labelling_from_json(parse_json(r.out)), {}, 3));

  r = run({"complex", "embed", lab_file.string(), "--preset", "heawood", "--radius", "3"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out == "seeds: 7, embedded: 7, each unique\n");
}

TEST_CASE("complex commands") {
  auto r = run({"complex", "build", "--preset", "mk", "--radius", "2"});
  CHECK(r.out == "vertices 161, edges 472, faces 312, radius 2\n");
  r = run({"complex", "build", "--preset", "heawood", "--radius", "2"});
  CHECK(r.out.rfind("vertices 113, ", 0) == 0);

  auto ball_file = scratch("ball.json");
  r = run({"complex", "build", "--preset", "heawood", "--radius", "2", "--format", "json", "--out",
           ball_file.string()});
  REQUIRE(r.code == kExitTrue);
  r = run({"complex", "verify", ball_file.string()});
  CHECK(r.code == kExitTrue);

  r = run({"complex", "odd", "--preset", "mk", "--format", "json"});
  CHECK(r.code == kExitTrue);
  CHECK(parse_json(r.out).at("faces") == 72);
  r = run({"complex", "signs", "--preset", "mk", "--radius", "1", "--signs-a", "+,+,+", "--signs-b", "-,+,-"});
  CHECK(r.code == kExitTrue);
  CHECK(run({"complex", "transitivity", "--preset", "heawood"}).code == kExitTrue);
  CHECK(run({"complex", "transitivity", "--preset", "mk"}).code == kExitFalse);
  CHECK(run({"complex", "unique-ext", "--preset", "mk", "--other", "mk"}).code == kExitTrue);
  CHECK(run({"complex", "unique-ext", "--preset", "heawood"}).code == kExitInput);
  CHECK(run({"complex", "signs", "--preset", "mk", "--signs-a", "+,?,+"}).code == kExitInput);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"complex", "build", "--preset", "mk", "--radius", "2", "--format", "json"},
      {"complex", "build", "--preset", "heawood", "--radius", "2", "--seed", "7", "--format", "dot"},
      {"puzzle", "solve", "--preset", "heawood", "--radius", "2", "--max-solutions", "20"},
      {"link", "polarity", "--seq", "0,1,3", "--mod", "8"},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
