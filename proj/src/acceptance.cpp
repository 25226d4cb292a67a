#include "sidonplex/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "sidonplex/complex.hpp"
#include "sidonplex/error.hpp"
#include "sidonplex/oracles.hpp"
#include "sidonplex/rings.hpp"

namespace sidonplex {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

std::vector<Int> terms_of(const Sequence& s) { return {s.terms().begin(), s.terms().end()}; }

Sigma shuffled_sigma(std::size_t size, std::mt19937_64& rng) {
  Sigma sigma(size);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

void sidon_basics(Check& c, std::mt19937_64&) {
  c.require(verify_sidon({0, 2, 7, 8, 11}), "0,2,7,8,11 is Sidon");
  for (Int n = 2; n <= 6; ++n) c.require(!verify_sidon_mod({0, 1, 3}, n), "0,1,3 fails mod " + std::to_string(n));
  c.require(verify_sidon_mod({0, 1, 3}, 7), "0,1,3 is Sidon mod 7");
  c.require(verify_sidon_mod({0, 1, 3, 7, 20}, 35), "0,1,3,7,20 is Sidon mod 35");
  c.require(verify_sidon_mod({0, 2, 7}, 8), "0,2,7 is Sidon mod 8");
  if (c.ok) c.detail << "9 exact values";
}

void mian_chowla(Check& c, std::mt19937_64&) {
  const Sequence want{0, 1, 3, 7, 12, 20, 30, 44, 65, 80, 96};
  const Sequence got = greedy_extend({0}, 10);
  c.require(got == want, "greedy_extend((0),10) = " + got.str());
  if (c.ok) c.detail << got.str();
}

void girth_equivalence(Check& c, std::mt19937_64& rng) {
  std::size_t sidon = 0, not_sidon = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 199);
    const std::size_t len = 2 + rng() % 6;
    std::vector<Int> terms;
    if (trial % 2 == 0) {
      terms = oracle::random_sidon(rng, len, std::max<Int>(n / 2, static_cast<Int>(len * len)));
    } else {
      std::set<Int> picked{0};
      while (picked.size() < len) picked.insert(static_cast<Int>(rng() % static_cast<std::uint64_t>(n + 8)));
      terms.assign(picked.begin(), picked.end());
    }
    Sequence s(terms);
    const bool is_sidon = verify_sidon_mod(s, n);
    const auto g = girth(build_link(s, n));
    const bool wide = !g || *g >= 6;
    c.require(is_sidon == wide, "discrepancy at " + s.str() + " mod " + std::to_string(n));
    c.require(is_sidon == oracle::sidon_mod(terms, n), "oracle disagrees at " + s.str() + " mod " + std::to_string(n));
    (is_sidon ? sidon : not_sidon) += 1;
  }
  c.require(sidon > 0 && not_sidon > 0, "both outcomes sampled");
  if (c.ok) c.detail << "240 cases (" << sidon << " Sidon, " << not_sidon << " not), 0 discrepancies";
}

void n_zero_threshold(Check& c, std::mt19937_64& rng) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto terms = oracle::random_sidon(rng, 3 + rng() % 4, 40);
    Sequence s(terms);
    const Int top = s.back();
    for (Int n = 2 * top + 1; n <= 2 * top + 50; ++n)
      c.require(verify_sidon_mod(s, n) && oracle::sidon_mod(terms, n), s.str() + " mod " + std::to_string(n));
    c.require(!verify_sidon_mod(s, 2 * top) && !oracle::sidon_mod(terms, 2 * top),
              s.str() + " must fail mod " + std::to_string(2 * top));
  }
  if (c.ok) c.detail << "50 sequences x 50 moduli";
}

void link_identification(Check& c, std::mt19937_64&) {
  const auto s8 = build_link({0, 1, 3}, 8), s7 = build_link({0, 1, 3}, 7);
  c.require(is_isomorphic(s8, canonical_mk(), false).has_value(), "S_8(0,1,3) ~ GP(8,3)");
  c.require(is_isomorphic(s7, canonical_heawood(), false).has_value(), "S_7(0,1,3) ~ Heawood");
  c.require(girth(s8) == 6 && girth(s7) == 6, "girth 6");
  c.require(two_arc_transitive(canonical_mk()), "GP(8,3) is 2-arc-transitive");
  if (c.ok) c.detail << "both isomorphisms found, girths 6, MK 2-arc-transitive";
}

void polarities(Check& c, std::mt19937_64& rng) {
  std::vector<LinkGraph> graphs{build_link({0, 1, 3}, 8, Sigma{0, 1, 2}, Tau{2, 3})};
  while (graphs.size() < 21) {
    Sequence s(oracle::random_sidon(rng, 2 + rng() % 4, 25));
    const Int n = n_double_zero(s) + static_cast<Int>(rng() % 10);
    if (!verify_sidon_mod(s, n)) continue;
    graphs.push_back(build_link(s, n, shuffled_sigma(s.size(), rng), rng() % 2 ? Tau{1, 3} : Tau{3, 1}));
  }
  std::size_t checked = 0;
  for (const auto& g : graphs)
    for (std::size_t p = 0; p < g.origin()->sequence.size(); ++p) {
      const auto a = polarity(g, p);
      const auto verified = as_automorphism(g, a.mapping);
      c.require(verified && verified->preserves_edge_labels && verified->swaps_parity, "polarity is a labelled automorphism");
      for (std::size_t v = 0; v < a.mapping.size(); ++v)
        c.require(a.mapping[static_cast<std::size_t>(a.mapping[v])] == static_cast<int>(v), "polarity is involutive");
      ++checked;
    }
  const auto g = graphs.front();
  auto tripod = [&](int centre) {
    SubTree t;
    for (const Incidence& inc : g.incident(centre)) t.edges.push_back({centre, inc.neighbour});
    return t;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const int c1 = static_cast<int>(rng() % 16), c2 = static_cast<int>(rng() % 16);
    std::vector<std::pair<int, int>> phi{{c1, c2}};
    for (const Incidence& inc : g.incident(c1)) {
      auto img = g.neighbour_by_label(c2, g.edge_label(inc.edge));
      c.require(img.has_value(), "tripod image exists");
      if (img) phi.push_back({inc.neighbour, *img});
    }
    if (!c.ok) break;
    const auto ext = extend_tripod(g, tripod(c1), tripod(c2), phi);
    c.require(ext.mapping[static_cast<std::size_t>(c1)] == c2, "extension restricts to the tripod map");
    const std::size_t count =
        enumerate_isomorphisms(g, g, IsoMode::EdgeLabels, phi, [](const std::vector<int>&) { return true; });
    c.require(count == 1, "exactly one extension");
  }
  if (c.ok) c.detail << checked << " polarities on 21 specs; 20 tripod pairs, 1 extension each";
}

void ring_cross(Check& c, std::mt19937_64& rng) {
  const Sigma id{0, 1, 2};
  const Tau tau{2, 3};
  for (auto [n, pairs, hexagons] : {std::tuple<Int, std::size_t, std::size_t>{7, 12, 28}, {8, 9, 24}}) {
    const auto g = build_link({0, 1, 3}, n, id, tau);
    c.require(rings_from_collisions({0, 1, 3}, n, id, tau, 1) == rings_from_hexagons(g, 1), "rings agree mod " + std::to_string(n));
    c.require(alternating_collisions({0, 1, 3}, n).size() == pairs && oracle::collision_count({0, 1, 3}, n) == pairs,
              "collision pairs mod " + std::to_string(n));
    c.require(count_hexagons(g) == hexagons && oracle::hexagon_count(oracle::adjacency({0, 1, 3}, n)) == hexagons,
              "hexagons mod " + std::to_string(n));
  }
  int checked = 0;
  while (checked < 20) {
    Sequence s(oracle::random_sidon(rng, 2 + rng() % 4, 20));
    const Int n = n_double_zero(s) + static_cast<Int>(rng() % 6);
    if (!verify_sidon_mod(s, n)) continue;
    const Sigma sigma = shuffled_sigma(s.size(), rng);
    const Tau t = rng() % 2 ? Tau{1, 3} : Tau{3, 1};
    const auto g = build_link(s, n, sigma, t);
    c.require(rings_from_collisions(s, n, sigma, t, 2) == rings_from_hexagons(g, 2), "rings agree on " + s.str());
    ++checked;
  }
  if (c.ok) c.detail << "mod 7: 12 pairs / 28 hexagons; mod 8: 9 pairs / 24 hexagons; 20 random specs agree";
}

void root_lemma(Check& c, std::mt19937_64&) {
  const auto spec = mk_spec();
  std::size_t roots = 0, rank2 = 0;
  for (int k = 1; k <= 3; ++k) {
    const auto g = spec_link(spec, k);
    const auto adj = oracle::adjacency(terms_of(spec.sequences[static_cast<std::size_t>(k - 1)]),
                                       spec.moduli[static_cast<std::size_t>(k - 1)]);
    const int special = spec.sigmas[static_cast<std::size_t>(k - 1)][0];
    for (int x = 0; x < g.order(); ++x)
      for (const auto& i1 : g.incident(x))
        for (const auto& i2 : g.incident(i1.neighbour))
          for (const auto& i3 : g.incident(i2.neighbour)) {
            const int b = g.edge_label(i1.edge), a = g.edge_label(i2.edge);
            if (a == b || g.edge_label(i3.edge) != b) continue;
            const std::array<int, 4> path{x, i1.neighbour, i2.neighbour, i3.neighbour};
            const bool r2 = root_is_rank2(g, path);
            const bool brute = oracle::three_paths(adj, static_cast<std::size_t>(path[0]), static_cast<std::size_t>(path[3])) == 3;
            c.require(r2 == brute, "rank agrees with path count");
            c.require(r2 == (a == special), "rank 2 iff middle label is sigma_k(0)");
            ++roots;
            rank2 += r2;
          }
  }
  c.require(roots > 0, "roots exist");
  if (c.ok) c.detail << roots << " roots over 3 links, " << rank2 << " of rank 2";
}

void oddness(Check& c, std::mt19937_64&) {
  std::size_t faces = 0, choices = 0;
  for (int colour = 1; colour <= 3; ++colour) {
    const auto ball = build_ball(mk_spec(), 2, colour);
    std::size_t inside = 0;
    for (std::size_t f = 0; f < ball.face_count(); ++f) {
      std::size_t outer = 0;
      for (int v : ball.face(static_cast<int>(f)).vertices) outer += ball.vertex(v).layer == ball.radius;
      inside += outer <= 1;
    }
    const auto rep = check_oddness(ball);
    c.require(rep.faces_checked == inside, "every fully interior face checked");
    c.require(rep.all_odd(), "all faces odd");
    faces += rep.faces_checked;
    choices += rep.choices_checked;
  }
  if (c.ok) c.detail << faces << " faces over 3 centre colours, " << choices << " adjacent-face choices, all odd";
}

void sign_independence(Check& c, std::mt19937_64&) {
  std::vector<std::array<int, 3>> all;
  for (int s = 0; s < 8; ++s) all.push_back({s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1});
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      c.require(sign_variants_isomorphic(mk_spec(), all[i], all[j], 2), "sign vectors " + std::to_string(i) + "," + std::to_string(j));
  if (c.ok) c.detail << "36 unordered pairs of 8 sign vectors isomorphic at radius 2";
}

void embedding(Check& c, std::mt19937_64&) {
  const auto spec = heawood_spec();
  const auto ball = build_ball(spec, 3);
  const auto sols = solve_disk(puzzle_instance(spec), 2, 100000);
  c.require(!sols.empty(), "the radius-2 instance has solutions");
  std::size_t embeddings = 0;
  for (const auto& lab : sols) {
    const auto seeds = star_seeds(ball, lab, ball.centre);
    c.require(!seeds.empty(), "some seed exists");
    for (const auto& seed : seeds) {
      const auto emb = embed_disk(ball, lab, 2, seed);
      std::set<int> images;
      for (const auto& [p, v] : emb.vertices) images.insert(v);
      c.require(images.size() == emb.vertices.size(), "embedding injective");
      for (const auto& [f, g] : emb.faces) c.require(ball.face(g).label == lab.at(f), "labels preserved");
      ++embeddings;
    }
    if (!c.ok) break;
  }
  if (c.ok) c.detail << sols.size() << " solutions, " << embeddings << " seeded embeddings, each unique";
}

void construction_uniqueness(Check& c, std::mt19937_64& rng) {
  for (const auto& spec : {heawood_spec(), mk_spec()}) {
    const std::uint64_t s1 = rng(), s2 = rng() | 1;
    const auto a = build_ball(spec, 2, 1, s1), b = build_ball(spec, 2, 1, s2);
    c.require(verify_ball(a, spec).ok && verify_ball(b, spec).ok, "both balls verify");
    c.require(!(a == b), "completion orders differ");
    c.require(centred_isomorphism(a, b, {true, true}).has_value(), "coloured isomorphism");
  }
  if (c.ok) c.detail << "Heawood and MK B2 from two completion orders are coloured-isomorphic";
}

void transitivity(Check& c, std::mt19937_64&) {
  c.require(vertex_transitivity_check(modular_spec({0, 1, 3}), 2), "(0,1,3;7,7,7) passes at radius 2");
  c.require(!vertex_transitivity_check(uniform_spec({0, 1, 3}, {7, 7, 8}), 1), "(0,1,3;7,7,8) fails at radius 1");
  if (c.ok) c.detail << "7,7,7 transitive at radius 2; 7,7,8 not at radius 1";
}

void extension_uniqueness(Check& c, std::mt19937_64&) {
  const auto spec = mk_spec();
  require_odd_mk(spec);
  const auto a = build_ball(spec, 2);
  const auto maps = one_ball_isomorphisms(a, a);
  std::vector<int> identity(maps.empty() ? 0 : maps.front().size());
  std::iota(identity.begin(), identity.end(), 0);
  c.require(maps.size() >= 5, "at least 5 one-ball isomorphisms");
  c.require(std::find(maps.begin(), maps.end(), identity) != maps.end(), "identity included");
  for (const auto& m : maps) c.require(count_extensions(a, a, m, 2) == 1, "exactly one extension");
  if (c.ok) c.detail << maps.size() << " one-ball isomorphisms, each with exactly 1 radius-2 extension";
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*run)(Check&, std::mt19937_64&);
};

constexpr Criterion kCriteria[] = {
    {1, "Sidon basics", 1, sidon_basics},
    {2, "Mian-Chowla prefix", 1, mian_chowla},
    {3, "Sidon mod N iff girth >= 6", 10, girth_equivalence},
    {4, "N0 threshold", 10, n_zero_threshold},
    {5, "link identification", 30, link_identification},
    {6, "polarities and tripod extension", 30, polarities},
    {7, "ring cross-enumeration", 30, ring_cross},
    {8, "root-rank lemma", 10, root_lemma},
    {9, "oddness", 60, oddness},
    {10, "sign independence", 120, sign_independence},
    {11, "puzzle embedding", 120, embedding},
    {12, "construction uniqueness", 60, construction_uniqueness},
    {13, "vertex transitivity", 60, transitivity},
    {14, "extension uniqueness", 120, extension_uniqueness},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (const Criterion& crit : kCriteria) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(crit.id));
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(check, rng);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail.str("");
      check.detail << "exception: " << e.what();
    }
    CriterionResult r;
    r.id = crit.id;
    r.name = crit.name;
    r.ok = check.ok;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.limit_seconds = crit.limit;
    r.detail = check.detail.str();
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool with_time) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(32) << r.name
     << std::right << "  (";
  if (with_time) os << std::fixed << std::setprecision(3) << r.seconds << " s / ";
  os << "limit " << std::fixed << std::setprecision(0) << r.limit_seconds << " s)  " << r.detail;
  if (r.ok && !r.passed()) os << " [time limit exceeded]";
  return os.str();
}

}  // namespace sidonplex
