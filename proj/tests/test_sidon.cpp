#include <map>
#include <random>

#include "doctest.h"
#include "sidonplex/oracles.hpp"
#include "sidonplex/error.hpp"
#include "sidonplex/sidon.hpp"

using namespace sidonplex;

namespace {

std::vector<Int> to_vec(const Sequence& s) { return {s.terms().begin(), s.terms().end()}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("sequence invariants") {
  CHECK_THROWS_AS(Sequence(std::vector<Int>{}), Error);
  CHECK_THROWS_AS((Sequence{0, 0}), Error);
  CHECK_THROWS_AS((Sequence{3, 1}), Error);
  CHECK_THROWS_AS((Sequence{-1, 2}), Error);
  CHECK(parse_sequence(" 0, 2 ,7").str() == "0,2,7");
  CHECK(kind_of([] { parse_sequence("0,,2"); }) == ErrorKind::Parse);
  CHECK(Sequence{0, 1, 3}.index_of(3) == 2);
  CHECK(kind_of([] { (void)Sequence{0, 1, 3}.index_of(2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("verify_sidon") {
  CHECK(verify_sidon({0, 2, 7, 8, 11}));
  CHECK(verify_sidon({0}));
  CHECK_FALSE(verify_sidon({0, 1, 2}));
}

TEST_CASE("verify_sidon_mod") {
  CHECK(verify_sidon_mod({0, 2, 7}, 8));
  CHECK_FALSE(verify_sidon_mod({0, 1, 3}, 6));
  CHECK(verify_sidon_mod({0, 1, 3, 7, 20}, 35));
  CHECK(oracle::sidon_mod({0, 1, 3}, 7));
  CHECK(verify_sidon_mod({0, 1, 3}, 7));
  for (Int n = 2; n <= 6; ++n) CHECK_FALSE(verify_sidon_mod({0, 1, 3}, n));
  CHECK(kind_of([] { verify_sidon_mod({0, 1}, 1); }) == ErrorKind::ModulusTooSmall);
}

TEST_CASE("verify_sidon_mod agrees with the pair-of-pairs oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t len = 1 + rng() % 6;
    std::vector<Int> terms;
    while (terms.size() < len) {
      Int x = static_cast<Int>(rng() % 40);
      if (std::find(terms.begin(), terms.end(), x) == terms.end()) terms.push_back(x);
    }
    std::sort(terms.begin(), terms.end());
    Int n = 2 + static_cast<Int>(rng() % 80);
    Sequence s(terms);
    CHECK(verify_sidon_mod(s, n) == oracle::sidon_mod(terms, n));
    CHECK(verify_sidon(s) == oracle::sidon_mod(terms, 0));
  }
}

TEST_CASE("greedy_extend reproduces Mian-Chowla") {
  CHECK(to_vec(greedy_extend({0}, 10)) == std::vector<Int>{0, 1, 3, 7, 12, 20, 30, 44, 65, 80, 96});
  CHECK(greedy_extend({0, 1, 3}, 0) == Sequence{0, 1, 3});
  CHECK(kind_of([] { greedy_extend({0, 1, 2}, 1); }) == ErrorKind::InputNotSidon);

  // Exhaustive scan above 11 for the next admissible term.
  std::vector<Int> base{0, 2, 7, 8, 11};
  Int next = 12;
  for (;; ++next) {
    auto t = base;
    t.push_back(next);
    if (oracle::sidon_mod(t, 0)) break;
  }
  CHECK(next == 21);
  CHECK(greedy_extend({0, 2, 7, 8, 11}, 1).back() == next);
  CHECK(verify_sidon(greedy_extend({0, 2, 7}, 12)));
}

TEST_CASE("n_zero and n_double_zero") {
  CHECK(n_zero({0, 1, 3}) == 7);
  CHECK(n_zero({0, 2, 7}) == 15);
  CHECK(n_zero({0, 1}) == 3);
  CHECK(n_double_zero({0, 1, 3}) == 7);
  CHECK(n_double_zero({0, 1}) == 3);

  // Exhaustive oracle for (0,2,7): least modulus with distinct pair sums.
  Int least = 2;
  while (!oracle::sidon_mod({0, 2, 7}, least)) ++least;
  CHECK(least == 8);
  CHECK(n_double_zero({0, 2, 7}) == least);

  CHECK(kind_of([] { n_zero({0, 1, 2}); }) == ErrorKind::InputNotSidon);
  CHECK(kind_of([] { n_double_zero({0, 1, 2}); }) == ErrorKind::InputNotSidon);
}

TEST_CASE("n_zero threshold property on random Sidon sequences") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto terms = oracle::random_sidon(rng, 2 + rng() % 5, 60);
    Sequence s(terms);
    Int n0 = n_zero(s);
    CHECK(n0 == 2 * s.back() + 1);
    CHECK_FALSE(verify_sidon_mod(s, 2 * s.back()));
    for (Int n = n0; n <= 2 * s.back() + 50; ++n) CHECK(verify_sidon_mod(s, n));
    CHECK(n_double_zero(s) <= n0);
    CHECK(verify_sidon_mod(s, n_double_zero(s)));
  }
}

TEST_CASE("alternating_collisions") {
  auto mod8 = alternating_collisions({0, 1, 3}, 8);
  CHECK(mod8.size() == 9);
  CHECK(mod8.size() == oracle::collision_count({0, 1, 3}, 8));
  bool found = false;
  for (const auto& p : mod8)
    if (p.residue == 7) {
      CHECK(p.first == Triple{0, 1, 0});
      CHECK(p.second == Triple{1, 3, 1});
      found = true;
    }
  CHECK(found);

  auto mod7 = alternating_collisions({0, 1, 3}, 7);
  CHECK(mod7.size() == 12);
  CHECK(mod7.size() == oracle::collision_count({0, 1, 3}, 7));
  std::map<Int, int> per_residue;
  for (const auto& p : mod7) ++per_residue[p.residue];
  // Three triples per class give three pairs.
  CHECK(per_residue == std::map<Int, int>{{2, 3}, {4, 3}, {5, 3}, {6, 3}});

  // Only (0,1,0) and (1,0,1) are admissible and both sum to 2 mod 3.
  CHECK(admissible_triples({0, 1}).size() == 2);
  CHECK(alternating_collisions({0, 1}, 3).size() == oracle::collision_count({0, 1}, 3));
  CHECK(alternating_collisions({0, 1}, 3).size() == 1);

  CHECK(kind_of([] { alternating_collisions({0, 1, 3}, 6); }) == ErrorKind::NotSidonModN);
}

TEST_CASE("collision invariants: ordering, end terms, reversal symmetry") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto terms = oracle::random_sidon(rng, 3 + rng() % 3, 30);
    Sequence s(terms);
    Int n = n_double_zero(s) + static_cast<Int>(rng() % 20);
    if (!verify_sidon_mod(s, n)) continue;
    auto pairs = alternating_collisions(s, n);
    CHECK(pairs.size() == oracle::collision_count(terms, n));
    std::set<std::pair<Triple, Triple>> set;
    for (const auto& p : pairs) {
      CHECK(p.first < p.second);
      CHECK(p.first[0] != p.second[0]);
      CHECK(p.first[2] != p.second[2]);
      set.insert({p.first, p.second});
    }
    for (const auto& p : pairs) {
      Triple r1{p.first[2], p.first[1], p.first[0]};
      Triple r2{p.second[2], p.second[1], p.second[0]};
      if (r1 == r2) continue;
      CHECK(set.contains({std::min(r1, r2), std::max(r1, r2)}));
    }
  }
}
