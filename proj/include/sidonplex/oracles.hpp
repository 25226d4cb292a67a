#pragma once

// Brute-force reference computations for the tests and the acceptance suite.
// None of these call into the library paths they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace sidonplex::oracle {

using Int = std::int64_t;

inline Int mod(Int x, Int m) { return ((x % m) + m) % m; }

/// Compares every pair of index pairs (i<=j), (k<=l) directly.
inline bool sidon_mod(const std::vector<Int>& s, Int n) {
  const std::size_t len = s.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i; j < len; ++j)
      for (std::size_t k = 0; k < len; ++k)
        for (std::size_t l = k; l < len; ++l) {
          if (i == k && j == l) continue;
          Int a = s[i] + s[j], b = s[k] + s[l];
          if (n == 0 ? a == b : mod(a - b, n) == 0) return false;
        }
  return true;
}

/// Number of unordered pairs of distinct admissible triples with equal
/// alternating sum mod n, by direct double loop.
inline std::size_t collision_count(const std::vector<Int>& s, Int n) {
  std::vector<std::array<Int, 3>> t;
  for (Int a : s)
    for (Int b : s)
      for (Int c : s)
        if (a != b && b != c) t.push_back({a, b, c});
  std::size_t count = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (mod((t[i][0] - t[i][1] + t[i][2]) - (t[j][0] - t[j][1] + t[j][2]), n) == 0) ++count;
  return count;
}

/// Adjacency matrix of S_N(s) on 2n residues (edge multiplicities).
inline std::vector<std::vector<int>> adjacency(const std::vector<Int>& s, Int n) {
  const Int order = 2 * n;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order), 0));
  for (Int v = 0; v < order; v += 2)
    for (Int a : s) {
      Int w = mod(v + 2 * a - 1, order);
      ++adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      ++adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
    }
  return adj;
}

/// Counts 6-cycles in a simple graph by scanning all ordered 6-tuples of
/// distinct vertices; each cycle is seen 12 times.
inline std::size_t hexagon_count(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::size_t ordered = 0;
  std::array<std::size_t, 6> v{};
  auto used = [&](std::size_t depth, std::size_t x) {
    for (std::size_t i = 0; i < depth; ++i)
      if (v[i] == x) return true;
    return false;
  };
  for (v[0] = 0; v[0] < n; ++v[0])
    for (v[1] = 0; v[1] < n; ++v[1]) {
      if (!adj[v[0]][v[1]] || used(1, v[1])) continue;
      for (v[2] = 0; v[2] < n; ++v[2]) {
        if (!adj[v[1]][v[2]] || used(2, v[2])) continue;
        for (v[3] = 0; v[3] < n; ++v[3]) {
          if (!adj[v[2]][v[3]] || used(3, v[3])) continue;
          for (v[4] = 0; v[4] < n; ++v[4]) {
            if (!adj[v[3]][v[4]] || used(4, v[4])) continue;
            for (v[5] = 0; v[5] < n; ++v[5]) {
              if (!adj[v[4]][v[5]] || used(5, v[5])) continue;
              if (adj[v[5]][v[0]]) ++ordered;
            }
          }
        }
      }
    }
  return ordered / 12;
}

/// Shortest cycle by exhaustive search over closed non-backtracking walks of
/// increasing length (multigraph aware: a doubled edge is a 2-cycle).
inline int girth_bruteforce(const std::vector<std::vector<int>>& adj, int cap = 12) {
  const std::size_t n = adj.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w)
      if (adj[u][w] >= 2) return 2;
  // Simple cycles of length L exist iff some vertex has a simple closed path.
  for (int len = 3; len <= cap; ++len) {
    std::vector<std::size_t> path;
    std::vector<bool> on(n, false);
    bool found = false;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
      if (found) return;
      if (static_cast<int>(path.size()) == len) {
        if (adj[v][path[0]]) found = true;
        return;
      }
      for (std::size_t w = path[0] + 1; w < n; ++w)
        if (adj[v][w] && !on[w]) {
          on[w] = true;
          path.push_back(w);
          self(self, w);
          path.pop_back();
          on[w] = false;
        }
    };
    for (std::size_t s = 0; s < n && !found; ++s) {
      path = {s};
      on.assign(n, false);
      on[s] = true;
      dfs(dfs, s);
    }
    if (found) return len;
  }
  return -1;
}

/// Number of simple paths s-a-b-t, scanning every vertex pair (a, b).
inline int three_paths(const std::vector<std::vector<int>>& adj, std::size_t s, std::size_t t) {
  int count = 0;
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (std::size_t b = 0; b < adj.size(); ++b) {
      if (a == b || a == s || a == t || b == s || b == t) continue;
      if (adj[s][a] && adj[a][b] && adj[b][t]) ++count;
    }
  return count;
}

/// Random Sidon sequence with a_0 = 0, `len` terms, terms below `bound`.
inline std::vector<Int> random_sidon(std::mt19937_64& rng, std::size_t len, Int bound) {
  for (;;) {
    std::vector<Int> s{0};
    std::uniform_int_distribution<Int> pick(1, bound - 1);
    for (int tries = 0; s.size() < len && tries < 400; ++tries) {
      Int x = pick(rng);
      if (std::find(s.begin(), s.end(), x) != s.end()) continue;
      auto t = s;
      t.push_back(x);
      std::sort(t.begin(), t.end());
      if (sidon_mod(t, 0)) s = t;
    }
    if (s.size() == len) return s;
  }
}

}  // namespace sidonplex::oracle
