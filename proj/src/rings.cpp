#include "sidonplex/rings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sidonplex/error.hpp"

namespace sidonplex {

namespace {

std::string key_of(const Word6& faces, const Word6& types) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "." : "") << faces[i];
  os << '|';
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "." : "") << types[i];
  return os.str();
}

Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::array<std::pair<Word6, Word6>, 12> dihedral_orbit(const Word6& faces, const Word6& types) {
  std::array<std::pair<Word6, Word6>, 12> out;
  // Reversing the cycle v0 v5 v4 ... v1 sends vertex i to -i and edge i to -i-1.
  Word6 rf{}, rt{};
  for (std::size_t i = 0; i < 6; ++i) {
    rt[i] = types[(6 - i) % 6];
    rf[i] = faces[(11 - i) % 6];
  }
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t i = 0; i < 6; ++i) {
      out[r].first[i] = faces[(i + r) % 6];
      out[r].second[i] = types[(i + r) % 6];
      out[6 + r].first[i] = rf[(i + r) % 6];
      out[6 + r].second[i] = rt[(i + r) % 6];
    }
  }
  return out;
}

Ring canonical_ring(const Word6& faces, const Word6& types, int vertex_type) {
  for (int f : faces)
    if (f < 0) throw Error(ErrorKind::MalformedWord, "negative face label");
  for (std::size_t i = 0; i < 6; ++i) {
    if (types[i] != types[(i + 2) % 6] || types[i] == types[(i + 1) % 6])
      throw Error(ErrorKind::MalformedWord, "neighbour types must alternate between two values");
    if (vertex_type != 0 && types[i] == vertex_type)
      throw Error(ErrorKind::MalformedWord, "neighbour type equals the vertex type");
  }
  auto orbit = dihedral_orbit(faces, types);
  auto best = *std::min_element(orbit.begin(), orbit.end());
  Ring ring;
  ring.vertex_type = vertex_type;
  ring.faces = best.first;
  ring.neighbour_types = best.second;
  ring.canonical_key = key_of(best.first, best.second);
  return ring;
}

std::string untyped_key(const Ring& ring) {
  const Word6 zero{};
  auto orbit = dihedral_orbit(ring.faces, zero);
  Word6 best = orbit[0].first;
  for (const auto& [f, t] : orbit) best = std::min(best, f);
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "." : "") << best[i];
  return os.str();
}

std::vector<Ring> rings_from_collisions(const Sequence& seq, Int modulus, const Sigma& sigma, const Tau& tau,
                                        int vertex_type) {
  if (tau[0] == tau[1]) throw Error(ErrorKind::BadBijection, "tau is not injective");
  if (sigma.size() != seq.size()) throw Error(ErrorKind::BadBijection, "sigma size does not match the sequence");
  std::vector<bool> hit(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= sigma.size() || hit[static_cast<std::size_t>(s)])
      throw Error(ErrorKind::BadBijection, "sigma is not a bijection onto {0..n}");
    hit[static_cast<std::size_t>(s)] = true;
  }

  const Int order = 2 * modulus;
  std::set<Ring> rings;
  for (const CollisionPair& pair : alternating_collisions(seq, modulus)) {
    const auto& [a, b, c] = pair.first;
    const auto& [a2, b2, c2] = pair.second;
    // The hexagon based at the even vertex 0: two paths of length 3 meeting at the far vertex.
    std::array<Int, 6> verts{0,
                             mod(2 * a - 1, order),
                             mod(2 * a - 2 * b, order),
                             mod(2 * a - 2 * b + 2 * c - 1, order),
                             mod(2 * a2 - 2 * b2, order),
                             mod(2 * a2 - 1, order)};
    std::array<Int, 6> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("collision pair does not span a simple hexagon");

    auto label = [&](Int term) { return sigma[seq.index_of(term)]; };
    Word6 faces{label(a), label(b), label(c), label(c2), label(b2), label(a2)};
    Word6 types{tau[0], tau[1], tau[0], tau[1], tau[0], tau[1]};
    rings.insert(canonical_ring(faces, types, vertex_type));
  }
  return {rings.begin(), rings.end()};
}

std::vector<Ring> rings_from_hexagons(const LinkGraph& g, int vertex_type) {
  if (!g.has_vertex_colours() || !g.has_edge_colours())
    throw Error(ErrorKind::InvalidArgument, "rings_from_hexagons needs a vertex- and edge-coloured graph");
  std::set<Ring> rings;
  for_each_hexagon(g, [&](std::span<const int, 6> verts, std::span<const int, 6> edges) {
    Word6 faces{}, types{};
    for (std::size_t i = 0; i < 6; ++i) {
      faces[i] = g.edge_label(edges[i]);
      types[i] = g.vertex_colour(verts[i]);
    }
    rings.insert(canonical_ring(faces, types, vertex_type));
  });
  return {rings.begin(), rings.end()};
}

}  // namespace sidonplex
