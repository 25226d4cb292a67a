#include "sidonplex/puzzle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sidonplex/error.hpp"

namespace sidonplex {

namespace {

int floor_mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

int floor_div(int x, int m) { return (x - floor_mod(x, m)) / m; }

}  // namespace

int vertex_type(Point p) { return floor_mod(p.x + 2 * p.y, 3) + 1; }

std::array<Point, 3> corners(const FaceId& f) {
  if (f.orientation == Orientation::Up) return {Point{f.x, f.y}, Point{f.x + 1, f.y}, Point{f.x, f.y + 1}};
  return {Point{f.x + 1, f.y}, Point{f.x, f.y + 1}, Point{f.x + 1, f.y + 1}};
}

FaceId face_from_corners(std::array<Point, 3> pts) {
  std::sort(pts.begin(), pts.end());
  // Sorted by x then y: up gives (x,y),(x,y+1),(x+1,y); down gives (x,y+1),(x+1,y),(x+1,y+1).
  const Point a = pts[0], b = pts[1], c = pts[2];
  if (b == Point{a.x, a.y + 1} && c == Point{a.x + 1, a.y}) return {a.x, a.y, Orientation::Up};
  if (b == Point{a.x + 1, a.y - 1} && c == Point{a.x + 1, a.y}) return {a.x, a.y - 1, Orientation::Down};
  throw Error(ErrorKind::InvalidArgument, "points do not bound a unit triangle");
}

std::array<Point, 6> star_neighbours(Point p) {
  return {Point{p.x + 1, p.y}, Point{p.x, p.y + 1},     Point{p.x - 1, p.y + 1},
          Point{p.x - 1, p.y}, Point{p.x, p.y - 1}, Point{p.x + 1, p.y - 1}};
}

std::array<FaceId, 6> star_faces(Point p) {
  using O = Orientation;
  return {FaceId{p.x, p.y, O::Up},         FaceId{p.x - 1, p.y, O::Down}, FaceId{p.x - 1, p.y, O::Up},
          FaceId{p.x - 1, p.y - 1, O::Down}, FaceId{p.x, p.y - 1, O::Up},   FaceId{p.x, p.y - 1, O::Down}};
}

int hex_distance(Point a, Point b) {
  const int dx = a.x - b.x, dy = a.y - b.y;
  return (std::abs(dx) + std::abs(dy) + std::abs(dx + dy)) / 2;
}

namespace {

/// Vertices within `radius` of the centre ordered by distance, then angle.
std::vector<Point> spiral(Point centre, int radius) {
  std::vector<std::pair<std::pair<int, double>, Point>> keyed;
  for (int dx = -radius; dx <= radius; ++dx)
    for (int dy = -radius; dy <= radius; ++dy) {
      Point p{centre.x + dx, centre.y + dy};
      int d = hex_distance(p, centre);
      if (d > radius) continue;
      double angle = std::atan2(dy * std::numbers::sqrt3 / 2.0, dx + dy / 2.0);
      if (angle < 0) angle += 2 * std::numbers::pi;
      keyed.push_back({{d, d == 0 ? 0.0 : angle}, p});
    }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Point> out;
  out.reserve(keyed.size());
  for (const auto& [k, p] : keyed) out.push_back(p);
  return out;
}

/// Lattice types around a vertex of the given type, in star order.
Word6 neighbour_type_pattern(int type) {
  Point rep{type - 1, 0};
  Word6 t{};
  auto nb = star_neighbours(rep);
  for (std::size_t i = 0; i < 6; ++i) t[i] = vertex_type(nb[i]);
  return t;
}

/// Face words (in star order) that a vertex of each type may carry.
std::array<std::vector<Word6>, 3> oriented_words(const PuzzleInstance& inst) {
  std::array<std::vector<Word6>, 3> out;
  for (int type = 1; type <= 3; ++type) {
    const Word6 pattern = neighbour_type_pattern(type);
    std::set<Word6> words;
    auto it = inst.ring_sets.find(type);
    if (it != inst.ring_sets.end())
      for (const Ring& r : it->second)
        for (const auto& [f, t] : dihedral_orbit(r.faces, r.neighbour_types))
          if (t == pattern) words.insert(f);
    out[static_cast<std::size_t>(type - 1)] = {words.begin(), words.end()};
  }
  return out;
}

/// Backtracking over variables with 6-ary "star word" constraints.
struct StarCsp {
  int labels = 0;
  std::vector<int> order;                                   // variable order
  std::vector<int> fixed;                                   // -1 when free
  std::vector<std::array<int, 6>> scopes;                   // constraint -> variables
  std::vector<const std::vector<Word6>*> allowed;           // constraint -> words
  std::vector<std::vector<int>> touching;                   // variable -> constraints

  void add_constraint(const std::array<int, 6>& vars, const std::vector<Word6>* words) {
    int id = static_cast<int>(scopes.size());
    scopes.push_back(vars);
    allowed.push_back(words);
    for (int v : vars) {
      auto& t = touching[static_cast<std::size_t>(v)];
      if (t.empty() || t.back() != id) t.push_back(id);
    }
  }

  bool consistent(int c, const std::vector<int>& value) const {
    const auto& vars = scopes[static_cast<std::size_t>(c)];
    for (const Word6& w : *allowed[static_cast<std::size_t>(c)]) {
      bool ok = true;
      for (std::size_t i = 0; i < 6 && ok; ++i) {
        int x = value[static_cast<std::size_t>(vars[i])];
        ok = x < 0 || x == w[i];
      }
      if (ok) return true;
    }
    return false;
  }

  /// Calls `emit` on every total assignment; `emit` returns false to stop.
  void solve(const std::function<bool(const std::vector<int>&)>& emit) const {
    std::vector<int> value(fixed.size(), -1);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (depth == order.size()) {
        stop = !emit(value);
        return;
      }
      const int var = order[depth];
      const auto uvar = static_cast<std::size_t>(var);
      const int lo = fixed[uvar] >= 0 ? fixed[uvar] : 0;
      const int hi = fixed[uvar] >= 0 ? fixed[uvar] : labels - 1;
      for (int x = lo; x <= hi && !stop; ++x) {
        value[uvar] = x;
        bool ok = true;
        for (int c : touching[uvar])
          if (!consistent(c, value)) {
            ok = false;
            break;
          }
        if (ok) self(self, depth + 1);
      }
      value[uvar] = -1;
    };
    rec(rec, 0);
  }
};

}  // namespace

std::vector<FaceId> disk_faces(Point centre, int radius) {
  const int r = std::max(radius, 1);
  std::vector<FaceId> out;
  std::set<FaceId> seen;
  for (Point v : spiral(centre, r))
    for (const FaceId& f : star_faces(v)) {
      if (seen.contains(f)) continue;
      bool inside = true;
      for (Point c : corners(f)) inside = inside && hex_distance(c, centre) <= r;
      if (!inside) continue;
      seen.insert(f);
      out.push_back(f);
    }
  return out;
}

std::vector<Point> disk_interior(Point centre, int radius) { return spiral(centre, std::max(radius, 1) - 1); }

void PuzzleInstance::validate() const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "label bound must be nonnegative");
  if (ring_sets.size() != 3 || !ring_sets.contains(1) || !ring_sets.contains(2) || !ring_sets.contains(3))
    throw Error(ErrorKind::InvalidArgument, "ring sets must be keyed by vertex types 1, 2, 3");
  for (const auto& [type, rings] : ring_sets)
    for (const Ring& r : rings) {
      if (r.vertex_type != type) throw Error(ErrorKind::InvalidArgument, "ring filed under the wrong vertex type");
      for (int f : r.faces)
        if (f < 0 || f > n) throw Error(ErrorKind::InvalidArgument, "ring label out of range");
      Ring again = canonical_ring(r.faces, r.neighbour_types, type);
      if (again.canonical_key != r.canonical_key)
        throw Error(ErrorKind::InvalidArgument, "ring is not in canonical position");
    }
}

PuzzleInstance puzzle_instance(const ComplexSpec& spec) {
  require_valid(spec);
  PuzzleInstance inst;
  inst.n = static_cast<int>(spec.label_count()) - 1;
  for (int k = 1; k <= 3; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    inst.ring_sets[k] = rings_from_collisions(spec.sequences[i], spec.moduli[i], spec.sigmas[i], spec.taus[i], k);
  }
  return inst;
}

bool check_vertex(const PuzzleInstance& inst, const FaceLabelling& lab, Point v) {
  Word6 faces{}, types{};
  auto fs = star_faces(v);
  auto nb = star_neighbours(v);
  for (std::size_t i = 0; i < 6; ++i) {
    auto it = lab.find(fs[i]);
    if (it == lab.end()) {
      std::ostringstream os;
      os << "face around (" << v.x << ',' << v.y << ") is unlabelled";
      throw Error(ErrorKind::IncompleteStar, os.str());
    }
    faces[i] = it->second;
    types[i] = vertex_type(nb[i]);
  }
  const int type = vertex_type(v);
  auto it = inst.ring_sets.find(type);
  if (it == inst.ring_sets.end()) return false;
  for (int f : faces)
    if (f < 0) return false;
  const Ring ring = canonical_ring(faces, types, type);
  return std::binary_search(it->second.begin(), it->second.end(), ring);
}

bool check_disk(const PuzzleInstance& inst, const FaceLabelling& lab, Point centre, int radius) {
  for (const FaceId& f : disk_faces(centre, radius))
    if (!lab.contains(f)) throw Error(ErrorKind::Coverage, "labelling does not cover the disk");
  for (Point v : disk_interior(centre, radius))
    if (!check_vertex(inst, lab, v)) return false;
  return true;
}

std::vector<FaceLabelling> solve_disk(const PuzzleInstance& inst, int radius, std::size_t max_solutions,
                                      const std::optional<FaceLabelling>& seed, Point centre) {
  if (radius < 1) throw Error(ErrorKind::InvalidArgument, "solve_disk needs radius >= 1");
  const auto faces = disk_faces(centre, radius);
  std::map<FaceId, int> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);

  const auto words = oriented_words(inst);
  StarCsp csp;
  csp.labels = inst.n + 1;
  csp.order.resize(faces.size());
  std::iota(csp.order.begin(), csp.order.end(), 0);
  csp.fixed.assign(faces.size(), -1);
  csp.touching.resize(faces.size());
  if (seed) {
    for (const auto& [f, label] : *seed) {
      auto it = index.find(f);
      if (it == index.end()) throw Error(ErrorKind::Coverage, "seed labels a face outside the disk");
      if (label < 0 || label > inst.n) throw Error(ErrorKind::InvalidArgument, "seed label out of range");
      csp.fixed[static_cast<std::size_t>(it->second)] = label;
    }
  }
  for (Point v : disk_interior(centre, radius)) {
    std::array<int, 6> vars{};
    auto fs = star_faces(v);
    for (std::size_t i = 0; i < 6; ++i) vars[i] = index.at(fs[i]);
    csp.add_constraint(vars, &words[static_cast<std::size_t>(vertex_type(v) - 1)]);
  }

  std::vector<FaceLabelling> out;
  if (max_solutions == 0) return out;
  csp.solve([&](const std::vector<int>& value) {
    FaceLabelling lab;
    for (std::size_t i = 0; i < faces.size(); ++i) lab.emplace(faces[i], value[i]);
    out.push_back(std::move(lab));
    return out.size() < max_solutions;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Periodic solutions

namespace {

struct Lattice {
  int a = 1, b = 0, c = 1;  // basis (a,0), (b,c)

  Point reduce(Point p) const {
    const int k = floor_div(p.y, c);
    return {floor_mod(p.x - k * b, a), p.y - k * c};
  }
  FaceId reduce(const FaceId& f) const {
    Point p = reduce(Point{f.x, f.y});
    return {p.x, p.y, f.orientation};
  }
  std::vector<FaceId> fundamental_faces() const {
    std::vector<FaceId> out;
    for (int y = 0; y < c; ++y)
      for (int x = 0; x < a; ++x) {
        out.push_back({x, y, Orientation::Up});
        out.push_back({x, y, Orientation::Down});
      }
    std::sort(out.begin(), out.end());
    return out;
  }
  /// Type-preserving translations modulo the lattice.
  std::vector<Point> type_translations() const {
    std::vector<Point> out;
    for (int y = 0; y < c; ++y)
      for (int x = 0; x < a; ++x)
        if (floor_mod(x + 2 * y, 3) == 0) out.push_back({x, y});
    return out;
  }
};

Lattice hermite(Point u1, Point u2) {
  long det = static_cast<long>(u1.x) * u2.y - static_cast<long>(u1.y) * u2.x;
  if (det == 0) throw Error(ErrorKind::InvalidArgument, "period vectors are linearly dependent");
  // Extended gcd on the y components.
  int g = std::gcd(u1.y, u2.y);
  Lattice lat;
  lat.c = g;
  // Find p, q with p*u1.y + q*u2.y = g.
  int old_r = u1.y, r = u2.y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    int qq = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - qq * r};
    std::tie(old_s, s) = std::pair{s, old_s - qq * s};
    std::tie(old_t, t) = std::pair{t, old_t - qq * t};
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  int wx = old_s * u1.x + old_t * u2.x;
  lat.a = static_cast<int>(std::abs(det) / g);
  lat.b = floor_mod(wx, lat.a);
  return lat;
}

std::array<Point, 2> gauss_reduce(Point u, Point v) {
  auto norm = [](Point p) { return static_cast<long>(p.x) * p.x + static_cast<long>(p.x) * p.y + static_cast<long>(p.y) * p.y; };
  auto dot2 = [](Point p, Point q) {  // twice the Euclidean inner product
    return 2L * p.x * q.x + static_cast<long>(p.x) * q.y + static_cast<long>(p.y) * q.x + 2L * p.y * q.y;
  };
  if (norm(u) > norm(v)) std::swap(u, v);
  for (;;) {
    // v -= round(<u,v>/<u,u>) u
    long num = dot2(u, v), den = 2 * norm(u);
    long m = static_cast<long>(std::floor(static_cast<double>(num) / static_cast<double>(den) + 0.5));
    v = {static_cast<int>(v.x - m * u.x), static_cast<int>(v.y - m * u.y)};
    if (norm(v) >= norm(u)) break;
    std::swap(u, v);
  }
  return {u, v};
}

PeriodicSolution normalized(const Lattice& lat, const std::function<int(const FaceId&)>& label) {
  const auto faces = lat.fundamental_faces();
  PeriodicSolution best;
  bool have = false;
  for (Point t : lat.type_translations()) {
    PeriodicSolution s;
    s.basis = {Point{lat.a, 0}, Point{lat.b, lat.c}};
    for (const FaceId& f : faces) s.fundamental.emplace(f, label(FaceId{f.x - t.x, f.y - t.y, f.orientation}));
    if (!have || s.fundamental < best.fundamental) {
      best = std::move(s);
      have = true;
    }
  }
  return best;
}

Lattice lattice_of(const PeriodicSolution& sol) { return {sol.basis[0].x, sol.basis[1].x, sol.basis[1].y}; }

Point rotate(Point p) { return {-p.x - p.y, p.x}; }
Point unrotate(Point p) { return {p.y, -p.x - p.y}; }
Point reflect(Point p) { return {p.x + p.y, -p.y}; }

bool primitive(const Lattice& lat, const std::vector<int>& value, const std::vector<FaceId>& faces,
               const std::map<FaceId, int>& index) {
  for (Point t : lat.type_translations()) {
    if (t == Point{0, 0}) continue;
    bool invariant = true;
    for (std::size_t i = 0; i < faces.size() && invariant; ++i) {
      FaceId moved = lat.reduce(FaceId{faces[i].x + t.x, faces[i].y + t.y, faces[i].orientation});
      invariant = value[static_cast<std::size_t>(index.at(moved))] == value[i];
    }
    if (invariant) return false;
  }
  return true;
}

}  // namespace

int PeriodicSolution::label_at(const FaceId& f) const { return fundamental.at(lattice_of(*this).reduce(f)); }

std::array<Point, 2> PeriodicSolution::reduced_basis() const { return gauss_reduce(basis[0], basis[1]); }

int PeriodicSolution::period() const {
  auto r = reduced_basis();
  return std::max(hex_distance(r[0], {}), hex_distance(r[1], {}));
}

PeriodicSolution make_periodic(Point u1, Point u2, const std::function<int(const FaceId&)>& label) {
  Lattice lat = hermite(u1, u2);
  if (lat.a % 3 != 0 || floor_mod(lat.b + 2 * lat.c, 3) != 0)
    throw Error(ErrorKind::InvalidArgument, "period vectors do not preserve vertex types");
  return normalized(lat, label);
}

PeriodicSolution translate(const PeriodicSolution& sol, Point t) {
  if (floor_mod(t.x + 2 * t.y, 3) != 0) throw Error(ErrorKind::InvalidArgument, "translation moves vertex types");
  return make_periodic(sol.basis[0], sol.basis[1],
                       [&](const FaceId& f) { return sol.label_at({f.x - t.x, f.y - t.y, f.orientation}); });
}

PeriodicSolution transform(const PeriodicSolution& sol, int rotations, bool reflect_after) {
  rotations = floor_mod(rotations, 3);
  auto forward = [&](Point p) {
    for (int i = 0; i < rotations; ++i) p = rotate(p);
    return reflect_after ? reflect(p) : p;
  };
  auto backward = [&](Point p) {
    if (reflect_after) p = reflect(p);
    for (int i = 0; i < rotations; ++i) p = unrotate(p);
    return p;
  };
  return make_periodic(forward(sol.basis[0]), forward(sol.basis[1]), [&](const FaceId& f) {
    auto cs = corners(f);
    for (auto& p : cs) p = backward(p);
    return sol.label_at(face_from_corners(cs));
  });
}

FaceLabelling expand_periodic(const PeriodicSolution& sol, int radius, Point centre) {
  FaceLabelling out;
  for (const FaceId& f : disk_faces(centre, radius)) out.emplace(f, sol.label_at(f));
  return out;
}

std::vector<PeriodicSolution> find_periodic(const PuzzleInstance& inst, int max_period, std::size_t max_solutions) {
  if (max_period < 1) throw Error(ErrorKind::InvalidArgument, "max period must be at least 1");
  const auto words = oriented_words(inst);
  std::set<PeriodicSolution> found;
  // Area of a fundamental domain is at most the product of the reduced lengths.
  const int area_bound = static_cast<int>(std::ceil(2.0 * max_period * max_period / std::numbers::sqrt3));

  for (int a = 3; a <= area_bound && found.size() < max_solutions; a += 3)
    for (int c = 1; a * c <= area_bound && found.size() < max_solutions; ++c)
      for (int b = 0; b < a && found.size() < max_solutions; ++b) {
        if (floor_mod(b + 2 * c, 3) != 0) continue;
        Lattice lat{a, b, c};
        auto red = gauss_reduce({a, 0}, {b, c});
        if (std::max(hex_distance(red[0], {}), hex_distance(red[1], {})) > max_period) continue;

        const auto faces = lat.fundamental_faces();
        std::map<FaceId, int> index;
        for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);
        StarCsp csp;
        csp.labels = inst.n + 1;
        csp.fixed.assign(faces.size(), -1);
        csp.touching.resize(faces.size());
        // Variable order: spiral outwards from the origin until every class is hit.
        std::vector<bool> placed(faces.size(), false);
        for (int r = 1; csp.order.size() < faces.size(); ++r)
          for (Point v : spiral({0, 0}, r))
            for (const FaceId& f : star_faces(v)) {
              int i = index.at(lat.reduce(f));
              if (!placed[static_cast<std::size_t>(i)]) {
                placed[static_cast<std::size_t>(i)] = true;
                csp.order.push_back(i);
              }
            }
        for (int y = 0; y < c; ++y)
          for (int x = 0; x < a; ++x) {
            std::array<int, 6> vars{};
            auto fs = star_faces({x, y});
            for (std::size_t i = 0; i < 6; ++i) vars[i] = index.at(lat.reduce(fs[i]));
            csp.add_constraint(vars, &words[static_cast<std::size_t>(vertex_type(Point{x, y}) - 1)]);
          }
        csp.solve([&](const std::vector<int>& value) {
          if (!primitive(lat, value, faces, index)) return true;
          found.insert(normalized(lat, [&](const FaceId& f) {
            return value[static_cast<std::size_t>(index.at(lat.reduce(f)))];
          }));
          return found.size() < max_solutions;
        });
      }

  std::vector<PeriodicSolution> out(found.begin(), found.end());
  for (const auto& sol : out) {
    const int r = 2 * sol.period();
    if (!check_disk(inst, expand_periodic(sol, r), {0, 0}, r))
      throw std::logic_error("periodic solution failed verification on its expanded disk");
  }
  return out;
}

std::string render_text(const FaceLabelling& lab) {
  if (lab.empty()) return {};
  int xmin = lab.begin()->first.x, xmax = xmin, ymin = lab.begin()->first.y, ymax = ymin;
  for (const auto& [f, l] : lab) {
    xmin = std::min(xmin, f.x);
    xmax = std::max(xmax, f.x);
    ymin = std::min(ymin, f.y);
    ymax = std::max(ymax, f.y);
  }
  auto cell = [&](const FaceId& f) {
    auto it = lab.find(f);
    if (it == lab.end()) return std::string("  ");
    std::string s = std::to_string(it->second);
    return s.size() < 2 ? " " + s : s;
  };
  std::ostringstream os;
  for (int y = ymax; y >= ymin; --y) {
    os << std::string(static_cast<std::size_t>(2 * (y - ymin)), ' ');
    for (int x = xmin; x <= xmax; ++x)
      os << cell({x, y, Orientation::Up}) << cell({x, y, Orientation::Down});
    os << '\n';
  }
  std::string s = os.str();
  // Trailing blanks carry no information.
  std::string out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

}  // namespace sidonplex
