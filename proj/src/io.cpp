#include "sidonplex/io.hpp"

#include <sstream>

#include "sidonplex/error.hpp"

namespace sidonplex {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("bad value for ") + what);
  }
}

Triple triple_from(const Json& j) {
  auto v = as<std::vector<Int>>(j, "triple");
  if (v.size() != 3) bad("a triple has three entries");
  return {v[0], v[1], v[2]};
}

Word6 word_from(const Json& j, const char* what) {
  auto v = as<std::vector<int>>(j, what);
  if (v.size() != 6) bad(std::string(what) + " must have six entries");
  Word6 w{};
  std::copy(v.begin(), v.end(), w.begin());
  return w;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

Json sequence_to_json(const Sequence& seq) { return Json(std::vector<Int>(seq.terms().begin(), seq.terms().end())); }

Sequence sequence_from_json(const Json& j) {
  if (!j.is_array()) bad("a sequence is a JSON array");
  return Sequence(as<std::vector<Int>>(j, "sequence"));
}

Json collisions_to_json(const std::vector<CollisionPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({{"residue", p.residue}, {"first", p.first}, {"second", p.second}});
  return out;
}

std::vector<CollisionPair> collisions_from_json(const Json& j) {
  if (!j.is_array()) bad("collisions are a JSON array");
  std::vector<CollisionPair> out;
  for (const auto& e : j)
    out.push_back({triple_from(field(e, "first")), triple_from(field(e, "second")), as<Int>(field(e, "residue"), "residue")});
  return out;
}

Json graph_to_json(const LinkGraph& g) {
  Json out;
  if (const auto& o = g.origin()) {
    out["modulus"] = o->modulus;
    out["sequence"] = sequence_to_json(o->sequence);
    out["sigma"] = o->sigma ? Json(*o->sigma) : Json(nullptr);
    out["tau"] = o->tau ? Json(*o->tau) : Json(nullptr);
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.term});
    out["edges"] = edges;
    return out;
  }
  out["order"] = g.order();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.colour});
  out["edges"] = edges;
  if (g.has_vertex_colours()) {
    Json colours = Json::array();
    for (int v = 0; v < g.order(); ++v) colours.push_back(g.vertex_colour(v));
    out["vertexColours"] = colours;
  }
  return out;
}

LinkGraph graph_from_json(const Json& j) {
  if (j.is_object() && j.contains("modulus")) {
    const Int modulus = as<Int>(field(j, "modulus"), "modulus");
    const Sequence seq = sequence_from_json(field(j, "sequence"));
    std::optional<Sigma> sigma;
    std::optional<Tau> tau;
    if (j.contains("sigma") && !j.at("sigma").is_null()) sigma = as<Sigma>(j.at("sigma"), "sigma");
    if (j.contains("tau") && !j.at("tau").is_null()) tau = as<Tau>(j.at("tau"), "tau");
    LinkGraph g = build_link(seq, modulus, sigma, tau);
    if (j.contains("edges")) {
      const auto& edges = j.at("edges");
      if (!edges.is_array() || edges.size() != g.edge_count()) bad("edge list does not match the sequence");
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto pair = as<std::vector<int>>(edges[i], "edge");
        if (pair.size() != 2 || pair[0] != g.edge(static_cast<int>(i)).u || pair[1] != g.edge(static_cast<int>(i)).term)
          bad("edge list does not match the sequence");
      }
    }
    return g;
  }
  const int order = as<int>(field(j, "order"), "order");
  if (order < 0) bad("order must be non-negative");
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    auto t = as<std::vector<int>>(e, "edge");
    if (t.size() < 2 || t.size() > 3) bad("an edge is [u, v] or [u, v, label]");
    if (t[0] < 0 || t[1] < 0 || t[0] >= order || t[1] >= order) bad("edge endpoint out of range");
    edges.push_back({t[0], t[1], -1, t.size() == 3 ? t[2] : -1});
  }
  std::vector<int> colours;
  if (j.contains("vertexColours")) {
    colours = as<std::vector<int>>(j.at("vertexColours"), "vertexColours");
    if (colours.size() != static_cast<std::size_t>(order)) bad("one colour per vertex");
  }
  return LinkGraph(order, std::move(edges), std::move(colours));
}

Json ring_to_json(const Ring& ring) {
  return {{"vertexType", ring.vertex_type},
          {"faces", ring.faces},
          {"neighborTypes", ring.neighbour_types},
          {"canonicalKey", ring.canonical_key}};
}

Ring ring_from_json(const Json& j) {
  const int type = as<int>(field(j, "vertexType"), "vertexType");
  Ring r = canonical_ring(word_from(field(j, "faces"), "faces"), word_from(field(j, "neighborTypes"), "neighborTypes"),
                          type);
  if (j.contains("canonicalKey") && as<std::string>(j.at("canonicalKey"), "canonicalKey") != r.canonical_key)
    bad("canonicalKey does not match the ring words");
  return r;
}

Json labelling_to_json(const FaceLabelling& lab) {
  Json region = Json::array(), labels = Json::array();
  for (const auto& [f, l] : lab) {
    region.push_back({f.x, f.y, f.orientation == Orientation::Up ? "up" : "down"});
    labels.push_back(l);
  }
  return {{"region", region}, {"labels", labels}};
}

FaceLabelling labelling_from_json(const Json& j) {
  const auto& region = field(j, "region");
  const auto labels = as<std::vector<int>>(field(j, "labels"), "labels");
  if (!region.is_array() || region.size() != labels.size()) bad("region and labels differ in length");
  FaceLabelling out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& f = region[i];
    if (!f.is_array() || f.size() != 3) bad("a face is [x, y, \"up\"|\"down\"]");
    const auto o = as<std::string>(f[2], "orientation");
    if (o != "up" && o != "down") bad("orientation must be \"up\" or \"down\"");
    FaceId id{as<int>(f[0], "x"), as<int>(f[1], "y"), o == "up" ? Orientation::Up : Orientation::Down};
    if (labels[i] < 0) bad("labels are non-negative");
    if (!out.emplace(id, labels[i]).second) bad("face listed twice");
  }
  return out;
}

Json periodic_to_json(const PeriodicSolution& sol) {
  return {{"basis", {{sol.basis[0].x, sol.basis[0].y}, {sol.basis[1].x, sol.basis[1].y}}},
          {"period", sol.period()},
          {"fundamental", labelling_to_json(sol.fundamental)}};
}

PeriodicSolution periodic_from_json(const Json& j) {
  const auto basis = as<std::vector<std::array<int, 2>>>(field(j, "basis"), "basis");
  if (basis.size() != 2) bad("basis has two vectors");
  PeriodicSolution raw;
  raw.basis = {Point{basis[0][0], basis[0][1]}, Point{basis[1][0], basis[1][1]}};
  raw.fundamental = labelling_from_json(field(j, "fundamental"));
  const int a = raw.basis[0].x, b = raw.basis[1].x, c = raw.basis[1].y;
  if (raw.basis[0].y != 0 || a <= 0 || c <= 0 || b < 0 || b >= a) bad("basis must be in Hermite normal form");
  if (raw.fundamental.size() != static_cast<std::size_t>(2 * a * c)) bad("fundamental domain is incomplete");
  for (const auto& [f, l] : raw.fundamental)
    if (f.x < 0 || f.x >= a || f.y < 0 || f.y >= c) bad("fundamental face outside the domain");
  PeriodicSolution sol = make_periodic(raw.basis[0], raw.basis[1], [&](const FaceId& f) { return raw.label_at(f); });
  if (!(sol == raw)) bad("periodic solution is not normalized");
  return sol;
}

Json spec_to_json(const ComplexSpec& spec) {
  Json seqs = Json::array();
  for (const auto& s : spec.sequences) seqs.push_back(sequence_to_json(s));
  return {{"sequences", seqs}, {"moduli", spec.moduli}, {"sigmas", spec.sigmas}, {"taus", spec.taus}};
}

ComplexSpec spec_from_json(const Json& j) {
  ComplexSpec spec;
  const auto& seqs = field(j, "sequences");
  if (!seqs.is_array()) bad("sequences must be an array");
  for (const auto& s : seqs) spec.sequences.push_back(sequence_from_json(s));
  spec.moduli = as<std::array<Int, 3>>(field(j, "moduli"), "moduli");
  spec.sigmas = as<std::array<Sigma, 3>>(field(j, "sigmas"), "sigmas");
  spec.taus = as<std::array<Tau, 3>>(field(j, "taus"), "taus");
  return spec;
}

Json ball_to_json(const CellComplexBall& ball) {
  Json vs = Json::array(), es = Json::array(), fs = Json::array();
  for (std::size_t v = 0; v < ball.vertex_count(); ++v)
    vs.push_back({{"id", v}, {"colour", ball.vertex(static_cast<int>(v)).colour},
                  {"layer", ball.vertex(static_cast<int>(v)).layer}});
  for (const auto& e : ball.edges()) es.push_back({{"v", e.v}, {"w", e.w}, {"colour", e.colour}});
  for (const auto& f : ball.faces())
    fs.push_back({{"v", f.vertices[0]}, {"w", f.vertices[1]}, {"x", f.vertices[2]}, {"colour", f.label}});
  Json out{{"vertices", vs}, {"edges", es}, {"faces", fs}, {"center", ball.centre}, {"radius", ball.radius}};
  out["spec"] = ball.spec ? spec_to_json(*ball.spec) : Json(nullptr);
  return out;
}

CellComplexBall ball_from_json(const Json& j) {
  const auto& vs = field(j, "vertices");
  const auto& fs = field(j, "faces");
  if (!vs.is_array() || !fs.is_array()) bad("vertices and faces are arrays");
  const std::size_t n = vs.size();
  std::vector<int> colours(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (as<std::size_t>(field(vs[i], "id"), "id") != i) bad("vertex ids must be 0..n-1 in order");
    colours[i] = as<int>(field(vs[i], "colour"), "colour");
  }
  struct RawFace {
    int v, w, x, label;
  };
  std::vector<RawFace> faces;
  std::vector<std::vector<int>> adj(n);
  for (const auto& f : fs) {
    RawFace r{as<int>(field(f, "v"), "v"), as<int>(field(f, "w"), "w"), as<int>(field(f, "x"), "x"),
              as<int>(field(f, "colour"), "colour")};
    for (int u : {r.v, r.w, r.x})
      if (u < 0 || static_cast<std::size_t>(u) >= n) bad("face vertex out of range");
    faces.push_back(r);
    for (auto [p, q] : {std::pair{r.v, r.w}, std::pair{r.w, r.x}, std::pair{r.v, r.x}}) {
      adj[static_cast<std::size_t>(p)].push_back(q);
      adj[static_cast<std::size_t>(q)].push_back(p);
    }
  }
  const int centre = as<int>(field(j, "center"), "center");
  if (centre < 0 || static_cast<std::size_t>(centre) >= n) bad("center out of range");
  std::vector<int> layer(n, -1);
  std::vector<int> queue{centre};
  layer[static_cast<std::size_t>(centre)] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int w : adj[static_cast<std::size_t>(queue[h])])
      if (layer[static_cast<std::size_t>(w)] < 0) {
        layer[static_cast<std::size_t>(w)] = layer[static_cast<std::size_t>(queue[h])] + 1;
        queue.push_back(w);
      }
  CellComplexBall ball;
  for (std::size_t i = 0; i < n; ++i) {
    if (layer[i] < 0) bad("complex is not connected to the center");
    if (vs[i].contains("layer") && as<int>(vs[i].at("layer"), "layer") != layer[i]) bad("layer disagrees with the 1-skeleton");
    ball.add_vertex(colours[i], layer[i]);
  }
  for (const auto& f : faces) ball.add_face(f.v, f.w, f.x, f.label);
  if (j.contains("edges")) {
    const auto& es = j.at("edges");
    if (!es.is_array() || es.size() != ball.edge_count()) bad("edge list does not match the faces");
    for (const auto& e : es) {
      auto id = ball.edge_between(as<int>(field(e, "v"), "v"), as<int>(field(e, "w"), "w"));
      if (!id || ball.edge(*id).colour != as<int>(field(e, "colour"), "colour")) bad("edge list does not match the faces");
    }
  }
  ball.centre = centre;
  ball.radius = as<int>(field(j, "radius"), "radius");
  if (j.contains("spec") && !j.at("spec").is_null()) ball.spec = spec_from_json(j.at("spec"));
  return ball;
}

std::string link_to_dot(const LinkGraph& g) {
  std::ostringstream os;
  os << "graph link {\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (g.has_vertex_colours()) os << " [colour=" << g.vertex_colour(v) << "]";
    os << ";\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(static_cast<int>(e));
    os << "  " << ed.u << " -- " << ed.v << " [label=" << g.edge_label(static_cast<int>(e)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sidonplex
