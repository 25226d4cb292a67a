#include "sidonplex/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "sidonplex/acceptance.hpp"
#include "sidonplex/complex.hpp"
#include "sidonplex/error.hpp"
#include "sidonplex/io.hpp"
#include "sidonplex/rings.hpp"

namespace sidonplex {

namespace {

struct Options {
  std::vector<std::string> words;
  std::string seq, mod, sigma, tau, format = "text", out, preset, spec_file, other, target, signs_a, signs_b;
  std::optional<int> radius;
  int disk_radius = 2;
  int max_period = 2;
  std::size_t max_solutions = 1000;
  std::size_t count = 1;
  std::optional<std::size_t> polarity_index;
  int type = 1;
  int centre_colour = 1;
  bool labels = false;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;

  bool json() const { return format == "json"; }
  bool dot() const { return format == "dot"; }
  std::span<const std::string> rest() const {
    return words.size() > 2 ? std::span<const std::string>(words).subspan(2) : std::span<const std::string>();
  }
};

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

std::vector<Int> parse_ints(const std::string& text, const char* what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      input_error(std::string("cannot read ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) input_error(std::string("empty ") + what);
  return out;
}

Sequence sequence_arg(const Options& o) {
  if (!o.rest().empty()) return parse_sequence(o.rest().front());
  if (!o.seq.empty()) return parse_sequence(o.seq);
  input_error("a sequence is required (positional or --seq)");
}

Int modulus_arg(const Options& o) {
  if (o.mod.empty()) input_error("--mod is required");
  auto m = parse_ints(o.mod, "modulus");
  if (m.size() != 1) input_error("--mod takes one modulus here");
  return m.front();
}

std::optional<Sigma> sigma_arg(const Options& o) {
  if (o.sigma.empty()) return std::nullopt;
  auto v = parse_ints(o.sigma, "sigma");
  return Sigma(v.begin(), v.end());
}

std::optional<Tau> tau_arg(const Options& o) {
  if (o.tau.empty()) return std::nullopt;
  auto v = parse_ints(o.tau, "tau");
  if (v.size() != 2) input_error("--tau takes two colours");
  return Tau{static_cast<int>(v[0]), static_cast<int>(v[1])};
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string file_arg(const Options& o, const char* what) {
  if (o.rest().empty()) input_error(std::string("a ") + what + " file is required");
  return o.rest().front();
}

ComplexSpec preset_spec(const std::string& name) {
  if (name == "mk") return mk_spec();
  if (name == "heawood") return heawood_spec();
  input_error("unknown preset '" + name + "' (mk, heawood)");
}

ComplexSpec spec_arg(const Options& o) {
  if (!o.spec_file.empty()) return spec_from_json(read_json(o.spec_file));
  if (!o.preset.empty()) return preset_spec(o.preset);
  if (o.seq.empty()) input_error("a spec is required (--preset, --spec or --seq with --mod)");
  const Sequence seq = parse_sequence(o.seq);
  if (o.mod.empty()) return modular_spec(seq);
  auto m = parse_ints(o.mod, "moduli");
  if (m.size() == 1) m.assign(3, m.front());
  if (m.size() != 3) input_error("--mod takes one or three moduli here");
  return uniform_spec(seq, {m[0], m[1], m[2]});
}

std::array<int, 3> signs_from(const std::string& text) {
  std::array<int, 3> out{};
  std::size_t k = 0;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if ((ch != '+' && ch != '-') || k == 3) input_error("signs are written like +,-,+");
    out[k++] = ch == '+' ? 1 : -1;
  }
  if (k != 3) input_error("signs are written like +,-,+");
  return out;
}

std::string signs_text(const std::array<int, 3>& s) {
  std::string out;
  for (int x : s) out += x > 0 ? '+' : '-';
  return out;
}

int truth(bool value, const Options& o, std::ostream& out, Json extra = Json::object()) {
  if (o.json()) {
    extra["result"] = value;
    out << extra.dump() << "\n";
  } else {
    out << (value ? "true" : "false") << "\n";
  }
  return value ? kExitTrue : kExitFalse;
}

std::string mapping_text(const std::vector<int>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << i << "->" << m[i];
  return os.str();
}

// sidon

int sidon_verify(const Options& o, std::ostream& out) {
  const Sequence s = sequence_arg(o);
  return truth(verify_sidon(s), o, out, {{"sequence", sequence_to_json(s)}});
}

int sidon_verify_mod(const Options& o, std::ostream& out) {
  const Sequence s = sequence_arg(o);
  const Int n = modulus_arg(o);
  return truth(verify_sidon_mod(s, n), o, out, {{"sequence", sequence_to_json(s)}, {"modulus", n}});
}

int sidon_extend(const Options& o, std::ostream& out) {
  const Sequence s = greedy_extend(sequence_arg(o), o.count);
  if (o.json()) out << sequence_to_json(s).dump() << "\n";
  else out << s.str() << "\n";
  return kExitTrue;
}

int sidon_threshold(const Options& o, std::ostream& out, bool exhaustive) {
  const Sequence s = sequence_arg(o);
  const Int n = exhaustive ? n_double_zero(s) : n_zero(s);
  if (o.json()) out << Json{{"sequence", sequence_to_json(s)}, {exhaustive ? "n00" : "n0", n}}.dump() << "\n";
  else out << n << "\n";
  return kExitTrue;
}

int sidon_collisions(const Options& o, std::ostream& out) {
  const Sequence s = sequence_arg(o);
  const auto pairs = alternating_collisions(s, modulus_arg(o));
  if (o.json()) {
    out << collisions_to_json(pairs).dump() << "\n";
    return kExitTrue;
  }
  auto triple = [](const Triple& t) { return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]); };
  for (const auto& p : pairs) out << p.residue << ": " << triple(p.first) << " ~ " << triple(p.second) << "\n";
  out << "pairs: " << pairs.size() << "\n";
  return kExitTrue;
}

// link

LinkGraph link_arg(const Options& o) {
  if (!o.rest().empty() && o.seq.empty()) return graph_from_json(read_json(o.rest().front()));
  if (o.seq.empty()) input_error("--seq and --mod (or a graph file) are required");
  return build_link(parse_sequence(o.seq), modulus_arg(o), sigma_arg(o), tau_arg(o));
}

std::string girth_text(const LinkGraph& g) {
  auto value = girth(g);
  return value ? std::to_string(*value) : "none";
}

int link_build(const Options& o, std::ostream& out, bool dot_default) {
  const LinkGraph g = link_arg(o);
  if (o.json()) out << graph_to_json(g).dump() << "\n";
  else if (o.dot() || (dot_default && o.format == "text")) out << link_to_dot(g);
  else out << "order " << g.order() << ", edges " << g.edge_count() << ", girth " << girth_text(g) << "\n";
  return kExitTrue;
}

int link_girth(const Options& o, std::ostream& out) {
  const LinkGraph g = link_arg(o);
  auto value = girth(g);
  if (o.json()) out << Json{{"girth", value ? Json(*value) : Json(nullptr)}}.dump() << "\n";
  else out << girth_text(g) << "\n";
  return kExitTrue;
}

int link_iso(const Options& o, std::ostream& out) {
  if (o.seq.empty()) input_error("--seq and --mod are required");
  const LinkGraph g = build_link(parse_sequence(o.seq), modulus_arg(o), sigma_arg(o), tau_arg(o));
  LinkGraph h = canonical_mk();
  if (o.target == "heawood") h = canonical_heawood();
  else if (o.target != "mk" && !o.target.empty()) h = graph_from_json(read_json(o.target));
  else if (o.target.empty() && !o.rest().empty()) h = graph_from_json(read_json(o.rest().front()));
  else if (o.target.empty()) input_error("--target mk|heawood|<graph file> is required");
  auto m = is_isomorphic(g, h, o.labels);
  if (o.json()) {
    out << Json{{"isomorphic", m.has_value()}, {"mapping", m ? Json(*m) : Json(nullptr)}}.dump() << "\n";
  } else {
    out << "isomorphic: " << (m ? "true" : "false") << "\n";
    if (m) out << "mapping: " << mapping_text(*m) << "\n";
  }
  return m ? kExitTrue : kExitFalse;
}

int link_polarity(const Options& o, std::ostream& out) {
  if (o.seq.empty()) input_error("--seq and --mod are required");
  const Sequence s = parse_sequence(o.seq);
  const LinkGraph g = build_link(s, modulus_arg(o), sigma_arg(o), tau_arg(o));
  std::vector<std::size_t> which;
  if (o.polarity_index) which.push_back(*o.polarity_index);
  else
    for (std::size_t p = 0; p < s.size(); ++p) which.push_back(p);
  for (std::size_t p : which) {
    const auto a = polarity(g, p);
    if (o.json())
      out << Json{{"p", p}, {"mapping", a.mapping}, {"preservesLabels", a.preserves_edge_labels},
                  {"swapsParity", a.swaps_parity}}.dump()
          << "\n";
    else out << "p=" << p << ": " << mapping_text(a.mapping) << "\n";
  }
  return kExitTrue;
}

// rings

int rings_enum(const Options& o, std::ostream& out) {
  const Sequence s = sequence_arg(o);
  Sigma sigma = sigma_arg(o).value_or(Sigma(s.size()));
  if (!sigma_arg(o)) std::iota(sigma.begin(), sigma.end(), 0);
  const Tau tau = tau_arg(o).value_or(increasing_tau(o.type));
  const auto rings = rings_from_collisions(s, modulus_arg(o), sigma, tau, o.type);
  if (o.json()) {
    Json arr = Json::array();
    for (const auto& r : rings) arr.push_back(ring_to_json(r));
    out << arr.dump() << "\n";
  } else {
    for (const auto& r : rings) out << r.canonical_key << "\n";
    out << "rings: " << rings.size() << "\n";
  }
  return kExitTrue;
}

int rings_xcheck(const Options& o, std::ostream& out) {
  const Sequence s = sequence_arg(o);
  const Int n = modulus_arg(o);
  Sigma sigma(s.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  const Tau tau = increasing_tau(1);
  const auto g = build_link(s, n, sigma, tau);
  const bool agree = rings_from_collisions(s, n, sigma, tau, 1) == rings_from_hexagons(g, 1);
  const std::size_t hexagons = count_hexagons(g), pairs = alternating_collisions(s, n).size();
  if (o.json())
    out << Json{{"agree", agree}, {"hexagons", hexagons}, {"pairs", pairs}}.dump() << "\n";
  else
    out << "agree: " << (agree ? "true" : "false") << ", hexagons: " << hexagons << ", pairs: " << pairs << "\n";
  return agree ? kExitTrue : kExitFalse;
}

// puzzle

int puzzle_check(const Options& o, std::ostream& out) {
  const auto inst = puzzle_instance(spec_arg(o));
  const FaceLabelling lab = labelling_from_json(read_json(file_arg(o, "labelling")));
  if (o.radius) return truth(check_disk(inst, lab, {}, *o.radius), o, out, {{"radius", *o.radius}});
  std::set<Point> candidates;
  for (const auto& [f, l] : lab)
    for (const Point& p : corners(f)) candidates.insert(p);
  std::size_t checked = 0;
  bool ok = true;
  for (const Point& p : candidates) {
    bool complete = true;
    for (const FaceId& f : star_faces(p)) complete = complete && lab.contains(f);
    if (!complete) continue;
    ++checked;
    ok = ok && check_vertex(inst, lab, p);
  }
  if (checked == 0) input_error("the labelling contains no complete star");
  return truth(ok, o, out, {{"verticesChecked", checked}});
}

int puzzle_solve(const Options& o, std::ostream& out) {
  const auto inst = puzzle_instance(spec_arg(o));
  const auto sols = solve_disk(inst, o.radius.value_or(1), o.max_solutions);
  for (const auto& lab : sols) {
    if (o.json()) out << labelling_to_json(lab).dump() << "\n";
    else out << render_text(lab) << "\n";
  }
  if (!o.json()) out << "solutions: " << sols.size() << "\n";
  return sols.empty() ? kExitFalse : kExitTrue;
}

int puzzle_periodic(const Options& o, std::ostream& out) {
  const auto inst = puzzle_instance(spec_arg(o));
  const auto sols = find_periodic(inst, o.max_period, o.max_solutions);
  for (const auto& s : sols) {
    if (o.json()) out << periodic_to_json(s).dump() << "\n";
    else
      out << "period " << s.period() << ", basis (" << s.basis[0].x << "," << s.basis[0].y << ") (" << s.basis[1].x
          << "," << s.basis[1].y << ")\n";
  }
  if (!o.json()) out << "periodic solutions: " << sols.size() << "\n";
  return sols.empty() ? kExitFalse : kExitTrue;
}

int puzzle_expand(const Options& o, std::ostream& out) {
  const auto sol = periodic_from_json(read_json(file_arg(o, "periodic solution")));
  const auto lab = expand_periodic(sol, o.radius.value_or(2));
  if (o.json()) out << labelling_to_json(lab).dump() << "\n";
  else out << render_text(lab);
  return kExitTrue;
}

// complex

CellComplexBall ball_arg(const Options& o, int default_radius) {
  std::optional<std::uint64_t> seed;
  if (o.seed_given) seed = o.seed;
  return build_ball(spec_arg(o), o.radius.value_or(default_radius), o.centre_colour, seed);
}

int complex_build(const Options& o, std::ostream& out) {
  const auto ball = ball_arg(o, 1);
  if (o.json()) out << ball_to_json(ball).dump() << "\n";
  else if (o.dot()) out << ball_to_dot(ball);
  else
    out << "vertices " << ball.vertex_count() << ", edges " << ball.edge_count() << ", faces " << ball.face_count()
        << ", radius " << ball.radius << "\n";
  return kExitTrue;
}

int complex_verify(const Options& o, std::ostream& out) {
  CellComplexBall ball;
  ComplexSpec spec;
  if (!o.rest().empty()) {
    ball = ball_from_json(read_json(o.rest().front()));
    if (ball.spec && o.preset.empty() && o.spec_file.empty() && o.seq.empty()) spec = *ball.spec;
    else spec = spec_arg(o);
  } else {
    spec = spec_arg(o);
    ball = ball_arg(o, 2);
  }
  const auto rep = verify_ball(ball, spec);
  if (o.json()) {
    out << Json{{"ok", rep.ok}, {"interiorChecked", rep.interior_checked}, {"problems", rep.problems}}.dump() << "\n";
  } else {
    out << "ok: " << (rep.ok ? "true" : "false") << ", interior vertices checked: " << rep.interior_checked << "\n";
    for (const auto& p : rep.problems) out << "  " << p << "\n";
  }
  return rep.ok ? kExitTrue : kExitFalse;
}

int complex_odd(const Options& o, std::ostream& out) {
  const auto rep = check_oddness(ball_arg(o, 2));
  if (o.json())
    out << Json{{"faces", rep.faces_checked}, {"odd", rep.odd}, {"choices", rep.choices_checked},
                {"allOdd", rep.all_odd()}}.dump()
        << "\n";
  else
    out << "faces: " << rep.faces_checked << ", odd: " << rep.odd << ", choices: " << rep.choices_checked << "\n";
  return rep.all_odd() ? kExitTrue : kExitFalse;
}

int complex_signs(const Options& o, std::ostream& out) {
  const auto spec = spec_arg(o);
  const int radius = o.radius.value_or(2);
  std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> pairs;
  if (!o.signs_a.empty() || !o.signs_b.empty()) {
    pairs.push_back({signs_from(o.signs_a.empty() ? "+++" : o.signs_a), signs_from(o.signs_b.empty() ? "+++" : o.signs_b)});
  } else {
    for (int s = 0; s < 8; ++s) pairs.push_back({{1, 1, 1}, {s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1}});
  }
  bool all = true;
  Json arr = Json::array();
  for (const auto& [a, b] : pairs) {
    const bool iso = sign_variants_isomorphic(spec, a, b, radius);
    all = all && iso;
    if (o.json()) arr.push_back({{"a", signs_text(a)}, {"b", signs_text(b)}, {"isomorphic", iso}});
    else out << signs_text(a) << " vs " << signs_text(b) << ": " << (iso ? "true" : "false") << "\n";
  }
  if (o.json()) out << Json{{"radius", radius}, {"pairs", arr}, {"result", all}}.dump() << "\n";
  return all ? kExitTrue : kExitFalse;
}

int complex_embed(const Options& o, std::ostream& out) {
  const FaceLabelling lab = labelling_from_json(read_json(file_arg(o, "labelling")));
  const auto ball = ball_arg(o, 3);
  const auto seeds = star_seeds(ball, lab, ball.centre);
  Json arr = Json::array();
  for (const auto& seed : seeds) {
    const auto emb = embed_disk(ball, lab, o.disk_radius, seed);
    if (!o.json()) continue;
    Json vs = Json::array(), fs = Json::array();
    for (const auto& [p, v] : emb.vertices) vs.push_back({p.x, p.y, v});
    for (const auto& [f, g] : emb.faces) fs.push_back({f.x, f.y, f.orientation == Orientation::Up ? "up" : "down", g});
    arr.push_back({{"vertices", vs}, {"faces", fs}});
  }
  if (o.json()) out << Json{{"seeds", seeds.size()}, {"embeddings", arr}}.dump() << "\n";
  else out << "seeds: " << seeds.size() << ", embedded: " << seeds.size() << ", each unique\n";
  return seeds.empty() ? kExitFalse : kExitTrue;
}

int complex_transitivity(const Options& o, std::ostream& out) {
  const int radius = o.radius.value_or(2);
  return truth(vertex_transitivity_check(spec_arg(o), radius), o, out, {{"radius", radius}});
}

int complex_unique_ext(const Options& o, std::ostream& out) {
  const auto spec = spec_arg(o);
  ComplexSpec other = spec;
  if (o.other == "mk" || o.other == "heawood") other = preset_spec(o.other);
  else if (!o.other.empty()) other = spec_from_json(read_json(o.other));
  const int radius = o.radius.value_or(2);
  return truth(extension_uniqueness_check(spec, other, radius), o, out, {{"radius", radius}});
}

int suite_acceptance(const Options& o, std::ostream& out, std::ostream& err) {
  int failed = 0;
  Json arr = Json::array();
  run_acceptance(o.seed, [&](const CriterionResult& r) {
    failed += !r.passed();
    err << "criterion " << r.id << ": " << r.seconds << " s\n";
    if (o.json())
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed()}, {"limitSeconds", r.limit_seconds},
                     {"detail", r.detail}});
    else out << format_result(r, false) << "\n";
  });
  if (o.json()) out << Json{{"seed", o.seed}, {"criteria", arr}, {"result", failed == 0}}.dump() << "\n";
  else out << (failed == 0 ? "all 14 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? kExitTrue : kExitFalse;
}

using Handler = std::function<int(const Options&, std::ostream&, std::ostream&)>;

Handler plain(int (*f)(const Options&, std::ostream&)) {
  return [f](const Options& o, std::ostream& out, std::ostream&) { return f(o, out); };
}

const std::map<std::string, std::map<std::string, Handler>>& commands() {
  static const std::map<std::string, std::map<std::string, Handler>> table{
      {"sidon",
       {{"verify", plain(sidon_verify)},
        {"verify-mod", plain(sidon_verify_mod)},
        {"extend", plain(sidon_extend)},
        {"n0", [](const Options& o, std::ostream& out, std::ostream&) { return sidon_threshold(o, out, false); }},
        {"n00", [](const Options& o, std::ostream& out, std::ostream&) { return sidon_threshold(o, out, true); }},
        {"collisions", plain(sidon_collisions)}}},
      {"link",
       {{"build", [](const Options& o, std::ostream& out, std::ostream&) { return link_build(o, out, false); }},
        {"girth", plain(link_girth)},
        {"iso", plain(link_iso)},
        {"polarity", plain(link_polarity)},
        {"export", [](const Options& o, std::ostream& out, std::ostream&) { return link_build(o, out, true); }}}},
      {"rings", {{"enum", plain(rings_enum)}, {"xcheck", plain(rings_xcheck)}}},
      {"puzzle",
       {{"check", plain(puzzle_check)},
        {"solve", plain(puzzle_solve)},
        {"periodic", plain(puzzle_periodic)},
        {"expand", plain(puzzle_expand)}}},
      {"complex",
       {{"build", plain(complex_build)},
        {"verify", plain(complex_verify)},
        {"odd", plain(complex_odd)},
        {"signs", plain(complex_signs)},
        {"embed", plain(complex_embed)},
        {"transitivity", plain(complex_transitivity)},
        {"unique-ext", plain(complex_unique_ext)}}},
      {"suite", {{"acceptance", suite_acceptance}}},
  };
  return table;
}

std::string usage() {
  std::ostringstream os;
  os << "commands:\n";
  for (const auto& [verb, actions] : commands()) {
    os << "  " << verb << " ";
    bool first = true;
    for (const auto& [action, h] : actions) {
      os << (first ? "" : "|") << action;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sidon sequences, link graphs and the triangle complexes built from them"};
  app.footer(usage());
  app.add_option("command", o.words, "verb, action and positional inputs");
  app.add_option("--seq", o.seq, "sequence, e.g. 0,1,3");
  app.add_option("--mod", o.mod, "modulus (or three moduli for a spec)");
  app.add_option("--sigma", o.sigma, "face-label bijection, e.g. 0,1,2");
  app.add_option("--tau", o.tau, "colours of even and odd link vertices, e.g. 2,3");
  app.add_option("--radius", o.radius, "disk or ball radius")->check(CLI::Range(0, 64));
  app.add_option("--disk-radius", o.disk_radius, "disk radius for complex embed")->check(CLI::Range(0, 64));
  app.add_option("--max-period", o.max_period, "largest period for puzzle periodic")->check(CLI::Range(1, 64));
  app.add_option("--max-solutions", o.max_solutions, "solution cap")->check(CLI::PositiveNumber);
  app.add_option("--count", o.count, "terms appended by sidon extend");
  app.add_option("--p", o.polarity_index, "polarity index");
  app.add_option("--type", o.type, "vertex type for rings enum")->check(CLI::Range(1, 3));
  app.add_option("--centre-colour", o.centre_colour, "colour of the ball centre")->check(CLI::Range(1, 3));
  app.add_option("--target", o.target, "mk, heawood or a graph JSON file");
  app.add_flag("--labels", o.labels, "link iso preserves edge labels");
  app.add_option("--preset", o.preset, "mk or heawood");
  app.add_option("--spec", o.spec_file, "spec JSON file");
  app.add_option("--other", o.other, "second spec for unique-ext (mk, heawood or a file)");
  app.add_option("--signs-a", o.signs_a, "sign vector, e.g. +,+,-");
  app.add_option("--signs-b", o.signs_b, "sign vector, e.g. -,+,+");
  app.add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  auto* seed_opt = app.add_option("--seed", o.seed, "seed for randomized suites and completion orders");
  app.add_option("--out", o.out, "write output to this file");
  app.set_config("--config", "", "key=value file; flags override it");
  app.get_config_formatter_base()->arrayDelimiter(static_cast<char>(31));

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  o.seed_given = seed_opt->count() > 0;

  if (o.words.size() < 2) {
    err << "error: expected a verb and an action\n" << usage();
    return kExitInput;
  }
  auto verb = commands().find(o.words[0]);
  if (verb == commands().end() || !verb->second.contains(o.words[1])) {
    err << "error: unknown command '" << o.words[0] << " " << o.words[1] << "'\n" << usage();
    return kExitInput;
  }
  std::ostringstream buffer;
  int code = kExitInput;
  try {
    code = verb->second.at(o.words[1])(o, o.out.empty() ? out : buffer, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kExitInput;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace sidonplex
