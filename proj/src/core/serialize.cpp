#include "core/serialize.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace nonrep {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::Parse, what); }

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    parse_fail(std::string("malformed ") + what);
  }
}

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

Json vertex_map(const std::map<Vertex, std::vector<Vertex>>& m) {
  Json o = Json::object();
  for (const auto& [v, ws] : m) o[std::to_string(v)] = ws;
  return o;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json graph_to_json(const PlaneGraph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["rotation"] = g.rotations();
  j["external_face"] = g.external_face();
  return j;
}

PlaneGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rotation")) parse_fail("graph JSON needs a \"rotation\" array");
  auto rot = get_as<std::vector<std::vector<Vertex>>>(j["rotation"], "rotation");
  if (j.contains("n") && get_as<std::size_t>(j["n"], "n") != rot.size())
    parse_fail("\"n\" disagrees with the rotation length");
  std::optional<FaceId> ext;
  if (j.contains("external_face") && !j["external_face"].is_null())
    ext = get_as<FaceId>(j["external_face"], "external_face");
  return PlaneGraph::build(std::move(rot), ext);
}

std::string graph_to_dot(const PlaneGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const FaceWalk& w : g.faces()) {
    os << "  // face " << w.id << (w.id == g.external_face() ? " (external)" : "") << ":";
    for (Vertex v : w.vertices) os << ' ' << v;
    os << '\n';
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Json lists_to_json(const ListAssignment& l) {
  Json o = Json::object();
  for (Vertex v = 0; v < l.vertex_count(); ++v) o[std::to_string(v)] = l[v];
  return Json{{"lists", o}};
}

namespace {

// A bare color stands for a one-color list.
ColorSet list_of(const Json& val) {
  if (val.is_number_unsigned()) return {val.get<Color>()};
  return make_color_set(get_as<std::vector<Color>>(val, "list"));
}

}  // namespace

ListAssignment lists_from_json(const Json& j, std::size_t n) {
  const Json* src = &j;
  if (j.is_object() && j.contains("lists")) src = &j["lists"];
  ListAssignment out(n);
  if (src->is_array()) {
    if (src->size() != n) parse_fail("list array length differs from the vertex count");
    for (Vertex v = 0; v < n; ++v) out.set(v, list_of((*src)[v]));
    return out;
  }
  if (!src->is_object()) parse_fail("lists must be an object keyed by vertex id");
  for (const auto& [key, val] : src->items()) {
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      parse_fail("bad vertex id '" + key + "' in lists");
    }
    if (v >= n) parse_fail("vertex id " + key + " out of range in lists");
    out.set(static_cast<Vertex>(v), list_of(val));
  }
  return out;
}

Json coloring_to_json(const std::vector<Color>& c) {
  Json o = Json::object();
  for (std::size_t v = 0; v < c.size(); ++v) o[std::to_string(v)] = c[v];
  return o;
}

std::vector<Color> coloring_from_json(const Json& j, std::size_t n) {
  const Json* src = &j;
  if (j.is_object() && j.contains("coloring")) src = &j["coloring"];
  std::vector<Color> c(n, 0);
  std::vector<char> seen(n, 0);
  if (src->is_array()) {
    if (src->size() != n) parse_fail("coloring length differs from the vertex count");
    for (std::size_t v = 0; v < n; ++v) c[v] = get_as<Color>((*src)[v], "color");
    return c;
  }
  if (!src->is_object()) parse_fail("coloring must be an object keyed by vertex id or an array");
  for (const auto& [key, val] : src->items()) {
    std::size_t v = 0;
    try {
      v = std::stoul(key);
    } catch (const std::exception&) {
      parse_fail("bad vertex id '" + key + "' in coloring");
    }
    if (v >= n) parse_fail("vertex id " + key + " out of range in coloring");
    c[v] = get_as<Color>(val, "color");
    seen[v] = 1;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) parse_fail("coloring misses vertex " + std::to_string(v));
  return c;
}

Json faces_to_json(const PlaneGraph& g) {
  Json faces = Json::array();
  for (const FaceWalk& w : g.faces()) faces.push_back({{"id", w.id}, {"walk", w.vertices}});
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["faces_count"] = g.face_count();
  j["euler"] = static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) +
               static_cast<long long>(g.face_count());
  j["external_face"] = g.external_face();
  j["faces"] = faces;
  return j;
}

Json orientation_to_json(const PlaneGraph& g, const BipolarOrientation& o) {
  Json poles = Json::array();
  for (FaceId f = 0; f < o.face_poles.size(); ++f)
    poles.push_back({{"face", f}, {"s", o.face_poles[f].first}, {"t", o.face_poles[f].second}});
  Json j;
  j["source"] = o.source;
  j["sink"] = o.sink;
  j["st_number"] = o.st_number;
  j["edges"] = edges_json(o.directed_edges(g));
  j["face_poles"] = poles;
  return j;
}

Json special_to_json(const PlaneGraph& g, const SpecialAssignment& sa) {
  Json faces = Json::array();
  for (const FaceWalk& w : g.faces()) {
    Json tags = Json::array();
    for (std::size_t i = 0; i < w.size(); ++i) tags.push_back(sa.occurrence_special[w.id][i] ? "special" : "regular");
    faces.push_back({{"face", w.id},
                     {"specials", {sa.specials[w.id][0], sa.specials[w.id][1]}},
                     {"walk", w.vertices},
                     {"tags", tags},
                     {"regular", sa.regular_vertices(g, w.id)}});
  }
  Json regular = Json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) regular[std::to_string(v)] = sa.regular_faces[v];
  return Json{{"s", sa.s}, {"t", sa.t}, {"faces", faces}, {"regular_faces", regular}};
}

Json decomposition_to_json(const SquareDecomposition& d) {
  static const char* names[] = {"red", "green", "blue"};
  Json j;
  for (int c = 0; c < 3; ++c) j[names[c]] = edges_json(d.classes[c]);
  Json chords = Json::array();
  for (const SquareChord& ch : d.chords)
    chords.push_back({{"edge", {ch.edge.first, ch.edge.second}}, {"class", names[ch.cls]}, {"face", ch.face}, {"pos", ch.pos}});
  j["chords"] = chords;
  return j;
}

Json face_coloring_to_json(const FaceColoring& c) {
  Json m = Json::object();
  for (std::size_t f = 0; f < c.color.size(); ++f) m[std::to_string(f)] = c.color[f];
  return Json{{"colors", c.colors}, {"exact", c.exact}, {"nodes", c.nodes}, {"classes", m}};
}

Json walk_audit_to_json(const WalkAudit& a) {
  static const char* roles[] = {"only", "first", "middle", "last"};
  Json blocks = Json::array();
  for (const auto& b : a.blocks) {
    Json r = Json::array();
    for (auto x : b.roles) r.push_back(roles[static_cast<int>(x)]);
    blocks.push_back({{"l", b.l}, {"r", b.r}, {"red", b.red}, {"target", b.target}, {"anchor", b.anchor}, {"roles", r}});
  }
  return Json{{"blocks", blocks}, {"draws", a.path.draws}, {"resamples", a.path.resamples}};
}

Json face_audit_to_json(const FaceAudit& a) {
  Json walks = Json::array();
  for (const auto& w : a.walks) walks.push_back(walk_audit_to_json(w));
  return Json{{"face", a.face}, {"s", a.s}, {"t", a.t}, {"A", a.a}, {"A5", vertex_map(a.a5)},
              {"runs", a.runs}, {"walks", walks}};
}

Json verdict_to_json(const Verdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witnesses)
    w.push_back({{"face", x.face}, {"start", x.start}, {"half", x.half}, {"vertices", x.vertices}, {"colors", x.colors}});
  return Json{{"certified", v.certified}, {"witnesses", w}};
}

Json square_verdict_to_json(const SquareVerdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back({{"edge", {x.edge.first, x.edge.second}}, {"color", x.color}});
  return Json{{"certified", v.certified}, {"witnesses", w}};
}

Json stages_to_json(const std::vector<StageAudit>& s) {
  Json a = Json::array();
  for (const auto& x : s) {
    Json o{{"stage", x.name}, {"min_size", x.min_size}, {"max_size", x.max_size}};
    if (x.faces) o["faces"] = x.faces;
    a.push_back(o);
  }
  return a;
}

SizeSchedule schedule_from_json(const Json& options) {
  SizeSchedule s;
  if (options.contains("schedule")) {
    const auto mode = get_as<std::string>(options["schedule"], "schedule");
    if (mode == "guaranteed") s = SizeSchedule::guaranteed();
    else if (mode != "empirical") fail(ErrorCode::InvalidArgument, "schedule must be guaranteed or empirical");
  }
  if (options.contains("budget")) {
    if (!options["budget"].is_object()) parse_fail("budget must be an object");
    for (const auto& [k, v] : options["budget"].items()) s.set_budget(k, get_as<std::uint64_t>(v, "budget value"));
  }
  return s;
}

}  // namespace nonrep
