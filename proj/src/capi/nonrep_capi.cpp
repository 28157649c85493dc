#include "nonrep/nonrep.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <optional>
#include <new>
#include <string>

#include "core/bipolar.hpp"
#include "core/errors.hpp"
#include "core/face_coloring.hpp"
#include "core/face_filter.hpp"
#include "core/generators.hpp"
#include "core/path_filter.hpp"
#include "core/pipeline.hpp"
#include "core/rng.hpp"
#include "core/schedule.hpp"
#include "core/serialize.hpp"
#include "core/special_assignment.hpp"
#include "core/square_filter.hpp"
#include "core/thomassen.hpp"
#include "core/verifier.hpp"
#include "core/walk_filter.hpp"

struct nonrep_graph {
  nonrep::PlaneGraph g;
};

struct nonrep_lists {
  nonrep::ListAssignment l;
};

using namespace nonrep;

namespace {

thread_local std::string g_last_error;

nonrep_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return NONREP_INVALID_ARGUMENT;
    case ErrorCode::InvalidSize: return NONREP_INVALID_SIZE;
    case ErrorCode::Parse: return NONREP_PARSE;
    case ErrorCode::NotPlanar: return NONREP_NOT_PLANAR;
    case ErrorCode::Disconnected: return NONREP_DISCONNECTED;
    case ErrorCode::MultiEdgeOrLoop: return NONREP_MULTI_EDGE_OR_LOOP;
    case ErrorCode::NotTwoConnected: return NONREP_NOT_TWO_CONNECTED;
    case ErrorCode::PolesNotOnExternalFace: return NONREP_POLES_NOT_ON_EXTERNAL_FACE;
    case ErrorCode::InsufficientColors: return NONREP_INSUFFICIENT_COLORS;
    case ErrorCode::ResampleBudgetExceeded: return NONREP_RESAMPLE_BUDGET_EXCEEDED;
    case ErrorCode::GuaranteedModeInfeasible: return NONREP_GUARANTEED_MODE_INFEASIBLE;
    case ErrorCode::NotFacial: return NONREP_NOT_FACIAL;
    case ErrorCode::NonPlanarClass: return NONREP_NON_PLANAR_CLASS;
    case ErrorCode::Internal: return NONREP_INTERNAL;
  }
  return NONREP_INTERNAL;
}

template <class F>
nonrep_status guard(F&& body) {
  g_last_error.clear();
  try {
    body();
    return NONREP_OK;
  } catch (const Error& e) {
    g_last_error = std::string(to_string(e.code())) + ": " + e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "Internal: out of memory";
  } catch (const std::exception& e) {
    g_last_error = std::string("Internal: ") + e.what();
  }
  return NONREP_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  if (!out) fail(ErrorCode::InvalidArgument, "output pointer is null");
  *out = copy_string(dump(j));
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return *p;
}

Json options_of(const char* text) {
  if (!text || !*text) return Json::object();
  Json j = parse_json(text);
  if (!j.is_object()) fail(ErrorCode::Parse, "options must be a JSON object");
  return j;
}

template <class T>
T opt(const Json& o, const char* key, T fallback) {
  if (!o.contains(key) || o[key].is_null()) return fallback;
  try {
    return o[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::Parse, std::string("option \"") + key + "\" has the wrong type");
  }
}

std::pair<Vertex, Vertex> poles_of(const Json& o, const PlaneGraph& g) {
  if (o.contains("s") != o.contains("t")) fail(ErrorCode::InvalidArgument, "give both s and t or neither");
  if (o.contains("s")) return {opt<Vertex>(o, "s", 0), opt<Vertex>(o, "t", 0)};
  return default_poles(g);
}

std::size_t m_of(const Json& o) {
  const auto m = opt<std::size_t>(o, "m", 1);
  if (m == 0) fail(ErrorCode::InvalidArgument, "m must be positive");
  return m;
}

std::vector<Vertex> vertices_of(const Json& o, const char* key, std::size_t n) {
  auto v = opt<std::vector<Vertex>>(o, key, {});
  for (Vertex x : v)
    if (x >= n) fail(ErrorCode::InvalidArgument, std::string(key) + " mentions vertex " + std::to_string(x) + " without a list");
  return v;
}

ListAssignment random_lists(std::size_t n, std::size_t size, std::size_t universe, std::uint64_t seed) {
  if (universe < size) fail(ErrorCode::InvalidArgument, "universe smaller than list size");
  Rng rng(seed);
  ListAssignment l(n);
  std::vector<Color> pool(universe);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < universe; ++i) pool[i] = i;
    // Partial Fisher-Yates: the first `size` entries form a uniform subset.
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + uniform_below(rng, universe - i)]);
    l.set(v, make_color_set(std::vector<Color>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size))));
  }
  return l;
}

// Path lists where consecutive vertices share no color.
ListAssignment proper_path_lists(std::size_t n, std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  ListAssignment l(n);
  const std::size_t universe = 4 * size;
  for (Vertex v = 0; v < n; ++v) {
    ColorSet out;
    while (out.size() < size) {
      const Color c = uniform_below(rng, universe);
      if (v > 0 && std::binary_search(l[v - 1].begin(), l[v - 1].end(), c)) continue;
      if (!std::binary_search(out.begin(), out.end(), c)) out.insert(std::upper_bound(out.begin(), out.end(), c), c);
    }
    l.set(v, std::move(out));
  }
  return l;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

extern "C" {

const char* nonrep_version(void) { return "1.0.0"; }

const char* nonrep_status_name(nonrep_status s) {
  switch (s) {
    case NONREP_OK: return "OK";
    case NONREP_INVALID_ARGUMENT: return "InvalidArgument";
    case NONREP_INVALID_SIZE: return "InvalidSize";
    case NONREP_PARSE: return "Parse";
    case NONREP_NOT_PLANAR: return "NotPlanar";
    case NONREP_DISCONNECTED: return "Disconnected";
    case NONREP_MULTI_EDGE_OR_LOOP: return "MultiEdgeOrLoop";
    case NONREP_NOT_TWO_CONNECTED: return "NotTwoConnected";
    case NONREP_POLES_NOT_ON_EXTERNAL_FACE: return "PolesNotOnExternalFace";
    case NONREP_INSUFFICIENT_COLORS: return "InsufficientColors";
    case NONREP_RESAMPLE_BUDGET_EXCEEDED: return "ResampleBudgetExceeded";
    case NONREP_GUARANTEED_MODE_INFEASIBLE: return "GuaranteedModeInfeasible";
    case NONREP_NOT_FACIAL: return "NotFacial";
    case NONREP_NON_PLANAR_CLASS: return "NonPlanarClass";
    case NONREP_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* nonrep_last_error(void) { return g_last_error.c_str(); }

void nonrep_string_free(char* s) { std::free(s); }

nonrep_status nonrep_graph_from_json(const char* json, nonrep_graph** out) {
  return guard([&] {
    need(out, "out");
    if (!json) fail(ErrorCode::InvalidArgument, "json is null");
    *out = new nonrep_graph{graph_from_json(parse_json(json))};
  });
}

nonrep_status nonrep_graph_generate(const char* kind, uint64_t n, uint64_t seed, nonrep_graph** out) {
  return guard([&] {
    need(out, "out");
    const auto k = parse_gen_kind(kind ? kind : "");
    if (!k) fail(ErrorCode::InvalidArgument, std::string("unknown generator '") + (kind ? kind : "") + "'");
    *out = new nonrep_graph{generate(*k, n, seed)};
  });
}

void nonrep_graph_free(nonrep_graph* g) { delete g; }

nonrep_status nonrep_graph_counts(const nonrep_graph* g, uint64_t* vertices, uint64_t* edges, uint64_t* faces) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    if (vertices) *vertices = pg.vertex_count();
    if (edges) *edges = pg.edge_count();
    if (faces) *faces = pg.face_count();
  });
}

nonrep_status nonrep_graph_to_json(const nonrep_graph* g, char** out) {
  return guard([&] { emit(graph_to_json(need(g, "graph").g), out); });
}

nonrep_status nonrep_graph_to_dot(const nonrep_graph* g, char** out) {
  return guard([&] {
    const std::string dot = graph_to_dot(need(g, "graph").g);
    if (!out) fail(ErrorCode::InvalidArgument, "output pointer is null");
    *out = copy_string(dot);
  });
}

nonrep_status nonrep_lists_from_json(const char* json, uint64_t n, nonrep_lists** out) {
  return guard([&] {
    need(out, "out");
    if (!json) fail(ErrorCode::InvalidArgument, "json is null");
    *out = new nonrep_lists{lists_from_json(parse_json(json), n)};
  });
}

nonrep_status nonrep_lists_random(uint64_t n, uint64_t size, uint64_t universe, uint64_t seed, nonrep_lists** out) {
  return guard([&] {
    need(out, "out");
    *out = new nonrep_lists{random_lists(n, size, universe, seed)};
  });
}

void nonrep_lists_free(nonrep_lists* l) { delete l; }

nonrep_status nonrep_lists_to_json(const nonrep_lists* l, char** out) {
  return guard([&] { emit(lists_to_json(need(l, "lists").l), out); });
}

nonrep_status nonrep_faces(const nonrep_graph* g, char** out) {
  return guard([&] { emit(faces_to_json(need(g, "graph").g), out); });
}

nonrep_status nonrep_orient(const nonrep_graph* g, const char* options, char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    const Json o = options_of(options);
    const auto [s, t] = poles_of(o, pg);
    emit(orientation_to_json(pg, orient(pg, s, t)), out);
  });
}

nonrep_status nonrep_special(const nonrep_graph* g, const char* options, char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    const Json o = options_of(options);
    const auto [s, t] = poles_of(o, pg);
    emit(special_to_json(pg, assign(pg, s, t)), out);
  });
}

nonrep_status nonrep_color_faces(const nonrep_graph* g, const char* options, char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    const Json o = options_of(options);
    const auto [s, t] = poles_of(o, pg);
    const SpecialAssignment sa = assign(pg, s, t);
    const FaceGraph h = build_H(pg, sa);
    const FaceColoring c = proper_color(h, opt<std::uint32_t>(o, "max_colors", 4),
                                        opt<std::uint64_t>(o, "node_budget", 1'000'000));
    Json edges = Json::array();
    for (auto [a, b] : h.edges) edges.push_back({a, b});
    Json j{{"s", s}, {"t", t}, {"faces", h.vertex_count()}, {"h_edges", edges}};
    j["coloring"] = face_coloring_to_json(c);
    j["classes_independent"] = classes_independent(pg, sa, c.color);
    emit(j, out);
  });
}

nonrep_status nonrep_filter_proper(const nonrep_graph* g, const nonrep_lists* l, const char* options, char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    const Json o = options_of(options);
    const ListAssignment M = filter_proper(pg, need(l, "lists").l, m_of(o));
    Json j = lists_to_json(M);
    j["proper"] = is_proper_assignment(pg, M);
    emit(j, out);
  });
}

nonrep_status nonrep_filter_square(const nonrep_graph* g, const nonrep_lists* l, const char* options, char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    const Json o = options_of(options);
    const std::size_t m = m_of(o);
    std::optional<std::size_t> keep;
    if (o.contains("keep")) keep = opt<std::size_t>(o, "keep", m);
    const ListAssignment M = filter_square(pg, need(l, "lists").l, m, keep);
    Json j = lists_to_json(M);
    j["certificate"] = square_verdict_to_json(check_square_proper(pg, M));
    if (opt<bool>(o, "decomposition", false)) j["decomposition"] = decomposition_to_json(decompose_square(pg));
    emit(j, out);
  });
}

nonrep_status nonrep_filter_path(const nonrep_lists* l, const char* options, char** out) {
  return guard([&] {
    const ListAssignment& L = need(l, "lists").l;
    const Json o = options_of(options);
    std::vector<Vertex> path = vertices_of(o, "path", L.vertex_count());
    if (!o.contains("path"))
      for (Vertex v = 0; v < L.vertex_count(); ++v) path.push_back(v);
    const auto seed = opt<std::uint64_t>(o, "seed", 0);
    const auto factor = opt<std::uint64_t>(o, "resample", 1'000'000);
    PathStats stats;
    ListAssignment M;
    if (o.contains("sizes")) {
      const auto sizes = opt<std::vector<std::size_t>>(o, "sizes", {});
      if (sizes.size() != path.size()) fail(ErrorCode::InvalidArgument, "one size per path vertex expected");
      M = nonrep_filter_path_sized(path, L, sizes, seed, factor, &stats);
    } else {
      M = nonrep_filter_path(path, L, m_of(o), seed, factor, &stats);
    }
    Json j = lists_to_json(M);
    j["draws"] = stats.draws;
    j["resamples"] = stats.resamples;
    j["certified"] = !find_feasible_repetition(path, M).has_value();
    emit(j, out);
  });
}

nonrep_status nonrep_filter_walk(const nonrep_graph* g, const nonrep_lists* l, const char* options, char** out) {
  return guard([&] {
    const ListAssignment& L = need(l, "lists").l;
    const Json o = options_of(options);
    std::vector<Vertex> walk;
    if (o.contains("face")) {
      const PlaneGraph& pg = need(g, "graph").g;
      const auto f = opt<FaceId>(o, "face", 0);
      if (f >= pg.face_count()) fail(ErrorCode::InvalidArgument, "face id out of range");
      walk = linear_walk(pg.face(f), opt<std::size_t>(o, "cut", 0));
      for (Vertex v : walk)
        if (v >= L.vertex_count()) fail(ErrorCode::InvalidArgument, "lists do not cover the face");
    } else {
      walk = vertices_of(o, "walk", L.vertex_count());
    }
    WalkAudit audit;
    const ListAssignment M = filter_walk(std::span<const Vertex>(walk), L, m_of(o), schedule_from_json(o),
                                         opt<std::uint64_t>(o, "seed", 0), &audit);
    Json j = lists_to_json(M);
    j["walk"] = walk;
    j["audit"] = walk_audit_to_json(audit);
    emit(j, out);
  });
}

nonrep_status nonrep_filter_face(const nonrep_graph* g, const nonrep_lists* l, const char* options, char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    const ListAssignment& L = need(l, "lists").l;
    if (L.vertex_count() != pg.vertex_count()) fail(ErrorCode::InvalidArgument, "lists do not match the graph");
    const Json o = options_of(options);
    const auto [s, t] = poles_of(o, pg);
    const SpecialAssignment sa = assign(pg, s, t);
    const auto f = opt<FaceId>(o, "face", pg.external_face());
    FaceAudit audit;
    const ListAssignment M = filter_face(make_face_context(pg, sa, f), L, m_of(o), schedule_from_json(o),
                                         opt<std::uint64_t>(o, "seed", 0), &audit);
    Json j = lists_to_json(M);
    j["audit"] = face_audit_to_json(audit);
    emit(j, out);
  });
}

nonrep_status nonrep_run(const nonrep_graph* g, const nonrep_lists* l, const char* options, char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    const ListAssignment& L = need(l, "lists").l;
    const Json o = options_of(options);
    PipelineOptions po;
    po.m = m_of(o);
    po.schedule = schedule_from_json(o);
    po.seed = opt<std::uint64_t>(o, "seed", 0);
    if (o.contains("s") || o.contains("t")) po.poles = poles_of(o, pg);
    if (o.contains("keep")) po.square_keep = opt<std::size_t>(o, "keep", po.m);
    po.max_face_colors = opt<std::uint32_t>(o, "max_face_colors", 4);
    po.color_node_budget = opt<std::uint64_t>(o, "node_budget", 1'000'000);
    po.keep_face_audits = opt<bool>(o, "face_audits", false);
    const PipelineResult r = run(pg, L, po);
    const std::vector<Color> coloring = realize_coloring(pg, r.lists);
    Json j;
    j["m"] = po.m;
    j["seed"] = po.seed;
    j["schedule"] = po.schedule.is_guaranteed() ? "guaranteed" : "empirical";
    j["s"] = r.s;
    j["t"] = r.t;
    j["square_keep"] = r.square_keep;
    j["attempts"] = r.attempts;
    j["face_classes"] = face_coloring_to_json(r.face_colors);
    j["stages"] = stages_to_json(r.stages);
    j["lists"] = lists_to_json(r.lists)["lists"];
    j["coloring"] = coloring_to_json(coloring);
    j["certificate"] = {{"lists", verdict_to_json(check_list_assignment(pg, r.lists))},
                        {"coloring", verdict_to_json(check_coloring(pg, coloring))}};
    if (po.keep_face_audits) {
      Json faces = Json::array();
      for (const auto& a : r.faces) faces.push_back(face_audit_to_json(a));
      j["face_audits"] = faces;
    }
    emit(j, out);
  });
}

nonrep_status nonrep_verify(const nonrep_graph* g, const char* artifact, const char* options, int* certified,
                            char** out) {
  return guard([&] {
    const PlaneGraph& pg = need(g, "graph").g;
    if (!artifact) fail(ErrorCode::InvalidArgument, "artifact is null");
    const Json o = options_of(options);
    const Json a = parse_json(artifact);
    const auto level = opt<std::string>(o, "level", "lists");
    const auto cap = opt<std::size_t>(o, "max_witnesses", 16);
    Json j;
    bool ok = false;
    if (level == "coloring") {
      const Verdict v = check_coloring(pg, coloring_from_json(a, pg.vertex_count()), cap);
      ok = v.certified;
      j = verdict_to_json(v);
    } else if (level == "lists" || level == "square") {
      const ListAssignment L = lists_from_json(a, pg.vertex_count());
      if (level == "lists") {
        const Verdict v = check_list_assignment(pg, L, cap);
        ok = v.certified;
        j = verdict_to_json(v);
      } else {
        const SquareVerdict v = check_square_proper(pg, L, cap);
        ok = v.certified;
        j = square_verdict_to_json(v);
      }
    } else {
      fail(ErrorCode::InvalidArgument, "level must be coloring, lists or square");
    }
    Json r{{"level", level}};
    for (auto& [k, v] : j.items()) r[k] = v;
    if (certified) *certified = ok ? 1 : 0;
    emit(r, out);
  });
}

nonrep_status nonrep_schedule(const char* options, char** out) {
  return guard([&] {
    const Json o = options_of(options);
    const auto ms = opt<std::vector<std::uint64_t>>(o, "m", {1, 2, 3});
    const auto cap = opt<std::uint64_t>(o, "cap", 10'000'000);
    Json table = Json::array();
    for (std::uint64_t m : ms) {
      if (m == 0) fail(ErrorCode::InvalidArgument, "m must be positive");
      Json row{{"m", m}};
      Json f = Json::object();
      for (int i = 1; i <= 7; ++i) f["f" + std::to_string(i)] = schedule_eval(i, mpz_class(static_cast<unsigned long>(m))).get_str();
      row["values"] = f;
      const auto [stage, value] = first_infeasible_stage(m, cap);
      row["first_infeasible"] = stage == 0 ? Json(nullptr) : Json{{"stage", stage}, {"value", value.get_str()}};
      table.push_back(row);
    }
    Json deg = Json::object();
    for (int i = 1; i <= 8; ++i) deg["f" + std::to_string(i)] = schedule_degree(i);
    Json j{{"cap", cap}, {"table", table}, {"degrees", deg}};
    if (opt<bool>(o, "f8", false)) {
      const auto t0 = std::chrono::steady_clock::now();
      const F8Report r = f8_digit_count();
      j["f8"] = {{"digits", r.digits}, {"below_10_pow_4e7", r.below_abstract_bound}};
      if (opt<bool>(o, "timings", false)) j["f8"]["millis"] = millis_since(t0);
    }
    emit(j, out);
  });
}

nonrep_status nonrep_bench(const char* options, char** out) {
  return guard([&] {
    const Json o = options_of(options);
    const auto task = opt<std::string>(o, "task", "path");
    const auto seed = opt<std::uint64_t>(o, "seed", 0);
    const auto trials = opt<std::uint64_t>(o, "trials", 3);
    const std::size_t m = m_of(o);
    const bool timings = opt<bool>(o, "timings", false);
    Json probes = Json::array();
    std::size_t lo, hi;
    std::function<bool(std::size_t, Json&)> probe;
    if (task == "path") {
      const auto n = opt<std::size_t>(o, "n", 1000);
      const auto factor = opt<std::uint64_t>(o, "resample", 1000);
      lo = m;
      hi = 32 * m * m * m + 1;
      probe = [=](std::size_t k, Json& rec) {
        std::vector<Vertex> path(n);
        for (Vertex v = 0; v < n; ++v) path[v] = v;
        std::uint64_t resamples = 0;
        bool ok = true;
        for (std::uint64_t tr = 0; tr < trials && ok; ++tr) {
          const ListAssignment L = proper_path_lists(n, k, derive_seed(seed, tr));
          PathStats st;
          try {
            const ListAssignment M = nonrep_filter_path(path, L, m, derive_seed(seed, 100 + tr), factor, &st);
            ok = !find_feasible_repetition(path, M).has_value();
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ResampleBudgetExceeded && e.code() != ErrorCode::InsufficientColors) throw;
            ok = false;
          }
          resamples += st.resamples;
        }
        rec["resamples"] = resamples;
        return ok;
      };
    } else if (task == "pipeline") {
      const auto n = opt<std::size_t>(o, "n", 30);
      const auto kind = parse_gen_kind(opt<std::string>(o, "kind", "maximal-planar"));
      if (!kind) fail(ErrorCode::InvalidArgument, "unknown generator kind");
      lo = m;
      hi = opt<std::size_t>(o, "max_budget", 1024 * m);
      probe = [=](std::size_t k, Json& rec) {
        bool ok = true;
        std::uint64_t attempts = 0;
        for (std::uint64_t tr = 0; tr < trials && ok; ++tr) {
          const PlaneGraph pg = generate(*kind, n, derive_seed(seed, tr));
          PipelineOptions po;
          po.m = m;
          po.seed = derive_seed(seed, 100 + tr);
          try {
            const PipelineResult r = run(pg, ListAssignment::uniform(n, k), po);
            attempts += r.attempts;
            ok = check_list_assignment(pg, r.lists).certified;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ResampleBudgetExceeded && e.code() != ErrorCode::InsufficientColors) throw;
            ok = false;
          }
        }
        rec["attempts"] = attempts;
        return ok;
      };
    } else {
      fail(ErrorCode::InvalidArgument, "bench task must be path or pipeline");
    }
    // Smallest passing size by binary search; hi must pass.
    auto run_probe = [&](std::size_t k) {
      Json rec{{"size", k}};
      const auto t0 = std::chrono::steady_clock::now();
      const bool ok = probe(k, rec);
      rec["certified"] = ok;
      if (timings) rec["millis"] = millis_since(t0);
      probes.push_back(rec);
      return ok;
    };
    std::optional<std::size_t> best;
    if (run_probe(hi)) {
      best = hi;
      while (lo < *best) {
        const std::size_t mid = lo + (*best - lo) / 2;
        if (run_probe(mid)) best = mid;
        else lo = mid + 1;
      }
    }
    Json j{{"task", task}, {"m", m}, {"seed", seed}, {"trials", trials}};
    j["minimal_size"] = best ? Json(*best) : Json(nullptr);
    j["probes"] = probes;
    emit(j, out);
  });
}

}  // extern "C"
