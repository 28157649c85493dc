// Command-line front end over the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "nonrep/nonrep.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kCertified = 0, kUnexpected = 1, kNotCertified = 2, kBudget = 3, kInput = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(nonrep_status s) {
  switch (s) {
    case NONREP_OK: return kCertified;
    case NONREP_INSUFFICIENT_COLORS:
    case NONREP_RESAMPLE_BUDGET_EXCEEDED:
    case NONREP_GUARANTEED_MODE_INFEASIBLE: return kBudget;
    case NONREP_INTERNAL: return kUnexpected;
    default: return kInput;
  }
}

void check(nonrep_status s) {
  if (s != NONREP_OK) throw Failure{exit_for(s), nonrep_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GraphDeleter {
  void operator()(nonrep_graph* g) const { nonrep_graph_free(g); }
};
struct ListsDeleter {
  void operator()(nonrep_lists* l) const { nonrep_lists_free(l); }
};
using GraphPtr = std::unique_ptr<nonrep_graph, GraphDeleter>;
using ListsPtr = std::unique_ptr<nonrep_lists, ListsDeleter>;

GraphPtr load_graph(const std::string& path) {
  nonrep_graph* g = nullptr;
  check(nonrep_graph_from_json(read_file(path).c_str(), &g));
  return GraphPtr(g);
}

std::uint64_t vertex_count(const nonrep_graph* g) {
  std::uint64_t n = 0;
  check(nonrep_graph_counts(g, &n, nullptr, nullptr));
  return n;
}

// Output sink shared by all subcommands.
struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{kInput, "cannot write " + path};
    out << text;
  }
};

// Takes ownership of a string produced by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  nonrep_string_free(s);
  return out;
}

struct ListSource {
  std::string file;
  std::uint64_t size = 0;
  std::uint64_t universe = 0;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--lists", file, "List assignment JSON");
    app->add_option("--list-size", size, "Generate lists of this size instead of reading --lists");
    app->add_option("--universe", universe, "Color universe for generated lists (default: list size)");
    app->add_option("--list-seed", seed, "Seed for generated lists");
  }

  ListsPtr load(std::uint64_t n) const {
    nonrep_lists* l = nullptr;
    if (!file.empty()) {
      check(nonrep_lists_from_json(read_file(file).c_str(), n, &l));
    } else if (size > 0) {
      check(nonrep_lists_random(n, size, universe ? universe : size, seed, &l));
    } else {
      throw Failure{kInput, "give --lists or --list-size"};
    }
    return ListsPtr(l);
  }
};

struct Common {
  std::uint64_t m = 1;
  std::uint64_t seed = 0;
  std::string schedule = "empirical";
  std::vector<std::string> budget;
  std::optional<std::uint32_t> s, t;

  void add_m(CLI::App* app) { app->add_option("--m", m, "Target list size")->check(CLI::PositiveNumber); }
  void add_seed(CLI::App* app) { app->add_option("--seed", seed, "Random seed"); }
  void add_schedule(CLI::App* app) {
    app->add_option("--schedule", schedule, "List-size schedule")->check(CLI::IsMember({"empirical", "guaranteed"}));
    app->add_option("--budget", budget, "Budget override key=value (cap, carry, straddle, fresh, red, path, resample, attempts)");
  }
  void add_poles(CLI::App* app) {
    app->add_option("--s", s, "First pole (default: smallest adjacent pair on the external face)");
    app->add_option("--t", t, "Second pole");
  }

  Json options() const {
    Json o;
    o["m"] = m;
    o["seed"] = seed;
    o["schedule"] = schedule;
    Json b = Json::object();
    for (const auto& kv : budget) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw Failure{kInput, "budget override must look like key=value: " + kv};
      try {
        b[kv.substr(0, eq)] = std::stoull(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw Failure{kInput, "bad budget value in " + kv};
      }
    }
    o["budget"] = b;
    if (s) o["s"] = *s;
    if (t) o["t"] = *t;
    return o;
  }
};

std::vector<std::uint32_t> parse_ids(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw Failure{kInput, "bad vertex id '" + item + "'"};
    }
  }
  return out;
}

bool certified_field(const std::string& json, const char* key) {
  const Json j = Json::parse(json);
  if (key == nullptr) return j.value("certified", false);
  return j.contains(key) && j[key].value("certified", false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facially non-repetitive list filtering of plane graphs"};
  app.require_subcommand(1);
  Output out;
  Common c;
  ListSource src;
  std::string graph_file;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out.path, "Output file (default: stdout)"); };
  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", graph_file, "Graph JSON")->required(); };

  std::function<int()> action;

  // gen
  std::string kind = "maximal-planar", format = "json";
  std::uint64_t n = 10;
  auto* gen = app.add_subcommand("gen", "Generate a plane graph");
  gen->add_option("--kind", kind, "cycle, maximal-planar, stacked, bowtie-chain, random-connected, random-biconnected, tree");
  gen->add_option("--n", n, "Vertex count (bowtie-chain: number of cut vertices)");
  c.add_seed(gen);
  gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  add_out(gen);
  gen->callback([&] {
    action = [&] {
      nonrep_graph* g = nullptr;
      check(nonrep_graph_generate(kind.c_str(), n, c.seed, &g));
      GraphPtr hold(g);
      char* text = nullptr;
      check(format == "dot" ? nonrep_graph_to_dot(g, &text) : nonrep_graph_to_json(g, &text));
      out.write(take(text));
      return kCertified;
    };
  });

  // Graph-only reports.
  auto graph_report = [&](const char* name, const char* help, auto fn, bool poles) {
    auto* sub = app.add_subcommand(name, help);
    add_graph(sub);
    if (poles) c.add_poles(sub);
    add_out(sub);
    sub->callback([&, fn] {
      action = [&, fn] {
        GraphPtr g = load_graph(graph_file);
        char* text = nullptr;
        check(fn(g.get(), c.options().dump().c_str(), &text));
        out.write(take(text));
        return kCertified;
      };
    });
    return sub;
  };
  graph_report("faces", "Trace faces", [](const nonrep_graph* g, const char*, char** o) { return nonrep_faces(g, o); }, false);
  graph_report("orient", "Bipolar orientation", nonrep_orient, true);
  graph_report("special", "Special and regular vertices per face", nonrep_special, true);
  std::uint32_t max_colors = 4;
  std::uint64_t node_budget = 1'000'000;
  auto* cf = app.add_subcommand("color-faces", "Color the face conflict graph");
  add_graph(cf);
  c.add_poles(cf);
  cf->add_option("--max-colors", max_colors, "Colors tried by the exact search");
  cf->add_option("--node-budget", node_budget, "Search nodes before the 5-coloring fallback");
  add_out(cf);
  cf->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(graph_file);
      Json o = c.options();
      o["max_colors"] = max_colors;
      o["node_budget"] = node_budget;
      char* text = nullptr;
      check(nonrep_color_faces(g.get(), o.dump().c_str(), &text));
      out.write(take(text));
      return kCertified;
    };
  });

  // filter-proper
  auto* fp = app.add_subcommand("filter-proper", "Proper m-list filtering (5m lists)");
  add_graph(fp);
  src.add(fp);
  c.add_m(fp);
  add_out(fp);
  fp->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(graph_file);
      ListsPtr l = src.load(vertex_count(g.get()));
      char* text = nullptr;
      check(nonrep_filter_proper(g.get(), l.get(), c.options().dump().c_str(), &text));
      out.write(take(text));
      return kCertified;
    };
  });

  // filter-square
  std::optional<std::uint64_t> keep;
  bool decomposition = false;
  auto* fs = app.add_subcommand("filter-square", "Facially-square-proper filtering (125k lists)");
  add_graph(fs);
  src.add(fs);
  c.add_m(fs);
  fs->add_option("--keep", keep, "Colors kept per vertex (default m)");
  fs->add_flag("--decomposition", decomposition, "Include the three-class decomposition");
  add_out(fs);
  fs->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(graph_file);
      ListsPtr l = src.load(vertex_count(g.get()));
      Json o = c.options();
      if (keep) o["keep"] = *keep;
      o["decomposition"] = decomposition;
      char* text = nullptr;
      check(nonrep_filter_square(g.get(), l.get(), o.dump().c_str(), &text));
      const std::string s = take(text);
      out.write(s);
      return certified_field(s, "certificate") ? kCertified : kNotCertified;
    };
  });

  // filter-path
  std::string path_ids;
  std::uint64_t path_n = 0, resample = 1'000'000;
  auto* fpath = app.add_subcommand("filter-path", "Non-repetitive filtering of a path");
  src.add(fpath);
  fpath->add_option("--path", path_ids, "Comma-separated vertex ids (default: all vertices in order)");
  fpath->add_option("--n", path_n, "Number of vertices when lists are generated");
  fpath->add_option("--resample", resample, "Redraw budget factor per vertex");
  c.add_m(fpath);
  c.add_seed(fpath);
  add_out(fpath);
  fpath->callback([&] {
    action = [&] {
      std::uint64_t count = path_n;
      std::vector<std::uint32_t> ids = parse_ids(path_ids);
      for (auto v : ids) count = std::max<std::uint64_t>(count, v + 1);
      ListsPtr l = src.load(count);
      Json o = c.options();
      if (!ids.empty()) o["path"] = ids;
      o["resample"] = resample;
      char* text = nullptr;
      check(nonrep_filter_path(l.get(), o.dump().c_str(), &text));
      const std::string s = take(text);
      out.write(s);
      return certified_field(s, nullptr) ? kCertified : kNotCertified;
    };
  });

  // filter-walk
  std::string walk_ids;
  std::optional<std::uint32_t> face;
  std::uint64_t cut = 0;
  auto* fw = app.add_subcommand("filter-walk", "Non-repetitive filtering of a facial walk");
  fw->add_option("--graph", graph_file, "Graph JSON (with --face)");
  fw->add_option("--face", face, "Face id whose walk is filtered");
  fw->add_option("--cut", cut, "Occurrence where the closed walk is opened");
  fw->add_option("--walk", walk_ids, "Comma-separated walk (instead of --face)");
  src.add(fw);
  c.add_m(fw);
  c.add_seed(fw);
  c.add_schedule(fw);
  add_out(fw);
  fw->callback([&] {
    action = [&] {
      GraphPtr g;
      std::uint64_t count = 0;
      Json o = c.options();
      if (face) {
        if (graph_file.empty()) throw Failure{kInput, "--face needs --graph"};
        g = load_graph(graph_file);
        count = vertex_count(g.get());
        o["face"] = *face;
        o["cut"] = cut;
      } else {
        const auto ids = parse_ids(walk_ids);
        if (ids.empty()) throw Failure{kInput, "give --walk or --graph with --face"};
        for (auto v : ids) count = std::max<std::uint64_t>(count, v + 1);
        o["walk"] = ids;
      }
      ListsPtr l = src.load(count);
      char* text = nullptr;
      check(nonrep_filter_walk(g.get(), l.get(), o.dump().c_str(), &text));
      out.write(take(text));
      return kCertified;
    };
  });

  // filter-face
  auto* ff = app.add_subcommand("filter-face", "Face filtering of one face");
  add_graph(ff);
  ff->add_option("--face", face, "Face id (default: external face)");
  src.add(ff);
  c.add_m(ff);
  c.add_seed(ff);
  c.add_schedule(ff);
  c.add_poles(ff);
  add_out(ff);
  ff->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(graph_file);
      ListsPtr l = src.load(vertex_count(g.get()));
      Json o = c.options();
      if (face) o["face"] = *face;
      char* text = nullptr;
      check(nonrep_filter_face(g.get(), l.get(), o.dump().c_str(), &text));
      out.write(take(text));
      return kCertified;
    };
  });

  // run
  bool face_audits = false;
  auto* rn = app.add_subcommand("run", "Full pipeline with certificate");
  add_graph(rn);
  src.add(rn);
  c.add_m(rn);
  c.add_seed(rn);
  c.add_schedule(rn);
  c.add_poles(rn);
  rn->add_option("--keep", keep, "Square-stage list size (default: smallest list / 125)");
  rn->add_option("--max-face-colors", max_colors, "Colors tried for the face conflict graph");
  rn->add_flag("--face-audits", face_audits, "Include per-face audits");
  add_out(rn);
  rn->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(graph_file);
      ListsPtr l = src.load(vertex_count(g.get()));
      Json o = c.options();
      if (keep) o["keep"] = *keep;
      o["max_face_colors"] = max_colors;
      o["face_audits"] = face_audits;
      char* text = nullptr;
      check(nonrep_run(g.get(), l.get(), o.dump().c_str(), &text));
      const std::string s = take(text);
      out.write(s);
      const Json j = Json::parse(s);
      const bool ok = j["certificate"]["lists"]["certified"].get<bool>() &&
                      j["certificate"]["coloring"]["certified"].get<bool>();
      return ok ? kCertified : kNotCertified;
    };
  });

  // verify
  std::string input, level = "lists";
  std::uint64_t max_witnesses = 16;
  auto* vf = app.add_subcommand("verify", "Certify a coloring or list assignment");
  add_graph(vf);
  vf->add_option("--input", input, "Coloring or lists JSON (a run output also works)")->required();
  vf->add_option("--level", level, "coloring, lists or square")->check(CLI::IsMember({"coloring", "lists", "square"}));
  vf->add_option("--max-witnesses", max_witnesses, "Witnesses reported at most");
  add_out(vf);
  vf->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(graph_file);
      const Json o{{"level", level}, {"max_witnesses", max_witnesses}};
      int ok = 0;
      char* text = nullptr;
      check(nonrep_verify(g.get(), read_file(input).c_str(), o.dump().c_str(), &ok, &text));
      out.write(take(text));
      return ok ? kCertified : kNotCertified;
    };
  });

  // schedule
  std::vector<std::uint64_t> ms{1, 2, 3};
  bool f8 = false, timings = false;
  std::uint64_t cap = 10'000'000;
  auto* sc = app.add_subcommand("schedule", "Exact list-size ladder");
  sc->add_option("--m", ms, "Values of m")->delimiter(',');
  sc->add_option("--cap", cap, "Representability cap");
  sc->add_flag("--f8", f8, "Also count the decimal digits of f8(1)");
  sc->add_flag("--timings", timings, "Include wall-clock times (output no longer reproducible)");
  add_out(sc);
  sc->callback([&] {
    action = [&] {
      const Json o{{"m", ms}, {"cap", cap}, {"f8", f8}, {"timings", timings}};
      char* text = nullptr;
      check(nonrep_schedule(o.dump().c_str(), &text));
      out.write(take(text));
      return kCertified;
    };
  });

  // bench
  std::string task = "path", csv, bench_kind = "maximal-planar";
  std::uint64_t trials = 3, bench_n = 0, max_budget = 0;
  auto* bn = app.add_subcommand("bench", "Search the smallest empirically sufficient list size");
  bn->add_option("--task", task, "path or pipeline")->check(CLI::IsMember({"path", "pipeline"}));
  bn->add_option("--n", bench_n, "Instance size");
  bn->add_option("--kind", bench_kind, "Generator for the pipeline task");
  bn->add_option("--trials", trials, "Instances per probe");
  bn->add_option("--max-budget", max_budget, "Upper end of the pipeline search");
  bn->add_option("--csv", csv, "Also write probes with timings as CSV");
  c.add_m(bn);
  c.add_seed(bn);
  add_out(bn);
  bn->callback([&] {
    action = [&] {
      Json o{{"task", task}, {"m", c.m}, {"seed", c.seed}, {"trials", trials}, {"kind", bench_kind}};
      if (bench_n) o["n"] = bench_n;
      if (max_budget) o["max_budget"] = max_budget;
      char* text = nullptr;
      check(nonrep_bench(o.dump().c_str(), &text));
      const std::string s = take(text);
      out.write(s);
      const Json j = Json::parse(s);
      std::cerr << "bench " << task << ": minimal size " << j["minimal_size"].dump() << " after "
                << j["probes"].size() << " probes\n";
      if (!csv.empty()) {
        o["timings"] = true;
        char* timed = nullptr;
        check(nonrep_bench(o.dump().c_str(), &timed));
        const Json t = Json::parse(take(timed));
        std::ofstream f(csv);
        if (!f) throw Failure{kInput, "cannot write " + csv};
        f << "size,certified,millis\n";
        for (const auto& p : t["probes"]) f << p["size"] << ',' << (p["certified"].get<bool>() ? 1 : 0) << ',' << p["millis"] << '\n';
        for (const auto& p : t["probes"])
          std::cerr << "  size " << p["size"] << (p["certified"].get<bool>() ? " ok " : " fail ") << p["millis"] << " ms\n";
      }
      return kCertified;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }
  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnexpected;
  }
}
