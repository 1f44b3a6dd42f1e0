// evc: command-line front end for the solver, characterization, defense engine,
// gadgets and the HTTP session server.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "evc/characterization.hpp"
#include "evc/errors.hpp"
#include "evc/gadgets.hpp"
#include "evc/http_server.hpp"
#include "evc/json_io.hpp"
#include "evc/structure.hpp"

namespace {

using namespace evc;

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kLimit = 3, kUndetermined = 4, kDefenseImpossible = 5 };

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// INPUT is a file path, "-" for an edge list on stdin, or builtin:NAME.
GraphDocument load(const std::string& input) {
  const std::string builtin = "builtin:";
  if (input.rfind(builtin, 0) == 0) return {builtin_instance(input.substr(builtin.size())), std::nullopt};
  return parse_document(read_file(input), format_for_path(input));
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct ClassFFlags {
  bool assume = false;
  bool exhaustive = false;

  ClassFMode mode() const {
    if (assume) return ClassFMode::assume;
    return exhaustive ? ClassFMode::exhaustive : ClassFMode::sufficient;
  }
};

void add_class_f_flags(CLI::App* cmd, ClassFFlags& f) {
  auto* a = cmd->add_flag("--assume-class-f", f.assume, "Treat the input as a class-F graph without checking");
  auto* e = cmd->add_flag("--exhaustive-class-check", f.exhaustive, "Certify class F by enumerating minimum covers");
  a->excludes(e);
}

int cmd_mvc(const std::string& input, bool chordal, const std::string& forced_csv, bool table,
            const SolverLimits& limits) {
  Graph g = load(input).graph;
  VertexSet forced = g.labels_to_set(split_labels(forced_csv));
  if (chordal && !is_chordal(g.without(forced)).chordal)
    throw PreconditionError("--chordal needs a chordal graph once the forced vertices are removed");
  CoverResult r = mvc_forced(g, forced, chordal ? SolverMode::polynomial : SolverMode::exact, limits);
  if (table) {
    std::cout << "size\t" << r.size << "\n";
    std::cout << "cover\t";
    for (const auto& l : g.set_to_labels(r.cover)) std::cout << l << ' ';
    std::cout << "\n";
  } else {
    std::cout << cover_json(g, r).dump() << "\n";
  }
  return kOk;
}

int cmd_evc(const std::string& input, bool exact, bool char_mode, const ClassFFlags& flags,
            const SolverLimits& limits) {
  Graph g = load(input).graph;
  if (!exact && !char_mode) {
    bool fast = g.order() >= 2 && is_connected(g) && is_biconnected(g) && is_chordal(g).chordal;
    char_mode = fast || flags.assume || flags.exhaustive;
  }
  if (!char_mode) {
    std::cout << evc_result_json(g, evc_exact(g, limits)).dump() << "\n";
    return kOk;
  }
  CharReport report = characterize(g, flags.mode(), SolverMode::polynomial, limits);
  std::cout << char_report_json(g, report).dump() << "\n";
  return report.verdict == Verdict::undetermined ? kUndetermined : kOk;
}

struct Script {
  std::vector<std::string> start;
  std::vector<std::pair<std::string, std::string>> attacks;
};

/// Lines: "start a b c", "attack u v"; '#' starts a comment line.
Script parse_script(const std::string& text) {
  Script s;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::string cmd;
    if (!(words >> cmd) || cmd[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    if (cmd == "start" && !args.empty()) {
      s.start = args;
    } else if (cmd == "attack" && args.size() == 2) {
      s.attacks.emplace_back(args[0], args[1]);
    } else {
      throw ParseError("expected 'start v...' or 'attack u v'", number, 1);
    }
  }
  return s;
}

void print_round(const Graph& g, const RoundRecord& r) { std::cout << round_json(g, r).dump() << "\n"; }

int cmd_defend(const std::string& input, bool interactive, int rounds, std::uint64_t seed,
               const std::string& script_path, const std::string& start_csv, const ClassFFlags& flags,
               const SolverLimits& limits) {
  Graph g = load(input).graph;
  Script script;
  if (!script_path.empty()) script = parse_script(read_file(script_path));
  if (!start_csv.empty()) script.start = split_labels(start_csv);

  CharReport report = characterize(g, flags.mode(), SolverMode::exact, limits);
  const bool playable = report.verdict == Verdict::evc_equals_mvc ||
                        (report.verdict == Verdict::evc_equals_mvc_plus_1 && report.biconnected);
  if (!playable) {
    std::cerr << "evc: no certified defense strategy (verdict " << to_string(report.verdict) << ")\n";
    return kUndetermined;
  }
  std::optional<Configuration> start;
  if (!script.start.empty()) start = g.labels_to_set(script.start);
  DefenseSession session = DefenseSession::create(g, report, start, SolverMode::exact, limits);
  std::cerr << "evc: mode " << to_string(session.mode()) << ", start";
  for (const auto& l : g.set_to_labels(session.config())) std::cerr << ' ' << l;
  std::cerr << "\n";

  if (interactive) {
    std::string line;
    while (std::getline(std::cin, line)) {
      std::istringstream words(line);
      std::string cmd, a, b;
      if (!(words >> cmd) || cmd[0] == '#') continue;
      if (cmd == "quit") break;
      if (cmd != "attack" || !(words >> a >> b)) {
        std::cerr << "evc: expected 'attack u v' or 'quit'\n";
        continue;
      }
      auto u = g.find(a), v = g.find(b);
      if (!u || !v || !g.adjacent(*u, *v)) {
        std::cerr << "evc: " << a << ' ' << b << " is not an edge\n";
        continue;
      }
      print_round(g, session.defend(*u, *v));
      std::cout.flush();
    }
    return kOk;
  }

  if (!script.attacks.empty()) {
    for (const auto& [a, b] : script.attacks) {
      Vertex u = g.id(a), v = g.id(b);
      if (!g.adjacent(u, v)) throw GraphError("script attacks non-edge '" + a + "' - '" + b + "'");
      print_round(g, session.defend(u, v));
    }
    return kOk;
  }

  std::vector<Edge> edges = g.edges();
  if (edges.empty()) throw PreconditionError("graph has no edges to attack");
  std::mt19937_64 rng(seed);
  for (int r = 0; r < rounds; ++r) {
    const Edge& e = edges[rng() % edges.size()];
    bool flip = (rng() & 1) != 0;
    print_round(g, flip ? session.defend(e.v, e.u) : session.defend(e.u, e.v));
  }
  return kOk;
}

struct GadgetArgs {
  std::string kind;
  std::string input;
  std::string edge;
  int n = 5;
  double density = 0.5;
  std::uint64_t seed = 1;
};

int cmd_gadget(const GadgetArgs& a) {
  auto need_input = [&]() {
    if (a.input.empty()) throw PreconditionError("gadget '" + a.kind + "' needs an input graph");
    return load(a.input);
  };
  std::optional<GadgetOutput> out;
  Graph plain;
  if (a.kind == "universal") {
    out = add_universal_vertex(need_input().graph);
  } else if (a.kind == "triangulate") {
    GraphDocument doc = need_input();
    if (!doc.embedding) throw PreconditionError("triangulate needs a JSON input with faces");
    out = triangulate_faces(doc.graph, *doc.embedding);
  } else if (a.kind == "double") {
    Graph g = need_input().graph;
    auto ends = split_labels(a.edge);
    if (ends.size() != 2) throw PreconditionError("double needs --edge u,v");
    out = double_and_join(g, g.id(ends[0]), g.id(ends[1]));
  } else if (a.kind == "fig4") {
    plain = fig4_instance();
  } else if (a.kind == "two-triangles") {
    plain = two_triangles();
  } else if (a.kind == "path") {
    plain = path_graph(a.n);
  } else if (a.kind == "cycle") {
    plain = cycle_graph(a.n);
  } else if (a.kind == "complete") {
    plain = complete_graph(a.n);
  } else if (a.kind == "random-chordal") {
    plain = random_connected_chordal(a.n, a.density, a.seed);
  } else if (a.kind == "random-biconnected-chordal") {
    plain = random_biconnected_chordal(a.n, a.density, a.seed);
  } else if (a.kind == "random-connected") {
    plain = random_connected(a.n, a.density, a.seed);
  } else {
    throw PreconditionError("unknown gadget '" + a.kind + "'");
  }
  if (out) {
    std::cerr << "evc: " << out->new_vertices.size() << " new vertices, size identity " << out->size_identity.describe()
              << "\n";
    plain = out->graph;
  }
  std::cout << to_json_text(plain) << "\n";
  return kOk;
}

int cmd_serve(const std::string& host, int port, const std::string& static_dir, const SolverLimits& limits) {
  SessionService service(limits);
  HttpServer server(service, static_dir);
  std::cerr << "evc: listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "evc: cannot listen on " << host << ":" << port << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eternal vertex cover workbench"};
  app.require_subcommand(1);
  std::string limits_text;
  app.add_option("--limits", limits_text, "Solver caps, e.g. exact=24,enum=16 (overrides EVC_LIMITS)");

  std::string input;
  auto* mvc = app.add_subcommand("mvc", "Minimum vertex cover");
  bool chordal = false, table = false;
  std::string forced;
  mvc->add_option("input", input, "Graph file (.json or edge list), '-' or builtin:NAME")->required();
  mvc->add_flag("--chordal", chordal, "Use the perfect elimination ordering solver");
  mvc->add_option("--forced", forced, "Comma-separated vertices the cover must contain");
  mvc->add_flag("--table", table, "Plain-text output");

  auto* evc_cmd = app.add_subcommand("evc", "Eternal vertex cover number");
  bool exact = false, char_mode = false;
  ClassFFlags evc_flags;
  evc_cmd->add_option("input", input, "Graph file")->required();
  auto* ex = evc_cmd->add_flag("--exact", exact, "Fixed-point game solver");
  auto* ch = evc_cmd->add_flag("--char", char_mode, "Characterization report");
  ex->excludes(ch);
  add_class_f_flags(evc_cmd, evc_flags);

  auto* defend = app.add_subcommand("defend", "Run the defense engine");
  bool interactive = false;
  int rounds = 100;
  std::uint64_t seed = 1;
  std::string script, start;
  ClassFFlags defend_flags;
  defend->add_option("input", input, "Graph file")->required();
  auto* inter = defend->add_flag("--interactive", interactive, "Read 'attack u v' lines from stdin");
  auto* rr = defend->add_option("--random-rounds", rounds, "Number of random attacks");
  defend->add_option("--seed", seed, "Seed for random attacks");
  auto* sc = defend->add_option("--script", script, "Script file with start/attack lines");
  defend->add_option("--start", start, "Comma-separated starting configuration");
  inter->excludes(rr)->excludes(sc);
  rr->excludes(sc);
  add_class_f_flags(defend, defend_flags);

  auto* gadget = app.add_subcommand("gadget", "Build a gadget or generated instance");
  GadgetArgs gargs;
  gadget->add_option("kind", gargs.kind,
                     "universal | triangulate | double | fig4 | two-triangles | path | cycle | complete | "
                     "random-chordal | random-biconnected-chordal | random-connected")
      ->required();
  gadget->add_option("input", gargs.input, "Input graph for universal/triangulate/double");
  gadget->add_option("--edge", gargs.edge, "Outer edge u,v for double");
  gadget->add_option("-n,--n", gargs.n, "Vertex count for generators");
  gadget->add_option("--density", gargs.density, "Edge density for random generators");
  gadget->add_option("--seed", gargs.seed, "Seed for random generators");

  auto* serve = app.add_subcommand("serve", "HTTP session server");
  std::string host = "127.0.0.1", static_dir;
  int port = 8080;
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--static", static_dir, "Directory with the web client");

  CLI11_PARSE(app, argc, argv);

  try {
    SolverLimits limits = limits_text.empty() ? SolverLimits::from_env() : SolverLimits::parse(limits_text);
    if (*mvc) return cmd_mvc(input, chordal, forced, table, limits);
    if (*evc_cmd) return cmd_evc(input, exact, char_mode, evc_flags, limits);
    if (*defend)
      return cmd_defend(input, interactive, interactive || !script.empty() ? 0 : rounds, seed, script, start,
                        defend_flags, limits);
    if (*gadget) return cmd_gadget(gargs);
    if (*serve) return cmd_serve(host, port, static_dir, limits);
  } catch (const ParseError& e) {
    std::cerr << "evc: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const GraphError& e) {
    std::cerr << "evc: " << e.what() << "\n";
    return kParse;
  } catch (const LimitError& e) {
    std::cerr << "evc: " << e.what() << "\n";
    return kLimit;
  } catch (const DefenseImpossible& e) {
    std::cerr << "evc: " << e.what() << "\n";
    return kDefenseImpossible;
  } catch (const std::exception& e) {
    std::cerr << "evc: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
