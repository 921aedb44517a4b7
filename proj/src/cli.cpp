#include "oneplanar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oneplanar/bounds.hpp"
#include "oneplanar/canon.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/lex.hpp"
#include "oneplanar/one_planarity.hpp"
#include "oneplanar/planarity.hpp"
#include "oneplanar/quadgen.hpp"
#include "oneplanar/verify.hpp"

namespace oneplanar::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& s) {
  std::ostringstream os;
  os << s.rdbuf();
  return os.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return slurp(in);
  fs::path p(path);
  if (!fs::exists(p)) {
    if (const char* dir = std::getenv("ONEPLANAR_FIXTURES")) {
      fs::path alt = fs::path(dir) / path;
      if (fs::exists(alt)) p = alt;
    }
  }
  std::ifstream f(p, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return slurp(f);
}

// ParseError messages already carry the byte offset; prefix the source.
template <class F>
auto parse_from(const std::string& path, std::istream& in, F&& parse) {
  const std::string text = read_source(path, in);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError((path.empty() ? std::string("<stdin>") : path) + ": " + e.what());
  } catch (const GraphError& e) {
    throw UsageError((path.empty() ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

Graph read_graph(const std::string& path, std::istream& in) {
  return parse_from(path, in, [](const std::string& t) { return parse_graph_any(t); });
}

OnePlaneDrawing read_drawing(const std::string& path, std::istream& in) {
  return parse_from(path, in, [](const std::string& t) { return parse_1pd(t); });
}

std::string emit_graph(const Graph& g, const std::string& to) { return to == "edges" ? emit_edge_list(g) : emit_graph6(g) + "\n"; }

std::string join(const std::vector<Vertex>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

json checks_json(const DrawingReport& r) {
  json a = json::array();
  for (const auto& c : r.checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
  return a;
}

json factorization_json(const LexFactorization& f) {
  json classes = json::array();
  for (const auto& c : f.classes) classes.push_back(c);
  return {{"left", emit_graph6(f.left)}, {"right", emit_graph6(f.right)}, {"classes", classes}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal 1-planar graphs and lexicographic products", "oneplanar"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  SearchBudget budget;
  int jobs = 1;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--budget-nodes", budget.max_nodes, "Search node ceiling (0 = operation default)");
  app.add_option("--budget-seconds", budget.max_seconds, "Search time ceiling in seconds (0 = operation default)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized drivers")->capture_default_str();
  auto want_json = [&] { return format == "json"; };

  std::function<int()> action;

  // lexprod
  std::string left_path, right_path, to = "g6";
  auto* lexprod = app.add_subcommand("lexprod", "Lexicographic product of two graphs");
  lexprod->add_option("--left", left_path, "Left factor G")->required();
  lexprod->add_option("--right", right_path, "Right factor H")->required();
  lexprod->add_option("--to", to, "Output format")->check(CLI::IsMember({"g6", "edges"}))->capture_default_str();
  lexprod->callback([&] {
    action = [&]() -> int {
      Graph p = lex_product(read_graph(left_path, in), read_graph(right_path, in));
      out << emit_graph(p, to);
      return kOk;
    };
  });

  // lexfact
  std::string graph_path;
  bool unpruned = false, first_only = false;
  auto* lexfact = app.add_subcommand("lexfact", "All factorizations G = G1∘G2 with non-trivial factors");
  lexfact->add_option("graph", graph_path, "Graph file (graph6 or edge list); stdin if omitted");
  lexfact->add_flag("--unpruned", unpruned, "Enumerate all partitions without module pruning");
  lexfact->add_flag("--first", first_only, "Stop at the first factorization");
  lexfact->callback([&] {
    action = [&]() -> int {
      Graph g = read_graph(graph_path, in);
      LexSearchOptions opts;
      opts.prune = !unpruned;
      opts.first_only = first_only;
      auto fs = lex_factorizations(g, opts);
      if (want_json()) {
        json a = json::array();
        for (const auto& f : fs) a.push_back(factorization_json(f));
        out << json{{"graph6", emit_graph6(g)}, {"reducible", !fs.empty()}, {"factorizations", a}}.dump(2) << '\n';
      } else if (fs.empty()) {
        out << "irreducible\n";
      } else {
        out << "reducible: " << fs.size() << " factorization" << (fs.size() == 1 ? "" : "s") << '\n';
        for (const auto& f : fs) out << '\n' << f.to_text();
      }
      return kOk;
    };
  });

  // check1p
  bool use_oracle = false, no_drawing = false;
  auto* check1p = app.add_subcommand("check1p", "Decide 1-planarity; prints a witness drawing on success");
  check1p->add_option("graph", graph_path, "Graph file; stdin if omitted");
  check1p->add_flag("--crossing-sets", use_oracle, "Use the crossing-set search (no witness drawing)");
  check1p->add_flag("--no-drawing", no_drawing, "Omit the witness drawing");
  check1p->callback([&] {
    action = [&]() -> int {
      Graph g = read_graph(graph_path, in);
      OnePlanarVerdict v = use_oracle ? crossing_set_one_planar(g, budget) : is_one_planar(g, budget);
      if (want_json()) {
        json j{{"verdict", to_string(v.status)}, {"reason", v.reason}, {"nodes", v.stats.nodes}, {"seconds", v.stats.seconds}};
        if (v.witness && !no_drawing) j["drawing"] = emit_1pd(*v.witness);
        out << j.dump(2) << '\n';
      } else {
        out << to_string(v.status) << ": " << v.reason << '\n';
        if (v.witness && !no_drawing) out << emit_1pd(*v.witness);
      }
      return v.status == Verdict::Yes ? kOk : v.status == Verdict::No ? kViolated : kBudget;
    };
  });

  // enumdraw
  EnumerationLimits limits;
  bool count_only = false;
  auto* enumdraw = app.add_subcommand("enumdraw", "All 1-plane drawings up to sphere homeomorphism");
  enumdraw->add_option("graph", graph_path, "Graph file; stdin if omitted");
  enumdraw->add_option("--max-n", limits.max_n, "Vertex ceiling")->capture_default_str();
  enumdraw->add_option("--max-m", limits.max_m, "Edge ceiling")->capture_default_str();
  enumdraw->add_flag("--count", count_only, "Print only the number of drawings");
  enumdraw->callback([&] {
    action = [&]() -> int {
      Graph g = read_graph(graph_path, in);
      limits.budget = budget;
      DrawingCatalog cat;
      try {
        cat = enumerate_drawings(g, limits);
      } catch (const LimitError& e) {
        throw UsageError(e.what());
      }
      if (want_json()) {
        json a = json::array();
        if (!count_only)
          for (const auto& d : cat.drawings) a.push_back(emit_1pd(d));
        json j{{"drawings", cat.drawings.size()}, {"complete", cat.complete}, {"nodes", cat.stats.nodes}, {"seconds", cat.stats.seconds}};
        if (!count_only) j["catalog"] = a;
        out << j.dump(2) << '\n';
      } else {
        out << "drawings: " << cat.drawings.size() << (cat.complete ? "" : " (incomplete: budget exhausted)") << '\n';
        if (!count_only)
          for (const auto& d : cat.drawings) out << '\n' << emit_1pd(d);
      }
      return cat.complete ? kOk : kBudget;
    };
  });

  // genquad
  int quad_n = 0, oracle_max_n = 10, wheel = 0;
  bool oracle = false;
  std::string augment_dir;
  auto* genquad = app.add_subcommand("genquad", "3-connected quadrangulations of the sphere, one per isomorphism class");
  auto* n_opt = genquad->add_option("--n", quad_n, "Vertex count");
  genquad->add_flag("--oracle", oracle, "Use the brute-force generator");
  genquad->add_option("--oracle-max-n", oracle_max_n, "Ceiling for --oracle")->capture_default_str();
  genquad->add_option("--augment", augment_dir, "Write the optimal 1-planar drawing of each result to this directory");
  genquad->add_option("--wheel", wheel, "Emit the pseudo-double wheel on 2k+2 vertices instead")->excludes(n_opt);
  genquad->callback([&] {
    action = [&]() -> int {
      std::vector<Quadrangulation> qs;
      QuadgenStats stats;
      if (wheel) {
        if (wheel < 3) throw UsageError("--wheel: k must be at least 3");
        qs.push_back(pseudo_double_wheel(wheel));
      } else if (oracle) {
        try {
          qs = oracle_quadrangulations(quad_n, oracle_max_n);
        } catch (const GraphError& e) {
          throw UsageError(e.what());
        }
      } else {
        qs = enumerate_quadrangulations(quad_n, &stats);
      }
      int status = kOk;
      if (!augment_dir.empty()) {
        fs::create_directories(augment_dir);
        for (std::size_t i = 0; i < qs.size(); ++i) {
          auto a = augment_to_optimal(qs[i]);
          if (!a.drawing) {
            err << "augmentation rejected for " << emit_graph6(qs[i].graph()) << ": " << a.rejection << '\n';
            status = kViolated;
            continue;
          }
          std::ofstream f(fs::path(augment_dir) / ("quad_n" + std::to_string(qs[i].order()) + "_" + std::to_string(i) + ".1pd"));
          f << emit_1pd(*a.drawing);
        }
      }
      if (want_json()) {
        json a = json::array();
        for (const auto& q : qs) a.push_back(emit_graph6(q.graph()));
        json j{{"n", wheel ? 2 * wheel + 2 : quad_n}, {"count", qs.size()}, {"graphs", a}};
        if (!wheel && !oracle) j["generator"] = {{"candidates", stats.generated}, {"rejected", stats.rejected_invalid}, {"duplicates", stats.duplicates}};
        out << j.dump(2) << '\n';
      } else {
        for (const auto& q : qs) out << emit_graph6(q.graph()) << '\n';
      }
      return status;
    };
  });

  // augment
  auto* augment = app.add_subcommand("augment", "Optimal 1-planar drawing from a 3-connected quadrangulation");
  augment->add_option("graph", graph_path, "Quadrangulation graph file; stdin if omitted");
  augment->callback([&] {
    action = [&]() -> int {
      Graph g = read_graph(graph_path, in);
      auto emb = planar_embedding(g);
      if (!emb) {
        err << "not a quadrangulation: graph is not planar\n";
        return kViolated;
      }
      if (std::string problem = quadrangulation_problem(*emb); !problem.empty()) {
        err << "not a quadrangulation: " << problem << '\n';
        return kViolated;
      }
      auto a = augment_to_optimal(make_quadrangulation(*emb));
      if (!a.drawing) {
        err << "augmentation rejected: " << a.rejection << '\n';
        return kViolated;
      }
      out << emit_1pd(*a.drawing);
      return kOk;
    };
  });

  // skeleton
  std::string drawing_path;
  bool list_faces = false, planarization = false;
  auto* skeleton = app.add_subcommand("skeleton", "Planar skeleton of a drawing: crossing edges removed");
  skeleton->add_option("drawing", drawing_path, ".1pd file; stdin if omitted");
  skeleton->add_flag("--faces", list_faces, "List the faces of the drawing instead");
  skeleton->add_flag("--planarization", planarization, "Print the planarization as an edge list instead");
  skeleton->callback([&] {
    action = [&]() -> int {
      OnePlaneDrawing d = read_drawing(drawing_path, in);
      if (planarization) {
        out << emit_planarization_edges(d);
      } else if (list_faces) {
        for (const auto& f : faces(d)) out << (f.crossed ? "crossed " : "uncrossed ") << join(f.corners) << '\n';
      } else {
        PlaneEmbedding s = planar_skeleton(d);
        out << emit_graph6(s.graph()) << '\n';
        for (Vertex v = 0; v < s.order(); ++v) out << "r " << v << (s.rotation(v).empty() ? "" : " ") << join(s.rotation(v)) << '\n';
      }
      return kOk;
    };
  });

  // validate-drawing
  bool optimal = false;
  auto* validate = app.add_subcommand("validate-drawing", "Check a 1-plane drawing; --optimal adds the optimal-structure checks");
  validate->add_option("drawing", drawing_path, ".1pd file; stdin if omitted");
  validate->add_flag("--optimal", optimal, "Also check the structure of an optimal 1-planar drawing");
  validate->callback([&] {
    action = [&]() -> int {
      OnePlaneDrawing d = read_drawing(drawing_path, in);
      DrawingReport r = validate_drawing(d);
      if (optimal) {
        DrawingReport s = check_optimal_structure(d);
        r.checks.insert(r.checks.end(), s.checks.begin(), s.checks.end());
      }
      if (want_json()) {
        out << json{{"ok", r.ok()}, {"checks", checks_json(r)}}.dump(2) << '\n';
      } else {
        out << r.summary();
      }
      return r.ok() ? kOk : kViolated;
    };
  });

  // bounds
  int bound_n = 0;
  auto* bounds = app.add_subcommand("bounds", "Edge bounds for n, or the cactus and G∘2K1 conditions of a graph");
  auto* bn = bounds->add_option("--n", bound_n, "Vertex count");
  bounds->add_option("graph", graph_path, "Graph file")->excludes(bn);
  bounds->callback([&] {
    action = [&]() -> int {
      if (bn->count() == 0 && graph_path.empty()) throw UsageError("bounds: need --n or a graph file");
      if (bn->count()) {
        if (bound_n < 1) throw UsageError("--n: must be at least 1");
        BoundRow row = bound_row(bound_n);
        auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
        json j{{"n", row.n},
               {"max_1planar_edges", opt(row.max_1planar_edges)},
               {"maximal_1planar_lower_bound",
                row.maximal_1planar_lower_bound ? json(format_rational(*row.maximal_1planar_lower_bound)) : json(nullptr)},
               {"cactus_max_edges", row.cactus_max_edges},
               {"reducible_1planar_max_edges", opt(row.reducible_1planar_max_edges)}};
        if (want_json()) {
          out << j.dump(2) << '\n';
        } else {
          for (auto it = j.begin(); it != j.end(); ++it)
            out << it.key() << ": " << (it.value().is_null() ? std::string("-") : it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << '\n';
        }
        return kOk;
      }
      Graph g = read_graph(graph_path, in);
      std::vector<Vertex> witness;
      const bool sub_ok = coro1_subgraph_bound_ok(g, &witness);
      json j{{"n", g.order()},
             {"m", g.size()},
             {"connected", is_connected(g)},
             {"degree_sequence", degree_sequence(g)},
             {"cactus", is_cactus(g)},
             {"cactus_max_edges", cactus_edge_bound(std::max(g.order(), 1))},
             {"G_2K1_edge_condition", coro1_bound_ok(g)},
             {"G_2K1_subgraph_condition", sub_ok}};
      if (!sub_ok) j["violating_subset"] = witness;
      if (want_json()) {
        out << j.dump(2) << '\n';
      } else {
        for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << it.value().dump() << '\n';
      }
      return kOk;
    };
  });

  // tight
  int tight_k = 0;
  bool k2222 = false;
  auto* tight = app.add_subcommand("tight", "P_k∘C_3 with its drawing, or the drawing of K_{2,2,2,2}");
  auto* tk = tight->add_option("--k", tight_k, "Number of triangle levels");
  tight->add_flag("--k2222", k2222, "Emit K_{2,2,2,2} on the cube skeleton")->excludes(tk);
  tight->callback([&] {
    action = [&]() -> int {
      if (k2222) {
        OnePlaneDrawing d = k2222_drawing();
        out << emit_graph6(d.base) << '\n' << emit_1pd(d);
        return kOk;
      }
      if (tk->count() == 0) throw UsageError("tight: need --k or --k2222");
      if (tight_k < 2) throw UsageError("--k: must be at least 2");
      auto [g, d] = tight_family(tight_k);
      out << emit_graph6(g) << '\n' << emit_1pd(d);
      return kOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive verification reports");
  verify->require_subcommand(1);
  verify->fallthrough();
  bool no_timing = false;
  verify->add_flag("--no-timing", no_timing, "Zero every timing field");
  TheoremOptions topt;
  auto* vtheorem = verify->add_subcommand("theorem", "Reducible optimal 1-planar graphs for n in [min-n, max-n]");
  vtheorem->add_option("--max-n", topt.n_max)->capture_default_str();
  vtheorem->add_option("--min-n", topt.n_min)->capture_default_str();
  vtheorem->add_option("--oracle-max-n", topt.oracle_max_n, "Cross-check the generator up to this n")->capture_default_str();
  CorollaryOptions copt;
  auto* vcoro = verify->add_subcommand("corollaries", "Reducible edge bounds, tight family, inequalities");
  vcoro->add_option("--max-n", copt.exhaustive_max_n, "Exhaustive reducible-graph ceiling")->check(CLI::Range(6, 12))->capture_default_str();
  vcoro->add_option("--tight-max-k", copt.tight_max_k)->capture_default_str();
  vcoro->add_option("--tight-search-max-k", copt.tight_search_max_k)->capture_default_str();
  vcoro->add_option("--inequality-max-n", copt.inequality_max_n)->capture_default_str();
  vcoro->add_option("--coro1-max-n", copt.coro1_max_n, "Largest G tested in G∘2K1")->check(CLI::Range(2, 7))->capture_default_str();
  LemmaOptions lopt;
  bool skip_large = false;
  auto* vlemmas = verify->add_subcommand("lemmas", "Small lexicographic-product lemmas");
  vlemmas->add_option("--pairs", lopt.random_pairs, "Random factor pairs")->capture_default_str();
  vlemmas->add_flag("--skip-large-right-factor", skip_large, "Skip the |V(H)| = 4 products");

  auto emit_report = [&](const VerificationReport& r) -> int {
    if (want_json()) {
      out << r.dump(no_timing);
    } else if (no_timing) {
      VerificationReport copy = r;
      copy.seconds = 0;
      out << copy.to_text();
    } else {
      out << r.to_text();
    }
    if (r.certifying) return kOk;
    const bool all_budget = std::all_of(r.failures.begin(), r.failures.end(), [](const std::string& f) { return f.find("undecided") != std::string::npos; });
    return all_budget ? kBudget : kViolated;
  };
  auto apply_budget = [&](SearchBudget& b) {
    if (budget.max_nodes) b.max_nodes = budget.max_nodes;
    if (budget.max_seconds > 0) b.max_seconds = budget.max_seconds;
  };
  vtheorem->callback([&] {
    action = [&]() -> int {
      if (topt.n_min > topt.n_max) throw UsageError("--min-n exceeds --max-n");
      topt.jobs = jobs;
      return emit_report(verify_main_theorem(topt));
    };
  });
  vcoro->callback([&] {
    action = [&]() -> int {
      copt.jobs = jobs;
      apply_budget(copt.budget);
      return emit_report(verify_corollaries(copt));
    };
  });
  vlemmas->callback([&] {
    action = [&]() -> int {
      lopt.jobs = jobs;
      lopt.seed = seed;
      lopt.include_lemma4 = !skip_large;
      apply_budget(lopt.budget);
      return emit_report(verify_lex_small_lemmas(lopt));
    };
  });

  // iso
  std::vector<std::string> iso_paths;
  bool drawings = false, canonical = false;
  auto* iso = app.add_subcommand("iso", "Isomorphism of two graphs or two drawings; --canonical prints a canonical key");
  iso->add_option("inputs", iso_paths, "Two files (one with --canonical)")->expected(1, 2);
  iso->add_flag("--drawings", drawings, "Inputs are .1pd drawings compared up to sphere homeomorphism");
  iso->add_flag("--canonical", canonical, "Print the canonical form key of one graph");
  iso->callback([&] {
    action = [&]() -> int {
      if (canonical) {
        if (iso_paths.size() != 1 || drawings) throw UsageError("--canonical takes exactly one graph");
        out << canonical_form(read_graph(iso_paths[0], in)).key() << '\n';
        return kOk;
      }
      if (iso_paths.size() != 2) throw UsageError("iso: need two inputs");
      bool same;
      if (drawings) {
        same = drawing_isomorphic(read_drawing(iso_paths[0], in), read_drawing(iso_paths[1], in));
      } else {
        same = is_isomorphic(read_graph(iso_paths[0], in), read_graph(iso_paths[1], in));
      }
      out << (same ? "isomorphic" : "not isomorphic") << '\n';
      return same ? kOk : kViolated;
    };
  });

  // convert
  std::string convert_to = "edges";
  auto* convert = app.add_subcommand("convert", "graph6 <-> edge list");
  convert->add_option("graph", graph_path, "Graph file; stdin if omitted");
  convert->add_option("--to", convert_to, "Output format")->check(CLI::IsMember({"g6", "edges"}))->capture_default_str();
  convert->callback([&] {
    action = [&]() -> int {
      out << emit_graph(read_graph(graph_path, in), convert_to);
      return kOk;
    };
  });

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && !app.get_subcommand_no_throw(args[0])) {
    err << "error: unknown subcommand '" << args[0] << "'\n";
    return kUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace oneplanar::cli
