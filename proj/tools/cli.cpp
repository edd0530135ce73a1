#include "cli.hpp"

#include "umtk/ballean.hpp"
#include "umtk/checks.hpp"
#include "umtk/classification.hpp"
#include "umtk/diametrical.hpp"
#include "umtk/generators.hpp"
#include "umtk/io.hpp"
#include "umtk/rep_tree.hpp"
#include "umtk/similarity.hpp"
#include "umtk/tree_canon.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace umtk::cli {

namespace {

using io::Json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

Space read_space(const std::string& path) { return io::space_from_json(read_json(path)); }

// Space documents are turned into their representing tree; tree documents
// are validated and used as they are.
RepTree read_tree(const std::string& path) {
  Json doc = read_json(path);
  if (io::is_space_document(doc)) return build_tree(io::space_from_json(doc));
  return io::tree_from_json(doc);
}

std::vector<Rational> parse_pool(const std::string& text) {
  std::vector<Rational> pool;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) pool.push_back(Rational::parse(item));
  return pool;
}

bool use_color(const std::ostream& err) {
  const char* mode = std::getenv("UMTK_COLOR");
  if (mode && std::string(mode) == "never") return false;
  return &err == &std::cerr && isatty(STDERR_FILENO);
}

void diagnose(std::ostream& err, const std::string& message) {
  if (use_color(err))
    err << "\033[31merror:\033[0m " << message << "\n";
  else
    err << "error: " << message << "\n";
}

struct Args {
  std::string out_path;
  std::string a;
  std::string b;
  bool dot = false;
  bool labeled = false;
  bool unlabeled = false;
  bool fast = false;

  std::uint64_t seed = 0;
  std::size_t n = 5;
  std::string pool;
  std::string klass = "any";
  bool semimetric = false;
  std::string prefix = "x";

  std::string trials = "default";
  std::size_t max_n = 0;
  std::uint64_t check_seed = CheckOptions{}.seed;
  std::vector<int> suites;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << "\n"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out_stream, std::ostream& err) {
  CLI::App app{"umtk: structural equivalences of finite semimetric and ultrametric spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  app.add_option("--out", args.out_path, "write results to this file instead of stdout");

  auto* validate = app.add_subcommand("validate", "check a space document and print it normalised");
  validate->add_option("space", args.a)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "distance set, diameter and ultrametricity");
  spectrum_cmd->add_option("space", args.a)->required();

  auto* diametric = app.add_subcommand("diametric", "diametrical graph parts (JSON) or graph (--dot)");
  diametric->add_option("space", args.a)->required();
  diametric->add_flag("--dot", args.dot);

  auto* tree = app.add_subcommand("tree", "representing tree as JSON or DOT");
  tree->add_option("input", args.a, "space or tree document")->required();
  tree->add_flag("--dot", args.dot);
  tree->add_flag("--unlabeled", args.unlabeled, "erase labels");

  auto* tree_iso = app.add_subcommand("tree-iso", "rooted tree isomorphism of two trees or spaces");
  tree_iso->add_option("a", args.a)->required();
  tree_iso->add_option("b", args.b)->required();
  tree_iso->add_flag("--labeled", args.labeled, "require labels to match");

  auto* isometric = app.add_subcommand("isometric", "decide isometry");
  isometric->add_option("a", args.a)->required();
  isometric->add_option("b", args.b)->required();

  auto* weaksim = app.add_subcommand("weaksim", "decide weak similarity");
  weaksim->add_option("a", args.a)->required();
  weaksim->add_option("b", args.b)->required();
  weaksim->add_flag("--fast", args.fast, "tree-only route (ultrametric inputs)");

  auto* classify = app.add_subcommand("classify", "membership in R, R~, D and T");
  classify->add_option("space", args.a)->required();

  auto* ballean = app.add_subcommand("ballean", "list every ball");
  ballean->add_option("space", args.a)->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the ballean");
  hasse->add_option("space", args.a)->required();
  hasse->add_flag("--dot", args.dot);

  auto* hasse_iso = app.add_subcommand("hasse-iso", "isomorphism of Hasse diagrams");
  hasse_iso->add_option("a", args.a)->required();
  hasse_iso->add_option("b", args.b)->required();

  auto* ballpres = app.add_subcommand("ballpreserving", "find a ball-preserving bijection");
  ballpres->add_option("a", args.a)->required();
  ballpres->add_option("b", args.b)->required();

  auto* gen = app.add_subcommand("gen", "generate a random space");
  gen->add_option("--seed", args.seed);
  gen->add_option("--n", args.n)->check(CLI::PositiveNumber);
  gen->add_option("--pool", args.pool, "comma-separated distance values");
  gen->add_option("--class", args.klass)->check(CLI::IsMember({"R", "Rtilde", "D", "T", "any"}));
  gen->add_flag("--semimetric", args.semimetric);
  gen->add_option("--prefix", args.prefix);

  auto* check = app.add_subcommand("check", "run the property suites");
  check->add_option("--trials", args.trials, "'default' or a trial count for every suite");
  check->add_option("--max-n", args.max_n, "largest point count");
  check->add_option("--seed", args.check_seed);
  check->add_option("--suite", args.suites, "run only these suites (1-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_stream, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out_stream, err);
    return kInputError;
  }

  std::ofstream file;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) {
      diagnose(err, "cannot write '" + args.out_path + "'");
      return kInputError;
    }
  }
  std::ostream& out = args.out_path.empty() ? out_stream : file;

  try {
    if (validate->parsed()) {
      out << io::space_to_json(read_space(args.a));
      return kPositive;
    }
    if (spectrum_cmd->parsed()) {
      const Space x = read_space(args.a);
      Json doc = Json::object();
      Json values = Json::array();
      for (const auto& v : spectrum(x).values) values.push_back(v.str());
      doc["spectrum"] = std::move(values);
      doc["diameter"] = diameter(x).str();
      auto bad = ultrametric_violation(x);
      doc["ultrametric"] = !bad.has_value();
      if (bad) doc["violation"] = Json::array({x.point(bad->x), x.point(bad->y), x.point(bad->z)});
      emit(out, doc);
      return kPositive;
    }
    if (diametric->parsed()) {
      const Space x = read_space(args.a);
      const auto g = diametrical_graph(x);
      if (args.dot) {
        out << io::graph_to_dot(g);
        return kPositive;
      }
      auto parts = multipartite_parts(g);
      if (!parts) {
        diagnose(err, "diametrical graph is not complete multipartite");
        return kNegative;
      }
      emit(out, io::partition_to_json(g, *parts));
      return kPositive;
    }
    if (tree->parsed()) {
      RepTree t = read_tree(args.a);
      if (args.unlabeled) t = strip_labels(t);
      if (args.dot)
        out << io::tree_to_dot(t);
      else
        emit(out, io::tree_to_json(t));
      return kPositive;
    }
    if (tree_iso->parsed()) {
      const RepTree ta = read_tree(args.a);
      const RepTree tb = read_tree(args.b);
      const FlatTree fa = flatten(ta);
      const FlatTree fb = flatten(tb);
      auto map = rooted_tree_iso_map(fa, fb, args.labeled);
      if (!map) {
        emit(out, Json{{"isomorphic", false}});
        return kNegative;
      }
      Json leaves = Json::object();
      Json nodes = Json::array();
      for (std::size_t i = 0; i < map->size(); ++i) {
        nodes.push_back(Json::array({i, (*map)[i]}));
        if (fa.nodes[i].is_leaf()) leaves[*fa.nodes[i].point] = *fb.nodes[(*map)[i]].point;
      }
      Json doc = Json::object();
      doc["isomorphic"] = true;
      doc["node_map"] = std::move(nodes);
      doc["leaf_map"] = std::move(leaves);
      emit(out, doc);
      return kPositive;
    }
    if (isometric->parsed()) {
      const Space x = read_space(args.a);
      const Space y = read_space(args.b);
      auto w = decide_isometry(x, y);
      if (!w) return kNegative;
      emit(out, io::isometry_to_json(x, y, *w));
      return kPositive;
    }
    if (weaksim->parsed()) {
      const Space x = read_space(args.a);
      const Space y = read_space(args.b);
      auto w = args.fast ? weak_sim_ultrametric_fast(x, y) : decide_weak_similarity(x, y);
      if (!w) return kNegative;
      emit(out, io::witness_to_json(x, y, *w));
      return kPositive;
    }
    if (classify->parsed()) {
      emit(out, io::class_report_to_json(classify_space(read_space(args.a))));
      return kPositive;
    }
    if (ballean->parsed()) {
      const Space x = read_space(args.a);
      emit(out, io::ballean_to_json(x, enumerate_balls(x)));
      return kPositive;
    }
    if (hasse->parsed()) {
      const Space x = read_space(args.a);
      const HasseDiagram h = hasse_diagram(enumerate_balls(x));
      if (args.dot)
        out << io::hasse_to_dot(x, h);
      else
        emit(out, io::hasse_to_json(x, h));
      return kPositive;
    }
    if (hasse_iso->parsed()) {
      const Space x = read_space(args.a);
      const Space y = read_space(args.b);
      const HasseDiagram hx = hasse_diagram(enumerate_balls(x));
      const HasseDiagram hy = hasse_diagram(enumerate_balls(y));
      auto map = hasse_digraph_iso(hx, hy);
      if (!map) return kNegative;
      emit(out, io::vertex_map_to_json(x, y, hx, hy, *map));
      return kPositive;
    }
    if (ballpres->parsed()) {
      const Space x = read_space(args.a);
      const Space y = read_space(args.b);
      auto f = ball_preserving_bijection(x, y);
      if (!f) return kNegative;
      emit(out, Json{{"f", io::point_map_to_json(x, y, *f)}});
      return kPositive;
    }
    if (gen->parsed()) {
      GenConfig config;
      config.seed = args.seed;
      config.n = args.n;
      config.pool = parse_pool(args.pool);
      config.semimetric = args.semimetric;
      config.prefix = args.prefix;
      apply_class_name(config, args.klass);
      out << io::space_to_json(generate(config));
      return kPositive;
    }
    if (check->parsed()) {
      CheckOptions options;
      options.seed = args.check_seed;
      if (args.trials != "default") {
        try {
          options.trials = std::stoul(args.trials);
        } catch (const std::exception&) {
          throw Usage("--trials expects 'default' or a number");
        }
      }
      if (args.max_n > 0) options.max_n = args.max_n;
      std::vector<int> ids = args.suites;
      if (ids.empty())
        for (int i = 1; i <= kSuiteCount; ++i) ids.push_back(i);
      bool all = true;
      double total = 0;
      for (int id : ids) {
        auto r = run_suite(id, options);
        total += r.seconds;
        all = all && r.passed();
        out << format_result(r) << "\n";
        out.flush();
      }
      out << "total " << total << " s\n";
      return all ? kPositive : kNegative;
    }
  } catch (const Usage& e) {
    diagnose(err, e.what());
    return kInputError;
  } catch (const Error& e) {
    diagnose(err, e.what());
    return e.kind() == ErrorKind::VerificationFailed ? kInternalFailure : kInputError;
  } catch (const std::exception& e) {
    diagnose(err, e.what());
    return kInternalFailure;
  }
  return kInputError;
}

}  // namespace umtk::cli
