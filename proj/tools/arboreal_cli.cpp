// arboreal: command-line front end.
//
// Exit status: 0 on success or an affirmative verdict, 1 on a negative verdict
// (the witness is printed), 2 on bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "arboreal/builder.hpp"
#include "arboreal/cliques.hpp"
#include "arboreal/error.hpp"
#include "arboreal/io.hpp"
#include "arboreal/network.hpp"
#include "arboreal/oracle.hpp"
#include "arboreal/selftest.hpp"
#include "arboreal/symbolic.hpp"

using namespace arboreal;
using Json = nlohmann::json;

namespace {

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string dot;
  std::string format = "json";
  bool arboreal_only = false;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t max_n = 8;
  std::string kind = "graph";
  std::vector<int> only;
  double budget = -1;
  bool serial = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InputParse, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_to(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string names_json(const TaxonSet& taxa, const std::vector<std::size_t>& v) {
  Json j = Json::array();
  for (auto i : v) j.push_back(taxa.name(i));
  return j.dump();
}

std::string obstruction_json(const UGraph& g, const PtolemaicObstruction& o) {
  Json j;
  j["kind"] = o.kind == PtolemaicObstruction::Kind::Hole ? "hole" : "gem";
  j["vertices"] = Json::parse(names_json(g.taxa(), o.vertices));
  return j.dump();
}

std::string pretty(const std::string& compact) { return Json::parse(compact).dump(2) + "\n"; }

int check(const Options& o) {
  const SymbolicMap d = io::map_from_text(read_input(o.input));
  if (auto v = check_arboreal_conditions(d)) {
    write_to(o.output, io::violation_to_json(d, *v));
    return 1;
  }
  write_to(o.output, pretty(R"({"verdict": "arboreal"})"));
  return 0;
}

int explain_verb(const Options& o) {
  const SymbolicMap d = io::map_from_text(read_input(o.input));
  const auto out = explain(d);
  if (const auto* v = std::get_if<Violation>(&out)) {
    write_to(o.output, io::violation_to_json(d, *v));
    return 1;
  }
  const auto& ln = std::get<LabelledNetwork>(out);
  write_to(o.output, io::labelled_to_json(ln));
  if (!o.dot.empty()) write_to(o.dot, io::labelled_to_dot(ln));
  return 0;
}

int normalize(const Options& o) {
  const LabelledNetwork ln = canonically_numbered(make_discriminating(io::labelled_from_json(read_input(o.input))));
  write_to(o.output, io::labelled_to_json(ln));
  if (!o.dot.empty()) write_to(o.dot, io::labelled_to_dot(ln));
  return 0;
}

int evaluate(const Options& o) {
  const SymbolicMap d = evaluate_map(io::labelled_from_json(read_input(o.input)));
  write_to(o.output, o.format == "text" ? io::map_to_triangular(d) : io::map_to_json(d));
  return 0;
}

int represent(const Options& o) {
  const UGraph g = io::graph_from_json(read_input(o.input));
  std::optional<Network> n;
  if (o.arboreal_only) {
    n = arboreal_representation(g);
    if (!n) {
      write_to(o.output, pretty(R"({"verdict": "not Ptolemaic", "obstruction": )" +
                                obstruction_json(g, *find_ptolemaic_obstruction(g)) + "}"));
      return 1;
    }
  } else {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
    n = build_network_from_cover(g, maximal_cliques(g));
  }
  write_to(o.output, io::network_to_json(*n));
  if (!o.dot.empty()) write_to(o.dot, io::network_to_dot(*n));
  return 0;
}

int sag(const Options& o) {
  const UGraph g = shared_ancestry_graph(io::network_from_json(read_input(o.input)));
  write_to(o.output, io::graph_to_json(g));
  if (!o.dot.empty()) write_to(o.dot, io::graph_to_dot(g));
  return 0;
}

int ptolemaic(const Options& o) {
  const UGraph g = io::graph_from_json(read_input(o.input));
  if (auto obstruction = find_ptolemaic_obstruction(g)) {
    write_to(o.output,
             pretty(R"({"ptolemaic": false, "obstruction": )" + obstruction_json(g, *obstruction) + "}"));
    return 1;
  }
  write_to(o.output, pretty(R"({"ptolemaic": true})"));
  return 0;
}

int ecc(const Options& o) {
  const UGraph g = io::graph_from_json(read_input(o.input));
  const auto e = ecc_min(g);
  Json j;
  j["ecc"] = e.size;
  j["cover"] = Json::parse(io::family_to_json(e.cover));
  j["maximal_cliques"] = maximal_cliques(g).size();
  write_to(o.output, j.dump(2) + "\n");
  if (!o.dot.empty()) write_to(o.dot, io::cover_digraph_to_dot(cover_digraph(intersection_closure(e.cover))));
  return 0;
}

// One compact JSON document per line.
int gen(const Options& o) {
  if (o.max_n < 2) throw Error(ErrorCode::InvalidArgument, "--max-n must be at least 2");
  std::ostringstream out;
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    GenParams p;
    p.leaf_max = o.max_n;
    p.root_max = std::min<std::size_t>(3, o.max_n - 1);
    p.seed = o.seed + i;
    std::string doc;
    if (o.kind == "graph") {
      doc = io::graph_to_json(random_connected_graph(rng.between(2, o.max_n), rng));
    } else if (o.kind == "arboreal") {
      doc = io::network_to_json(random_arboreal_network(p));
    } else if (o.kind == "network") {
      p.hybrid_bias = 0.5;
      doc = io::network_to_json(random_network(p));
    } else if (o.kind == "labelled") {
      p.symbol_count = 3;
      doc = io::labelled_to_json(random_labelled_arboreal_network(p));
    } else if (o.kind == "map") {
      p.symbol_count = 3;
      doc = io::map_to_json(evaluate_map(random_labelled_arboreal_network(p)));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown --kind " + o.kind);
    }
    out << Json::parse(doc).dump() << '\n';
  }
  write_to(o.output, out.str());
  return 0;
}

int selftest(const Options& o) {
  SelftestOptions s = SelftestOptions::from_environment();
  s.only = o.only;
  s.seed = o.seed;
  s.parallel = !o.serial;
  if (o.budget >= 0) s.budget_seconds = o.budget;
  std::ostringstream out;
  const auto results = run_acceptance(s, o.output == "-" ? std::cout : out);
  if (o.output != "-") write_to(o.output, out.str());
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arboreal networks and symbolic maps"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto io_flags = [&](CLI::App* sub, bool with_dot) {
    sub->add_option("-i,--input", o.input, "Input file, '-' for stdin");
    sub->add_option("-o,--output", o.output, "Output file, '-' for stdout");
    if (with_dot) sub->add_option("--dot", o.dot, "Also write Graphviz DOT to this file");
  };
  auto verb = [&](const char* name, const char* help, int (*f)(const Options&), bool with_dot) {
    auto* sub = app.add_subcommand(name, help);
    io_flags(sub, with_dot);
    sub->callback([&handler, f] { handler = f; });
    return sub;
  };

  verb("check", "Test a symbolic map for the arboreal conditions", check, false);
  verb("explain", "Build a labelled arboreal network explaining a map", explain_verb, true);
  verb("normalize", "Discriminating form of a labelled arboreal network", normalize, true);
  verb("evaluate", "Symbolic map of a labelled network", evaluate, false)
      ->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verb("represent", "Network whose shared ancestry graph is the input graph", represent, true)
      ->add_flag("--arboreal", o.arboreal_only, "Require an arboreal network");
  verb("sag", "Shared ancestry graph of a network", sag, true);
  verb("ptolemaic", "Decide whether a graph is Ptolemaic", ptolemaic, false);
  verb("ecc", "Minimum edge clique cover", ecc, true);
  auto* g = verb("gen", "Generate random instances as JSON lines", gen, false);
  g->add_option("--kind", o.kind, "graph, arboreal, network, labelled or map")
      ->check(CLI::IsMember({"graph", "arboreal", "network", "labelled", "map"}));
  g->add_option("--seed", o.seed, "Random seed");
  g->add_option("--count", o.count, "Number of instances");
  g->add_option("--max-n", o.max_n, "Largest number of taxa");
  auto* s = verb("selftest", "Run the acceptance suite", selftest, false);
  s->add_option("--only", o.only, "Criterion ids to run");
  s->add_option("--budget", o.budget, "Time cap in seconds");
  s->add_option("--seed", o.seed, "Random seed");
  s->add_flag("--serial", o.serial, "Run criteria one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return handler(o);
  } catch (const Error& e) {
    std::cerr << "arboreal: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "arboreal: " << e.what() << '\n';
    return 2;
  }
}
