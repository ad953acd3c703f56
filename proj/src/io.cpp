#include "arboreal/io.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "arboreal/error.hpp"

namespace arboreal::io {

using Json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::InputParse, what); }

std::string where(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    fail(where(text, at) + ": malformed JSON");
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::size_t id_key(const std::string& key) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail("vertex key \"" + key + "\" is not a vertex id");
  }
  return std::stoul(key);
}

TaxonSet taxa_from(const Json& j) {
  if (!j.is_array()) fail("\"taxa\" must be an array");
  std::vector<std::string> names;
  for (const auto& t : j) names.push_back(as_string(t, "a taxon"));
  try {
    return TaxonSet(std::move(names));
  } catch (const Error& e) {
    fail(std::string("bad taxa: ") + e.what());
  }
}

Json taxa_json(const TaxonSet& t) { return Json(t.names()); }

Json network_json(const Network& n) {
  Json j;
  j["vertices"] = n.vertex_count();
  Json arcs = Json::array();
  for (const auto& a : n.arcs()) arcs.push_back({a.tail, a.head});
  j["arcs"] = std::move(arcs);
  Json leaves = Json::object();
  for (std::size_t t = 0; t < n.taxa().size(); ++t) leaves[std::to_string(n.leaf_of(t))] = n.taxa().name(t);
  j["leaves"] = std::move(leaves);
  j["taxa"] = taxa_json(n.taxa());
  if (n.has_names()) {
    Json names = Json::array();
    for (VertexId v = 0; v < n.vertex_count(); ++v) names.push_back(n.name(v));
    j["names"] = std::move(names);
  }
  return j;
}

Network network_from(const Json& j) {
  const std::size_t count = as_index(member(j, "vertices"), "\"vertices\"");
  const Json& arcs_json = member(j, "arcs");
  if (!arcs_json.is_array()) fail("\"arcs\" must be an array");
  std::vector<Arc> arcs;
  for (const auto& a : arcs_json) {
    if (!a.is_array() || a.size() != 2) fail("each arc must be a pair [tail, head]");
    arcs.push_back({as_index(a[0], "an arc tail"), as_index(a[1], "an arc head")});
  }
  const Json& leaves_json = member(j, "leaves");
  if (!leaves_json.is_object()) fail("\"leaves\" must be an object");
  std::map<VertexId, std::string> leaves;
  for (const auto& [key, value] : leaves_json.items()) leaves[id_key(key)] = as_string(value, "a leaf taxon");
  std::optional<TaxonSet> taxa;
  if (j.contains("taxa")) taxa = taxa_from(j.at("taxa"));
  Network net = Network::validate(count, std::move(arcs), leaves, std::move(taxa));
  if (j.contains("names")) {
    const Json& names_json = j.at("names");
    if (!names_json.is_array()) fail("\"names\" must be an array");
    std::vector<std::string> names;
    for (const auto& s : names_json) names.push_back(as_string(s, "a vertex name"));
    if (names.size() != count) fail("\"names\" needs one entry per vertex");
    net = net.with_names(std::move(names));
  }
  return net;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_json(const UGraph& g) {
  Json j;
  j["taxa"] = taxa_json(g.taxa());
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.taxa().name(a), g.taxa().name(b)});
  j["edges"] = std::move(edges);
  return dump(j);
}

UGraph graph_from_json(std::string_view text) {
  const Json j = parse(text);
  const TaxonSet taxa = taxa_from(member(j, "taxa"));
  const Json& edges_json = member(j, "edges");
  if (!edges_json.is_array()) fail("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 2) fail("each edge must be a pair of taxa");
    const auto a = taxa.find(as_string(e[0], "an edge endpoint"));
    const auto b = taxa.find(as_string(e[1], "an edge endpoint"));
    if (!a || !b) fail("edge endpoint is not a listed taxon");
    if (*a == *b) fail("loops are not allowed");
    edges.emplace_back(*a, *b);
  }
  return UGraph(taxa, edges);
}

std::string family_to_json(const CliqueFamily& k) {
  Json j = Json::array();
  for (TaxonSubset s : k) j.push_back(k.over().subset_names(s));
  return dump(j);
}

CliqueFamily family_from_json(std::string_view text, const TaxonSet& over) {
  const Json j = parse(text);
  if (!j.is_array()) fail("a set family must be an array of taxon arrays");
  std::vector<TaxonSubset> sets;
  for (const auto& s : j) {
    if (!s.is_array()) fail("each set must be an array of taxa");
    TaxonSubset sub;
    for (const auto& t : s) {
      const auto i = over.find(as_string(t, "a taxon"));
      if (!i) fail("unknown taxon in set family");
      sub = sub.with(*i);
    }
    sets.push_back(sub);
  }
  try {
    return CliqueFamily(over, std::move(sets));
  } catch (const Error& e) {
    fail(std::string("bad set family: ") + e.what());
  }
}

std::string network_to_json(const Network& n) { return dump(network_json(n)); }

Network network_from_json(std::string_view text) { return network_from(parse(text)); }

std::string labelled_to_json(const LabelledNetwork& ln) {
  Json j = network_json(ln.net());
  Json labels = Json::object();
  for (const auto& [v, s] : ln.labels()) labels[std::to_string(v)] = s;
  j["labels"] = std::move(labels);
  return dump(j);
}

LabelledNetwork labelled_from_json(std::string_view text) {
  const Json j = parse(text);
  Network net = network_from(j);
  const Json& labels_json = member(j, "labels");
  if (!labels_json.is_object()) fail("\"labels\" must be an object");
  std::map<VertexId, std::string> labels;
  for (const auto& [key, value] : labels_json.items()) labels[id_key(key)] = as_string(value, "a label");
  return LabelledNetwork(std::move(net), std::move(labels));
}

std::string map_to_json(const SymbolicMap& d) {
  Json j;
  j["taxa"] = taxa_json(d.taxa());
  j["symbols"] = d.symbols();
  Json values = Json::array();
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = x + 1; y < d.size(); ++y) {
      const auto v = d.value(x, y);
      values.push_back({d.taxa().name(x), d.taxa().name(y), v ? Json(*v) : Json(nullptr)});
    }
  }
  j["values"] = std::move(values);
  return dump(j);
}

SymbolicMap map_from_json(std::string_view text) {
  const Json j = parse(text);
  const TaxonSet taxa = taxa_from(member(j, "taxa"));
  std::optional<std::vector<std::string>> alphabet;
  if (j.contains("symbols")) {
    const Json& s = j.at("symbols");
    if (!s.is_array()) fail("\"symbols\" must be an array");
    alphabet.emplace();
    for (const auto& x : s) alphabet->push_back(as_string(x, "a symbol"));
  }
  const Json& values_json = member(j, "values");
  if (!values_json.is_array()) fail("\"values\" must be an array");
  std::vector<std::tuple<std::string, std::string, Symbol>> values;
  for (const auto& v : values_json) {
    if (!v.is_array() || v.size() != 3) fail("each value must be [taxon, taxon, symbol or null]");
    Symbol s;
    if (!v[2].is_null()) s = as_string(v[2], "a symbol");
    values.emplace_back(as_string(v[0], "a taxon"), as_string(v[1], "a taxon"), s);
  }
  try {
    return SymbolicMap::from_named(taxa, values, std::move(alphabet));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InputParse) throw;
    fail(std::string("bad symbolic map: ") + e.what());
  }
}

std::string map_to_triangular(const SymbolicMap& d) {
  std::ostringstream out;
  for (std::size_t x = 0; x < d.size(); ++x) {
    out << d.taxa().name(x);
    for (std::size_t y = 0; y < x; ++y) {
      const auto v = d.value(x, y);
      out << ' ' << (v ? *v : std::string("-"));
    }
    out << '\n';
  }
  return out.str();
}

SymbolicMap map_from_triangular(std::string_view text) {
  struct Token {
    std::string text;
    std::size_t offset;
  };
  std::vector<std::vector<Token>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) row.push_back({std::string(line.substr(start, i - start)), pos + start});
    }
    if (!row.empty()) rows.push_back(std::move(row));
    pos = end + 1;
  }
  if (rows.size() < 2) fail("a symbolic map needs at least two taxon rows");
  std::vector<std::string> names;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != r + 1) {
      const Token& at = rows[r].size() > r + 1 ? rows[r][r + 1] : rows[r].back();
      fail(where(text, at.offset) + ": row for '" + rows[r][0].text + "' needs " + std::to_string(r) +
           " values, found " + std::to_string(rows[r].size() - 1));
    }
    if (std::find(names.begin(), names.end(), rows[r][0].text) != names.end()) {
      fail(where(text, rows[r][0].offset) + ": duplicate taxon '" + rows[r][0].text + "'");
    }
    names.push_back(rows[r][0].text);
    for (std::size_t c = 1; c <= r; ++c) {
      if (rows[r][c].text == kNoSymbol) {
        fail(where(text, rows[r][c].offset) + ": write '-' for the non-symbol");
      }
    }
  }
  const TaxonSet taxa(names);
  return SymbolicMap::from_function(taxa, [&](std::size_t i, std::size_t j) -> Symbol {
    const std::string& s = rows[j][i + 1].text;
    if (s == "-") return std::nullopt;
    return s;
  });
}

SymbolicMap map_from_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return map_from_json(text);
  return map_from_triangular(text);
}

std::string violation_to_json(const SymbolicMap& d, const Violation& v) {
  Json j;
  j["verdict"] = "not arboreal";
  Json body;
  body["kind"] = std::string(to_string(v.kind));
  Json witness = Json::array();
  for (std::size_t x : v.witness) witness.push_back(d.taxa().name(x));
  body["witness"] = std::move(witness);
  if (v.obstruction) body["obstruction"] = *v.obstruction == PtolemaicObstruction::Kind::Hole ? "hole" : "gem";
  j["violation"] = std::move(body);
  return dump(j);
}

namespace {

std::string dot_network(const Network& n, const std::map<VertexId, std::string>* labels) {
  std::ostringstream out;
  out << "digraph network {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < n.vertex_count(); ++v) {
    std::string text;
    std::string shape;
    if (auto t = n.taxon_of(v)) {
      text = n.taxa().name(*t);
      shape = "box";
    } else {
      text = n.name(v).empty() ? std::to_string(v) : n.name(v);
      if (labels) {
        if (auto it = labels->find(v); it != labels->end()) text += " : " + it->second;
      }
      if (n.is_hybrid(v)) shape = "diamond";
    }
    out << "  v" << v << " [label=" << quoted(text);
    if (!shape.empty()) out << ", shape=" << shape;
    out << "];\n";
  }
  for (const auto& a : n.arcs()) out << "  v" << a.tail << " -> v" << a.head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string network_to_dot(const Network& n) { return dot_network(n, nullptr); }

std::string labelled_to_dot(const LabelledNetwork& ln) { return dot_network(ln.net(), &ln.labels()); }

std::string graph_to_dot(const UGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out << "  " << quoted(g.taxa().name(v)) << ";\n";
  for (auto [a, b] : g.edges()) out << "  " << quoted(g.taxa().name(a)) << " -- " << quoted(g.taxa().name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string cover_digraph_to_dot(const CoverDigraph& h) {
  std::ostringstream out;
  out << "digraph cover {\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    out << "  n" << i << " [label=" << quoted(h.nodes.over().subset_string(h.nodes[i])) << "];\n";
  }
  for (const auto& a : h.arcs) out << "  n" << a.parent << " -> n" << a.child << ";\n";
  out << "}\n";
  return out.str();
}

DocumentKind detect_kind(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') return DocumentKind::SymbolicMap;
  const Json j = parse(text);
  if (j.contains("labels")) return DocumentKind::LabelledNetwork;
  if (j.contains("arcs")) return DocumentKind::Network;
  if (j.contains("values")) return DocumentKind::SymbolicMap;
  if (j.contains("edges")) return DocumentKind::Graph;
  fail("cannot tell what kind of document this is");
}

}  // namespace arboreal::io
