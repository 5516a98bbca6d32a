#include "spinmod/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "spinmod/cycles.hpp"
#include "spinmod/error.hpp"

namespace spinmod::io {

namespace {

const json& need(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw InputError(std::string("missing field \"") + field + "\"");
  }
  return j.at(field);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph must be a JSON object");
  const json& vs = need(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw InputError("vertices must be a non-empty array");
  std::map<int, int> dense;
  std::vector<int> weights;
  for (const auto& v : vs) {
    const int id = as_int(need(v, "id"), "vertex id");
    const int w = v.contains("weight") ? as_int(v.at("weight"), "weight") : 0;
    if (!dense.emplace(id, static_cast<int>(weights.size())).second) {
      throw InputError("duplicate vertex id " + std::to_string(id));
    }
    weights.push_back(w);
  }
  auto vertex = [&](const json& x) {
    const int id = as_int(x, "vertex reference");
    auto it = dense.find(id);
    if (it == dense.end()) throw InputError("unknown vertex id " + std::to_string(id));
    return it->second;
  };

  if (j.contains("half_edges")) {
    const json& hb = j.at("half_edges");
    std::vector<int> endpoint;
    for (const auto& x : need(hb, "endpoint")) endpoint.push_back(vertex(x));
    std::vector<Vertex> vertices;
    for (int w : weights) vertices.push_back({w, false});
    return Graph(std::move(vertices), std::move(endpoint),
                 int_list(need(hb, "involution"), "involution"),
                 int_list(need(hb, "legs"), "legs"));
  }

  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be [u, v]");
      edges.emplace_back(vertex(e[0]), vertex(e[1]));
    }
  }
  std::vector<int> legs;
  if (j.contains("legs")) {
    for (const auto& x : j.at("legs")) legs.push_back(vertex(x));
  }
  return Graph::from_edges(weights, edges, legs);
}

json to_json(const Graph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    j["vertices"].push_back({{"id", v}, {"weight", g.weight(v)}});
  }
  j["edges"] = json::array();
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.ends(e);
    j["edges"].push_back({u, v});
    edges.emplace_back(u, v);
  }
  std::vector<int> leg_vertices;
  for (int h : g.legs()) leg_vertices.push_back(g.endpoint(h));
  j["legs"] = leg_vertices;
  std::vector<int> weights;
  for (int v = 0; v < g.num_vertices(); ++v) weights.push_back(g.weight(v));
  if (!(Graph::from_edges(weights, edges, leg_vertices) == g)) {
    j["half_edges"] = {
        {"endpoint", std::vector<int>(g.endpoints().begin(), g.endpoints().end())},
        {"involution", std::vector<int>(g.involutions().begin(), g.involutions().end())},
        {"legs", std::vector<int>(g.legs().begin(), g.legs().end())}};
  }
  return j;
}

SpinStructure spin_from_json(const Graph& g, const json& j) {
  const json& pj = need(j, "P");
  EdgeSet p(g.num_edges());
  if (pj.is_string()) {
    p = EdgeSet::from_hex(g.num_edges(), pj.get<std::string>());
  } else {
    for (int e : int_list(pj, "P")) {
      if (e < 0 || e >= g.num_edges()) throw InputError("unknown edge " + std::to_string(e));
      p.insert(e);
    }
  }
  if (!is_cyclic(g, p)) throw DomainError("P = " + p.to_hex() + " is not cyclic");
  std::vector<std::uint8_t> sign(pbar_components(g, p).count(), 0);
  if (j.contains("sign")) {
    for (const auto& entry : j.at("sign")) {
      const int c = as_int(need(entry, "component"), "component");
      const int s = as_int(need(entry, "s"), "s");
      if (c < 0 || c >= static_cast<int>(sign.size())) {
        throw InputError("unknown component " + std::to_string(c));
      }
      if (s != 0 && s != 1) throw InputError("s must be 0 or 1");
      sign[c] = static_cast<std::uint8_t>(s);
    }
  }
  return SpinStructure(g, p, std::move(sign));
}

json to_json(const Graph& g, const SpinStructure& s) {
  (void)g;
  json j;
  j["P"] = s.cycle().to_hex();
  j["sign"] = json::array();
  for (std::size_t c = 0; c < s.sign().size(); ++c) {
    j["sign"].push_back({{"component", c}, {"s", s.sign()[c]}});
  }
  j["parity"] = s.parity();
  return j;
}

ExtRational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return ExtRational::parse(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(std::string("bad length: ") + e.what());
    }
  }
  if (j.is_number_integer()) return ExtRational(j.get<std::int64_t>());
  if (j.is_object()) {
    if (j.contains("inf") && j.at("inf").is_boolean() && j.at("inf").get<bool>()) {
      return ExtRational::infinity();
    }
    const json& num = need(j, "num");
    const std::int64_t den = j.contains("den") ? j.at("den").get<std::int64_t>() : 1;
    if (!num.is_number_integer()) throw InputError("num must be an integer");
    return ExtRational(num.get<std::int64_t>(), den);
  }
  throw InputError("length must be \"inf\", an integer, \"p/q\" or {num, den}");
}

json to_json(const ExtRational& r) {
  if (r.is_inf()) return "inf";
  return {{"num", r.num()}, {"den", r.den()}};
}

std::vector<ExtRational> lengths_from_json(const json& j, int num_edges) {
  if (!j.is_array()) throw InputError("lengths must be an array");
  if (static_cast<int>(j.size()) != num_edges) {
    throw InputError("expected " + std::to_string(num_edges) + " lengths, got " +
                     std::to_string(j.size()));
  }
  std::vector<ExtRational> out(num_edges);
  std::vector<char> set(num_edges, 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    int e = static_cast<int>(i);
    if (j[i].is_object() && j[i].contains("edge")) e = as_int(j[i].at("edge"), "edge");
    if (e < 0 || e >= num_edges || set[e]) {
      throw InputError("bad or repeated edge index " + std::to_string(e));
    }
    out[e] = rational_from_json(j[i]);
    set[e] = 1;
  }
  return out;
}

json lengths_to_json(const std::vector<ExtRational>& lengths) {
  json out = json::array();
  for (std::size_t e = 0; e < lengths.size(); ++e) {
    if (lengths[e].is_inf()) {
      out.push_back("inf");
    } else {
      out.push_back({{"edge", e}, {"num", lengths[e].num()}, {"den", lengths[e].den()}});
    }
  }
  return out;
}

json to_json(const TropicalCurve& c) {
  return {{"graph", to_json(c.graph)}, {"lengths", lengths_to_json(c.lengths)}};
}

json to_json(const SpinTropicalCurve& psi) {
  json j = to_json(psi.curve);
  j["spin"] = to_json(psi.curve.graph, psi.spin);
  return j;
}

FamilyDescriptor family_from_json(const json& j) {
  FamilyDescriptor fam;
  fam.special.graph = graph_from_json(need(j, "graph"));
  fam.special.spin = j.contains("spin") ? spin_from_json(fam.special.graph, j.at("spin"))
                                        : trivial_spin(fam.special.graph);
  fam.val = lengths_from_json(need(j, "val"), fam.special.graph.num_edges());
  validate(fam);
  return fam;
}

json to_json(const FamilyDescriptor& fam) {
  return {{"graph", to_json(fam.special.graph)},
          {"spin", to_json(fam.special.graph, fam.special.spin)},
          {"val", lengths_to_json(fam.val)}};
}

json to_json(const Contraction& c) {
  return {{"F", c.contracted.to_hex()}, {"vertex_map", c.vertex_map}};
}

json to_json(const Poset& p, const PosetStats& stats) {
  json j;
  j["kind"] = to_string(p.kind);
  j["g"] = p.g;
  j["n"] = p.n;
  if (!p.note.empty()) j["note"] = p.note;
  j["nodes"] = json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const IsoClass& c = p.nodes[i];
    json node = {{"index", i}, {"key", c.key}, {"rank", c.rank},
                 {"graph", to_json(c.graph)}};
    if (p.kind != PosetKind::graphs) node["P"] = c.cycle.to_hex();
    if (p.kind == PosetKind::spin) {
      node["parity"] = c.parity;
      node["spin"] = to_json(c.graph, c.spin);
    }
    j["nodes"].push_back(std::move(node));
  }
  j["covers"] = json::array();
  for (auto [u, l] : p.covers) j["covers"].push_back({u, l});
  json hist = json::object();
  for (auto [r, count] : stats.rank_histogram) hist[std::to_string(r)] = count;
  j["rank_histogram"] = hist;
  j["components"] = stats.components;
  if (p.kind == PosetKind::spin) {
    j["even_components"] = stats.even_components;
    j["odd_components"] = stats.odd_components;
  }
  j["graded"] = stats.graded;
  return j;
}

std::string to_dot(const Graph& g, const EdgeSet* highlight) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << v;
    if (g.weight(v) > 0) out << "\\nw=" << g.weight(v);
    out << "\"";
    if (g.exceptional(v)) out << ", style=dashed";
    out << "];\n";
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.ends(e);
    out << "  v" << u << " -- v" << v << " [label=\"e" << e << "\"";
    if (highlight && highlight->contains(e)) out << ", penwidth=3";
    out << "];\n";
  }
  for (int i = 0; i < g.num_legs(); ++i) {
    out << "  leg" << i << " [shape=point, xlabel=\"" << i + 1 << "\"];\n";
    out << "  v" << g.endpoint(g.legs()[i]) << " -- leg" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box, fontsize=9];\n";
  std::map<int, std::vector<int>> by_rank;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const IsoClass& c = p.nodes[i];
    by_rank[c.rank].push_back(static_cast<int>(i));
    out << "  n" << i << " [label=\"" << i << " r=" << c.rank << "\"";
    if (c.parity == 0) out << ", color=blue";
    if (c.parity == 1) out << ", color=red";
    out << "];\n";
  }
  for (const auto& [r, ids] : by_rank) {
    out << "  { rank=same;";
    for (int i : ids) out << " n" << i << ";";
    out << " }\n";
  }
  for (auto [u, l] : p.covers) out << "  n" << l << " -> n" << u << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_csv(const Poset& p) {
  std::ostringstream out;
  out << "index,key,rank,parity\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    out << i << "," << p.nodes[i].key << "," << p.nodes[i].rank << ","
        << p.nodes[i].parity << "\n";
  }
  return out.str();
}

std::string cells_csv(const ConeComplex& cx) {
  std::ostringstream out;
  out << "key,dim,parity,aut_order\n";
  for (const auto& c : cx.cells) {
    out << c.cls.key << "," << c.dim << "," << c.cls.parity << "," << c.aut_order << "\n";
  }
  return out.str();
}

std::string cells_dot(const ConeComplex& cx) {
  std::ostringstream out;
  out << "digraph faces {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < cx.cells.size(); ++i) {
    out << "  c" << i << " [label=\"dim " << cx.cells[i].dim << "\", color="
        << (cx.cells[i].cls.parity == 1 ? "red" : "blue") << "];\n";
    for (int up : cx.cells[i].face_of) out << "  c" << i << " -> c" << up << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spinmod::io
