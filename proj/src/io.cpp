#include "matchnet/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "matchnet/error.hpp"

namespace matchnet {

namespace {

int vertex_from(const Json& j, int n, int stage = -1) {
  if (!j.is_number_integer()) throw ParseError("vertex must be an integer", stage);
  const long long v = j.get<long long>();
  if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n), stage);
  return static_cast<int>(v - 1);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json graph_to_json(const Graph& g, const std::optional<VertexOrder>& order) {
  Json j;
  j["n"] = g.size();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = std::move(edges);
  j["family"] = g.family().empty() ? Json(nullptr) : Json(g.family().to_string());
  j["order"] = order ? order_to_json(*order) : Json(nullptr);
  return j;
}

Graph graph_from_json(const Json& j) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) throw ParseError("'n' must be a positive integer");
  const int n = nj.get<int>();
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) throw ParseError("'edges' must be an array");
  std::vector<Edge> edges;
  for (const auto& e : ej) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
    edges.push_back(make_edge(vertex_from(e[0], n), vertex_from(e[1], n)));
  }
  Family family;
  if (j.contains("family") && !j["family"].is_null()) {
    if (!j["family"].is_string()) throw ParseError("'family' must be a string or null");
    family = parse_family(j["family"].get<std::string>());
  }
  try {
    return Graph(n, std::move(edges), std::move(family));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

std::optional<VertexOrder> order_from_graph_json(const Json& j) {
  if (!j.contains("order") || j["order"].is_null()) return std::nullopt;
  return order_from_json(j["order"]);
}

Json order_to_json(const VertexOrder& order) {
  Json j = Json::array();
  for (int r : order.ranks()) j.push_back(r + 1);
  return j;
}

VertexOrder order_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("order must be an array of ranks");
  std::vector<int> ranks;
  for (const auto& r : j) {
    if (!r.is_number_integer()) throw ParseError("rank must be an integer");
    ranks.push_back(r.get<int>() - 1);
  }
  try {
    return VertexOrder(std::move(ranks));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid order: ") + e.what());
  }
}

Json permutation_to_json(std::span<const int> p) {
  Json j = Json::array();
  for (int x : p) j.push_back(x + 1);
  return j;
}

Permutation permutation_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("permutation must list " + std::to_string(n) + " destinations");
  Permutation p;
  for (const auto& x : j) p.push_back(vertex_from(x, n));
  if (!is_permutation(p)) throw ParseError("destinations are not a permutation");
  return p;
}

std::vector<int> parse_index_list(const std::string& text) {
  Json j;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') {
    j = parse_json(text);
  } else {
    j = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        j.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad list entry '" + item + "'");
      }
    }
  }
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("list entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json network_to_json(const SortingNetwork& net) {
  Json j;
  j["version"] = kFormatVersion;
  j["graph"] = graph_to_json(net.graph);
  j["order"] = order_to_json(net.order);
  Json stages = Json::array();
  for (const auto& st : net.stages) {
    Json cmp = Json::array();
    for (const auto& c : st.cmp) cmp.push_back({c.u + 1, c.v + 1, c.kind == CmpKind::Dir ? "dir" : "swap"});
    Json s;
    s["cmp"] = std::move(cmp);
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  Json prov;
  prov["construction"] = net.provenance.construction;
  prov["params"] = Json::object();
  for (const auto& [k, v] : net.provenance.params) prov["params"][k] = v;
  prov["tags"] = Json::object();
  for (const auto& [k, v] : net.provenance.tags) prov["tags"][k] = v;
  j["provenance"] = std::move(prov);
  if (net.certificate) {
    const auto& c = *net.certificate;
    Json cj;
    cj["formula"] = c.formula;
    cj["params"] = Json::object();
    for (const auto& [k, v] : c.params) cj["params"][k] = v;
    cj["claimed_bound"] = c.claimed_bound;
    cj["achieved_depth"] = c.achieved_depth;
    cj["note"] = c.note;
    j["certificate"] = std::move(cj);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

SortingNetwork network_from_json(const Json& j) {
  const Json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw ParseError("unsupported network format version");
  SortingNetwork net;
  net.graph = graph_from_json(field(j, "graph"));
  const int n = net.graph.size();
  net.order = order_from_json(field(j, "order"));
  if (net.order.size() != n) throw ParseError("order length differs from n");
  const Json& stages = field(j, "stages");
  if (!stages.is_array()) throw ParseError("'stages' must be an array");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Json& s = stages[i];
    if (!s.is_object() || !s.contains("cmp") || !s["cmp"].is_array()) throw ParseError("stage needs a 'cmp' array", idx);
    Stage st;
    for (const auto& c : s["cmp"]) {
      if (!c.is_array() || c.size() != 3 || !c[2].is_string()) throw ParseError("comparator must be [u, v, kind]", idx);
      const std::string kind = c[2].get<std::string>();
      if (kind != "dir" && kind != "swap") throw ParseError("comparator kind must be 'dir' or 'swap'", idx);
      st.cmp.push_back({vertex_from(c[0], n, idx), vertex_from(c[1], n, idx), kind == "dir" ? CmpKind::Dir : CmpKind::Swap});
    }
    try {
      validate_stage(net.graph, st, idx);
    } catch (const Error& e) {
      throw ParseError(e.what(), idx);
    }
    net.stages.push_back(std::move(st));
  }
  if (j.contains("provenance") && j["provenance"].is_object()) {
    const Json& p = j["provenance"];
    if (p.contains("construction") && p["construction"].is_string()) net.provenance.construction = p["construction"];
    if (p.contains("params") && p["params"].is_object())
      for (const auto& [k, v] : p["params"].items())
        if (v.is_number_integer()) net.provenance.params.emplace_back(k, v.get<long long>());
    if (p.contains("tags") && p["tags"].is_object())
      for (const auto& [k, v] : p["tags"].items())
        if (v.is_string()) net.provenance.tags.emplace_back(k, v.get<std::string>());
  }
  if (j.contains("certificate") && j["certificate"].is_object()) {
    const Json& c = j["certificate"];
    DepthCertificate cert;
    cert.formula = c.value("formula", std::string{});
    if (c.contains("params") && c["params"].is_object())
      for (const auto& [k, v] : c["params"].items())
        if (v.is_number_integer()) cert.params.emplace_back(k, v.get<long long>());
    cert.claimed_bound = c.value("claimed_bound", 0LL);
    cert.achieved_depth = c.value("achieved_depth", 0LL);
    cert.note = c.value("note", std::string{});
    net.certificate = std::move(cert);
  }
  return net;
}

Json plan_to_json(const Graph& g, const RoutingPlan& plan) {
  Json j = network_to_json(plan_as_network(g, plan, "routing"));
  j["realized"] = permutation_to_json(plan.realized);
  return j;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.size(); ++v) out << "  " << v + 1 << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string network_to_dot(const SortingNetwork& net) {
  std::map<Edge, std::string> labels;
  for (std::size_t i = 0; i < net.stages.size(); ++i)
    for (const auto& c : net.stages[i].cmp) {
      auto& label = labels[make_edge(c.u, c.v)];
      if (!label.empty()) label += ",";
      label += std::to_string(i + 1);
      if (c.kind == CmpKind::Swap) label += "s";
      else label += c.u < c.v ? ">" : "<";
    }
  std::ostringstream out;
  out << "graph G {\n";
  out << "  label=\"" << net.provenance.construction << " depth " << net.depth() << "\";\n";
  for (Vertex v = 0; v < net.graph.size(); ++v)
    out << "  " << v + 1 << " [label=\"" << v + 1 << " (rank " << net.order.rank(v) + 1 << ")\"];\n";
  for (const auto& [u, v] : net.graph.edges()) {
    out << "  " << u + 1 << " -- " << v + 1;
    const auto it = labels.find({u, v});
    if (it != labels.end()) out << " [label=\"" << it->second << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Graph load_graph(const std::string& spec, std::uint64_t seed) {
  if (std::filesystem::exists(spec)) return graph_from_json(parse_json(read_text(spec)));
  return generate(parse_family(spec), seed);
}

}  // namespace matchnet
