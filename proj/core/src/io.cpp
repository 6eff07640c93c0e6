#include "coarse/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace coarse::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_to_json(const Rat& x) {
    if (x.is_integer()) return ordered_json(x.num());
    return ordered_json(x.str());
}

Rat rat_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw InputError("expected an integer or \"num/den\" string");
}

ordered_json parse_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON");
    return j;
}

const ordered_json& field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
    return *it;
}

ordered_json nodes_to_json(const std::vector<TreeNode>& nodes) {
    ordered_json out = ordered_json::array();
    for (const TreeNode& node : nodes) {
        ordered_json n;
        n["id"] = node.id;
        n["bag"] = node.bag;
        if (node.cover) {
            ordered_json cover = ordered_json::array();
            for (const Ball& b : *node.cover) {
                ordered_json jb;
                jb["center"] = b.center;
                jb["radius"] = rat_to_json(b.radius);
                cover.push_back(std::move(jb));
            }
            n["cover"] = std::move(cover);
        }
        out.push_back(std::move(n));
    }
    return out;
}

std::vector<TreeNode> nodes_from_json(const ordered_json& j) {
    if (!j.is_array()) throw InputError("\"nodes\" must be an array");
    std::vector<TreeNode> nodes;
    for (const auto& jn : j) {
        TreeNode node;
        node.id = field(jn, "id").get<int>();
        node.bag = field(jn, "bag").get<std::vector<int>>();
        if (auto it = jn.find("cover"); it != jn.end()) {
            std::vector<Ball> cover;
            for (const auto& jb : *it)
                cover.push_back(Ball{field(jb, "center").get<int>(),
                                     rat_from_json(field(jb, "radius"))});
            node.cover = std::move(cover);
        }
        nodes.push_back(std::move(node));
    }
    return nodes;
}

std::vector<std::pair<int, int>> edges_from_json(const ordered_json& j) {
    if (!j.is_array()) throw InputError("edge list must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& je : j) {
        if (!je.is_array() || je.size() != 2) throw InputError("edge must be a pair");
        edges.emplace_back(je[0].get<int>(), je[1].get<int>());
    }
    return edges;
}

ordered_json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
    ordered_json out = ordered_json::array();
    for (auto [a, b] : edges) out.push_back(ordered_json::array({a, b}));
    return out;
}

std::string dot_of(const std::vector<TreeNode>& nodes,
                   const std::vector<std::pair<int, int>>& edges, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n  node [shape=box];\n";
    for (const TreeNode& node : nodes) {
        out << "  n" << node.id << " [label=\"" << node.id << ":";
        for (int v : node.bag) out << " " << v;
        out << "\"];\n";
    }
    for (auto [a, b] : edges) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edge_list()) out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string graph_to_text(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const auto& [u, v, w] : g.edge_list())
        out << "e " << u << " " << v << " " << w.str_fraction() << "\n";
    return out.str();
}

namespace {

struct TextGraph {
    int n{0};
    long long m{0};
    std::vector<std::tuple<int, int, std::optional<Rat>>> edges;
};

TextGraph parse_text(const std::string& text) {
    TextGraph tg;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw InputError("duplicate header line");
            if (!(ls >> tg.n >> tg.m)) throw InputError("malformed header line");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw InputError("edge before header");
            int u, v;
            if (!(ls >> u >> v)) throw InputError("malformed edge line");
            std::string w;
            std::optional<Rat> weight;
            if (ls >> w) weight = Rat::parse(w);
            tg.edges.emplace_back(u, v, weight);
        } else {
            throw InputError("unknown line tag \"" + tag + "\"");
        }
    }
    if (!have_header) throw InputError("missing header line");
    if (static_cast<long long>(tg.edges.size()) != tg.m)
        throw InputError("edge count does not match header");
    return tg;
}

} // namespace

Graph graph_from_text(const std::string& text) {
    TextGraph tg = parse_text(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v, w] : tg.edges) {
        if (w) throw InputError("unexpected edge weight in plain graph");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(tg.n, edges);
}

WeightedGraph weighted_graph_from_text(const std::string& text) {
    TextGraph tg = parse_text(text);
    std::vector<std::tuple<int, int, Rat>> edges;
    for (const auto& [u, v, w] : tg.edges) {
        if (!w) throw InputError("missing edge weight");
        edges.emplace_back(u, v, *w);
    }
    return WeightedGraph::from_edges(tg.n, edges);
}

std::string graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.num_vertices();
    j["edges"] = edges_to_json(g.edge_list());
    return j.dump();
}

std::string graph_to_json(const WeightedGraph& g) {
    ordered_json j;
    j["n"] = g.num_vertices();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v, w] : g.edge_list())
        edges.push_back(ordered_json::array({u, v, rat_to_json(w)}));
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    int n = field(j, "n").get<int>();
    return Graph::from_edges(n, edges_from_json(field(j, "edges")));
}

WeightedGraph weighted_graph_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    int n = field(j, "n").get<int>();
    std::vector<std::tuple<int, int, Rat>> edges;
    for (const auto& je : field(j, "edges")) {
        if (!je.is_array() || je.size() != 3)
            throw InputError("weighted edge must be [u, v, weight]");
        edges.emplace_back(je[0].get<int>(), je[1].get<int>(), rat_from_json(je[2]));
    }
    return WeightedGraph::from_edges(n, edges);
}

namespace {

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

} // namespace

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? graph_from_json(text) : graph_from_text(text);
}

WeightedGraph load_weighted_graph(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? weighted_graph_from_json(text)
                                 : weighted_graph_from_text(text);
}

std::string weight_fn_to_json(const WeightFn& mu) {
    ordered_json j;
    ordered_json w = ordered_json::array();
    for (const Rat& x : mu.values()) w.push_back(x.str_fraction());
    j["weights"] = std::move(w);
    return j.dump();
}

WeightFn weight_fn_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    std::vector<Rat> w;
    for (const auto& jw : field(j, "weights")) w.push_back(rat_from_json(jw));
    return WeightFn(std::move(w));
}

WeightFn parse_mu_spec(const std::string& spec, int n) {
    if (spec == "uniform") return WeightFn::uniform(n);
    if (spec.rfind("indicator:", 0) == 0) {
        std::vector<int> verts;
        std::string rest = spec.substr(10);
        std::istringstream in(rest);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty()) throw InputError("empty indicator entry");
            try {
                verts.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw InputError("bad indicator entry \"" + item + "\"");
            }
        }
        return WeightFn::indicator(n, verts);
    }
    if (spec.rfind("file:", 0) == 0) {
        WeightFn mu = weight_fn_from_json(read_file(spec.substr(5)));
        if (mu.size() != n) throw InputError("weight file size does not match the graph");
        return mu;
    }
    throw InputError("bad weight spec \"" + spec + "\" (uniform | indicator:<list> | file:<path>)");
}

std::string distance_graph_to_json(const DistanceGraph& dg, const PhiMap& phi) {
    ordered_json j;
    j["r"] = dg.r;
    j["sigma"] = dg.sigma;
    j["weighted"] = dg.weighted;
    j["I"] = dg.members;
    ordered_json h;
    h["n"] = dg.h.num_vertices();
    h["edges"] = edges_to_json(dg.h.edge_list());
    j["H"] = std::move(h);
    j["phi"] = phi.to_member;
    return j.dump();
}

std::pair<DistanceGraph, PhiMap> distance_graph_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    DistanceGraph dg;
    dg.r = field(j, "r").get<int>();
    dg.sigma = field(j, "sigma").get<int>();
    dg.weighted = field(j, "weighted").get<bool>();
    dg.members = field(j, "I").get<std::vector<int>>();
    const ordered_json& h = field(j, "H");
    dg.h = Graph::from_edges(field(h, "n").get<int>(), edges_from_json(field(h, "edges")));
    PhiMap phi;
    phi.to_member = field(j, "phi").get<std::vector<int>>();
    dg.host_n = phi.size();
    if (static_cast<int>(dg.members.size()) != dg.h.num_vertices())
        throw InputError("member list does not match H");
    return {std::move(dg), std::move(phi)};
}

std::string tree_decomposition_to_json(const TreeDecomposition& td) {
    ordered_json j;
    j["nodes"] = nodes_to_json(td.nodes);
    j["tree_edges"] = edges_to_json(td.edges);
    return j.dump();
}

TreeDecomposition tree_decomposition_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    TreeDecomposition td;
    td.nodes = nodes_from_json(field(j, "nodes"));
    td.edges = edges_from_json(field(j, "tree_edges"));
    return td;
}

std::string tree_partition_to_json(const TreePartition& tp) {
    ordered_json j;
    j["spread"] = tp.spread;
    j["nodes"] = nodes_to_json(tp.nodes);
    j["tree_edges"] = edges_to_json(tp.edges);
    return j.dump();
}

TreePartition tree_partition_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    TreePartition tp;
    tp.spread = field(j, "spread").get<int>();
    tp.nodes = nodes_from_json(field(j, "nodes"));
    tp.edges = edges_from_json(field(j, "tree_edges"));
    return tp;
}

std::string tree_decomposition_to_dot(const TreeDecomposition& td) {
    return dot_of(td.nodes, td.edges, "td");
}

std::string tree_partition_to_dot(const TreePartition& tp) {
    return dot_of(tp.nodes, tp.edges, "tp");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
    if (!out) throw InputError("write failed for " + path);
}

std::string fnv1a64_hex(const std::string& data) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace coarse::io
