#include "raagtc/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace raagtc {

VertexSet VertexSet::full(int n) {
    if (n < 0 || n > kMaxVertices)
        throw capacity_error("vertex count " + std::to_string(n) + " exceeds capacity " +
                             std::to_string(kMaxVertices));
    VertexSet s;
    for (int v = 0; v < n; ++v) s.bits_.set(v);
    return s;
}

int VertexSet::first() const {
    if (bits_.none()) return -1;
    for (int v = 0; v < kMaxVertices; ++v)
        if (bits_.test(v)) return v;
    return -1;
}

std::vector<int> VertexSet::indices() const {
    std::vector<int> out;
    out.reserve(bits_.count());
    for (int v = 0; v < kMaxVertices; ++v)
        if (bits_.test(v)) out.push_back(v);
    return out;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    auto ai = a.indices();
    auto bi = b.indices();
    return std::lexicographical_compare(ai.begin(), ai.end(), bi.begin(), bi.end());
}

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<int, int>>& edge_pairs)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
    if (n_ > kMaxVertices)
        throw capacity_error("graph has " + std::to_string(n_) +
                             " vertices, capacity is " + std::to_string(kMaxVertices));
    std::unordered_map<std::string, int> seen;
    for (int v = 0; v < n_; ++v) {
        if (labels_[v].empty())
            throw argument_error("empty vertex label at index " + std::to_string(v));
        if (!seen.emplace(labels_[v], v).second)
            throw argument_error("duplicate vertex label '" + labels_[v] + "'");
    }
    adj_.assign(n_, VertexSet{});
    for (auto [u, v] : edge_pairs) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("edge endpoint outside vertex range");
        if (u == v)
            throw argument_error("self-loop at vertex '" + labels_[u] + "'");
        adj_[u].add(v);
        adj_[v].add(u);
    }
}

const std::string& Graph::label(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " outside graph");
    return labels_[v];
}

int Graph::index_of(const std::string& label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return -1;
}

bool Graph::adjacent(int u, int v) const {
    return neighbors(u).contains(v);
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " outside graph");
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u].indices())
            if (u < v) out.emplace_back(u, v);
    return out; // already sorted: outer loop ascending, indices() ascending
}

void Graph::check_vertex_set(const VertexSet& s) const {
    if (!s.subset_of(VertexSet::full(n_)))
        throw std::out_of_range("vertex set has members outside the graph");
}

bool Graph::is_clique(const VertexSet& s) const {
    check_vertex_set(s);
    for (int v : s.indices()) {
        // Everything in s except v itself must be a neighbor of v.
        if (!(s.minus(adj_[v]) == VertexSet::of({v}))) return false;
    }
    return true;
}

namespace {

struct EdgeListBuilder {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;

    int vertex(const std::string& name, int line) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        if (static_cast<int>(labels.size()) >= kMaxVertices)
            throw capacity_error("line " + std::to_string(line) + ": more than " +
                                 std::to_string(kMaxVertices) + " vertices");
        int id = static_cast<int>(labels.size());
        labels.push_back(name);
        index.emplace(name, id);
        return id;
    }
};

Graph parse_edge_list(const std::string& text) {
    EdgeListBuilder b;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            b.vertex(tokens[0], lineno);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1])
                throw parse_error(lineno, "self-loop on vertex '" + tokens[0] + "'");
            int u = b.vertex(tokens[0], lineno);
            int v = b.vertex(tokens[1], lineno);
            b.edges.emplace_back(u, v);
        } else {
            throw parse_error(lineno, "expected one or two vertex names, got " +
                                          std::to_string(tokens.size()) + " tokens");
        }
    }
    return Graph(std::move(b.labels), b.edges);
}

long long parse_int_token(const std::string& tok, int line, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0, declared_edges = 0, seen_edges = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) throw parse_error(lineno, "duplicate p header");
            std::string fmt, ntok, mtok;
            if (!(ls >> fmt >> ntok >> mtok) || fmt != "edge")
                throw parse_error(lineno, "expected 'p edge <n> <m>'");
            n = parse_int_token(ntok, lineno, "vertex count");
            declared_edges = parse_int_token(mtok, lineno, "edge count");
            if (n < 0 || declared_edges < 0)
                throw parse_error(lineno, "negative count in p header");
            if (n > kMaxVertices)
                throw capacity_error("line " + std::to_string(lineno) + ": " +
                                     std::to_string(n) + " vertices exceeds capacity " +
                                     std::to_string(kMaxVertices));
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) throw parse_error(lineno, "e line before p header");
            std::string utok, vtok;
            if (!(ls >> utok >> vtok))
                throw parse_error(lineno, "expected 'e <u> <v>'");
            long long u = parse_int_token(utok, lineno, "vertex");
            long long v = parse_int_token(vtok, lineno, "vertex");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "vertex outside 1.." + std::to_string(n));
            if (u == v)
                throw parse_error(lineno, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            ++seen_edges;
        } else {
            throw parse_error(lineno, "unknown line type '" + kind + "'");
        }
    }
    if (!have_header) throw parse_error(0, "missing p header");
    if (seen_edges != declared_edges)
        throw parse_error(0, "p header declares " + std::to_string(declared_edges) +
                                 " edges but " + std::to_string(seen_edges) +
                                 " e-lines found");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (long long v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return Graph(std::move(labels), edges);
}

} // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_dimacs(text);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) out << g.label(u) << " " << g.label(v) << "\n";
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto labels = nlohmann::ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    j["labels"] = std::move(labels);
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace raagtc
