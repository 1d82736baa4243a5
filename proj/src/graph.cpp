#include "oppo/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace oppo {

namespace {

constexpr std::size_t kDenseLimit = 4096;

}  // namespace

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
             std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n) {
        throw GraphError("label count does not match vertex count");
    }
    build(n, edges);
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
             std::vector<std::string> labels)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
            std::move(labels)) {}

void Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    edges_.clear();
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw GraphError("edge endpoint out of range");
        }
        if (a == b) {
            throw GraphError("self-loop at vertex " + std::to_string(a));
        }
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(n, {});
    adj_eid_.assign(n, {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        adj_[edges_[e].u].push_back(edges_[e].v);
        adj_[edges_[e].v].push_back(edges_[e].u);
    }
    for (Vertex v = 0; v < n; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        adj_eid_[v].reserve(adj_[v].size());
    }
    // Edges are sorted by (u, v), so scanning them in order appends ids in
    // neighbor order for the lower endpoint; the upper endpoint needs a lookup.
    for (Vertex v = 0; v < n; ++v) {
        adj_eid_[v].resize(adj_[v].size());
    }
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        auto iu = std::lower_bound(adj_[u].begin(), adj_[u].end(), v) - adj_[u].begin();
        auto iv = std::lower_bound(adj_[v].begin(), adj_[v].end(), u) - adj_[v].begin();
        adj_eid_[u][iu] = e;
        adj_eid_[v][iv] = e;
    }

    bits_.clear();
    words_ = 0;
    if (n <= kDenseLimit) {
        words_ = (n + 63) / 64;
        bits_.assign(n * words_, 0);
        for (auto [u, v] : edges_) {
            bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
            bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) {
        return false;
    }
    if (words_ != 0) {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) {
        return kNoEdge;
    }
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) {
        return kNoEdge;
    }
    return adj_eid_[u][static_cast<std::size_t>(it - nb.begin())];
}

std::string Graph::label(Vertex v) const {
    if (labels_.empty()) {
        return std::to_string(v);
    }
    return labels_[v];
}

// ---------------------------------------------------------------- Orientation

Orientation::Orientation(const Graph& g) : base_(&g), reversed_(g.size(), 0) {}

void Orientation::set(Vertex tail, Vertex head) {
    EdgeId e = base_->edge_id(tail, head);
    if (e == kNoEdge) {
        throw GraphError("not an edge: " + std::to_string(tail) + "-" + std::to_string(head));
    }
    reversed_[e] = tail < head ? 0 : 1;
}

Arc Orientation::arc(EdgeId e) const {
    const Edge& ed = base_->edge(e);
    return reversed_[e] ? Arc{ed.v, ed.u} : Arc{ed.u, ed.v};
}

bool Orientation::points(Vertex u, Vertex v) const {
    EdgeId e = base_->edge_id(u, v);
    if (e == kNoEdge) {
        return false;
    }
    return arc(e).tail == u;
}

std::vector<Arc> Orientation::arcs() const {
    std::vector<Arc> out;
    out.reserve(reversed_.size());
    for (EdgeId e = 0; e < reversed_.size(); ++e) {
        out.push_back(arc(e));
    }
    return out;
}

Orientation Orientation::reversed() const {
    Orientation r = *this;
    for (auto& bit : r.reversed_) {
        bit ^= 1U;
    }
    return r;
}

PartialOrientation::PartialOrientation(const Graph& g)
    : base_(&g), state_(g.size(), kUnset) {}

std::optional<Arc> PartialOrientation::arc(EdgeId e) const {
    if (state_[e] == kUnset) {
        return std::nullopt;
    }
    const Edge& ed = base_->edge(e);
    return state_[e] ? Arc{ed.v, ed.u} : Arc{ed.u, ed.v};
}

bool PartialOrientation::set(Vertex tail, Vertex head) {
    EdgeId e = base_->edge_id(tail, head);
    if (e == kNoEdge) {
        throw GraphError("not an edge: " + std::to_string(tail) + "-" + std::to_string(head));
    }
    std::uint8_t want = tail < head ? 0 : 1;
    if (state_[e] != kUnset && state_[e] != want) {
        return false;
    }
    state_[e] = want;
    return true;
}

bool PartialOrientation::points(Vertex u, Vertex v) const {
    EdgeId e = base_->edge_id(u, v);
    if (e == kNoEdge || state_[e] == kUnset) {
        return false;
    }
    return arc(e)->tail == u;
}

std::size_t PartialOrientation::directed_count() const {
    return static_cast<std::size_t>(
        std::count_if(state_.begin(), state_.end(), [](auto s) { return s != kUnset; }));
}

std::vector<Arc> PartialOrientation::arcs() const {
    std::vector<Arc> out;
    for (EdgeId e = 0; e < state_.size(); ++e) {
        if (auto a = arc(e)) {
            out.push_back(*a);
        }
    }
    return out;
}

// ---------------------------------------------------------------- subgraphs

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> to_original;
    std::vector<Vertex> to_new(g.order(), kNoEdge);
    for (Vertex v : vertices) {
        if (v >= g.order()) {
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        }
        if (to_new[v] == kNoEdge) {
            to_new[v] = static_cast<Vertex>(to_original.size());
            to_original.push_back(v);
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex nv = 0; nv < to_original.size(); ++nv) {
        for (Vertex w : g.neighbors(to_original[nv])) {
            if (to_new[w] != kNoEdge && nv < to_new[w]) {
                edges.emplace_back(nv, to_new[w]);
            }
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (Vertex v : to_original) {
            labels.push_back(g.label(v));
        }
    }
    return {Graph(to_original.size(), edges, std::move(labels)), std::move(to_original)};
}

InducedSubgraph delete_vertex(const Graph& g, Vertex v) {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u != v) {
            keep.push_back(u);
        }
    }
    return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.order(), edges, g.labels());
}

Components connected_components(const Graph& g) {
    Components c;
    c.of.assign(g.order(), static_cast<std::uint32_t>(-1));
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (c.of[s] != static_cast<std::uint32_t>(-1)) {
            continue;
        }
        auto id = static_cast<std::uint32_t>(c.count++);
        c.of[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (c.of[w] == static_cast<std::uint32_t>(-1)) {
                    c.of[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return c;
}

bool is_connected(const Graph& g) {
    return connected_components(g).count <= 1;
}

// ---------------------------------------------------------------- parsing

Graph parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<Vertex>(labels.size()));
        if (inserted) {
            labels.push_back(token);
        }
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) {
            tokens.push_back(std::move(tok));
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() == 1) {
            // A lone token declares an isolated vertex.
            intern(tokens[0]);
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 2 tokens, got " +
                                 std::to_string(tokens.size()),
                             line_no);
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at '" + tokens[0] + "'",
                             line_no);
        }
        Vertex a = intern(tokens[0]);
        Vertex b = intern(tokens[1]);
        edges.emplace_back(a, b);
    }
    const std::size_t n = labels.size();
    return Graph(n, edges, std::move(labels));
}

namespace {

std::size_t graph6_value(std::string_view s, std::size_t at) {
    unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) {
        throw ParseError("graph6: invalid character at offset " + std::to_string(at), at);
    }
    return c - 63U;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
        line.remove_suffix(1);
    }
    std::size_t offset = 0;
    if (line.starts_with(">>graph6<<")) {
        offset = 10;
    }
    if (offset >= line.size()) {
        throw ParseError("graph6: empty input", offset);
    }
    std::size_t n = 0;
    std::size_t p = offset;
    if (graph6_value(line, p) < 63) {
        n = graph6_value(line, p);
        p += 1;
    } else if (p + 1 < line.size() && graph6_value(line, p + 1) < 63) {
        if (p + 3 >= line.size()) {
            throw ParseError("graph6: truncated size field", p);
        }
        n = (graph6_value(line, p + 1) << 12) | (graph6_value(line, p + 2) << 6) |
            graph6_value(line, p + 3);
        p += 4;
    } else {
        if (p + 7 >= line.size()) {
            throw ParseError("graph6: truncated size field", p);
        }
        for (std::size_t i = 2; i < 8; ++i) {
            n = (n << 6) | graph6_value(line, p + i);
        }
        p += 8;
    }
    std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::size_t need = (bits + 5) / 6;
    if (line.size() - p != need) {
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                             std::to_string(line.size() - p),
                         line.size() < p + need ? line.size() : p + need);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            std::size_t byte = p + k / 6;
            std::size_t bit = 5 - k % 6;
            if ((graph6_value(line, byte) >> bit) & 1U) {
                edges.emplace_back(i, j);
            }
        }
    }
    // Padding bits must be zero.
    for (; k < need * 6; ++k) {
        std::size_t byte = p + k / 6;
        if ((graph6_value(line, byte) >> (5 - k % 6)) & 1U) {
            throw ParseError("graph6: nonzero padding at offset " + std::to_string(byte), byte);
        }
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < 258048) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> s) & 63U)));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> s) & 63U)));
        }
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    std::vector<bool> seen(g.order(), false);
    for (auto [u, v] : g.edges()) {
        out += g.label(u) + " " + g.label(v) + "\n";
        seen[u] = seen[v] = true;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!seen[v]) {
            out += g.label(v) + "\n";
        }
    }
    return out;
}

namespace {

std::string dot_id(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string emit_dot(const Graph& g, const DotOptions& options) {
    const bool directed = options.orientation != nullptr;
    std::vector<bool> hl(g.order(), false);
    for (Vertex v : options.highlight) {
        if (v < g.order()) {
            hl[v] = true;
        }
    }
    std::ostringstream out;
    out << (directed ? "digraph " : "graph ") << dot_id(options.name) << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << dot_id(g.label(v));
        if (hl[v]) {
            out << " [style=filled, fillcolor=red]";
        }
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.size(); ++e) {
        Vertex a = g.edge(e).u;
        Vertex b = g.edge(e).v;
        if (directed) {
            Arc arc = options.orientation->arc(e);
            a = arc.tail;
            b = arc.head;
        }
        out << "  " << dot_id(g.label(a)) << (directed ? " -> " : " -- ") << dot_id(g.label(b))
            << ";\n";
    }
    out << "}\n";
    return out.str();
}

Graph path_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    }
    return Graph(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i <= leaves; ++i) {
        e.emplace_back(0, i);
    }
    return Graph(leaves + 1, e);
}

}  // namespace oppo
