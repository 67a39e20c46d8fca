#include "leafspan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace leafspan {

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_vertex(*this, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
    }
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw std::out_of_range("vertex index out of range");
    }
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += row.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for_each_vertex(neighbors(u), [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph edgeless(int n) { return Graph(n); }

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    if (n1 + g2.order() > kMaxVertices) {
        throw std::invalid_argument("combined order exceeds 64 vertices");
    }
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    const int n1 = g1.order();
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < g2.order(); ++v) g.add_edge(u, n1 + v);
    return g;
}

namespace {

VertexSet reach_from(const Graph& g, int source) {
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for_each_vertex(frontier, [&](int v) { next = next | g.neighbors(v); });
        frontier = next - seen;
        seen = seen | frontier;
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) { return reach_from(g, 0) == g.vertices(); }

int component_count(const Graph& g) {
    int count = 0;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        left = left - reach_from(g, left.front());
        ++count;
    }
    return count;
}

int min_degree(const Graph& g) {
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

DistMatrix::DistMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {
    if (static_cast<int>(d_.size()) != n * n) throw std::invalid_argument("distance matrix size mismatch");
}

int DistMatrix::transmission(int v) const {
    int sum = 0;
    for (int j = 0; j < n_; ++j) sum += at(v, j);
    return sum;
}

int DistMatrix::diameter() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

DistMatrix bfs_distances(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n * n), -1);
    for (int s = 0; s < n; ++s) {
        VertexSet seen = VertexSet::single(s);
        VertexSet layer = seen;
        int level = 0;
        while (!layer.empty()) {
            for_each_vertex(layer, [&](int v) { d[static_cast<std::size_t>(s * n + v)] = level; });
            VertexSet next;
            for_each_vertex(layer, [&](int v) { next = next | g.neighbors(v); });
            layer = next - seen;
            seen = seen | layer;
            ++level;
        }
        if (seen != g.vertices()) throw std::domain_error("distance matrix of a disconnected graph is undefined");
    }
    return DistMatrix(n, std::move(d));
}

// graph6 --------------------------------------------------------------------

namespace {

constexpr int kG6Offset = 63;
constexpr std::string_view kG6Prefix = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kG6Prefix)) text.remove_prefix(kG6Prefix.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    auto value_at = [&](std::size_t i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kG6Offset || c > kG6Offset + 63) {
            throw std::invalid_argument("graph6: byte out of range at position " + std::to_string(i));
        }
        return c - kG6Offset;
    };

    std::size_t pos = 0;
    long long n = 0;
    if (value_at(0) < 63) {
        n = value_at(0);
        pos = 1;
    } else if (text.size() >= 2 && value_at(1) < 63) {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated header");
        n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw std::invalid_argument("graph6: truncated header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value_at(i);
        pos = 8;
    }
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " outside [1, 64]");
    }

    const long long bit_count = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bit_count + 5) / 6);
    if (text.size() - pos != body) {
        throw std::invalid_argument("graph6: expected " + std::to_string(body) + " data bytes, got " +
                                    std::to_string(text.size() - pos));
    }

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = value_at(pos + static_cast<std::size_t>(k / 6));
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < static_cast<long long>(body) * 6; ++k) {
        const int byte = value_at(pos + static_cast<std::size_t>(k / 6));
        if ((byte >> (5 - k % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

std::string format_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Offset + n));
    } else {
        out.push_back('~');
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(kG6Offset + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kG6Offset + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kG6Offset + (acc << (6 - filled))));
    return out;
}

// edge list -----------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int max_index = -1;
    int line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        line.remove_prefix(first);

        int ends[2];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int& x : ends) {
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            auto [next, ec] = std::from_chars(p, end, x);
            if (ec != std::errc{} || x < 0) {
                throw std::invalid_argument("edge list: malformed line " + std::to_string(line_no));
            }
            p = next;
        }
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        if (p != end) throw std::invalid_argument("edge list: trailing text on line " + std::to_string(line_no));
        if (ends[0] == ends[1]) throw std::invalid_argument("edge list: self-loop on line " + std::to_string(line_no));
        max_index = std::max({max_index, ends[0], ends[1]});
        if (max_index >= kMaxVertices) throw std::invalid_argument("edge list: vertex index exceeds 63");
        edges.emplace_back(ends[0], ends[1]);
    }
    if (max_index < 0) throw std::invalid_argument("edge list: no edges");
    return Graph::from_edges(max_index + 1, edges);
}

std::string format_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

}  // namespace leafspan
