#include "leafspan/trees.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace leafspan {

std::vector<Edge> TreeCert::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < order(); ++v) {
        const int p = parent[static_cast<std::size_t>(v)];
        if (p != kNoParent) out.emplace_back(std::min(v, p), std::max(v, p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeCert& tree) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(tree.order()));
    for (auto [u, v] : tree.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

void check_encoding(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (n > kMaxVertices) throw std::invalid_argument("tree order exceeds 64");
    int roots = 0;
    for (int p : parent) {
        if (p == kNoParent) {
            ++roots;
        } else if (p < 0 || p >= n) {
            throw std::invalid_argument("parent index out of range");
        }
    }
    if (roots != 1) throw std::invalid_argument("tree must have exactly one root");
    for (int v = 0; v < n; ++v) {
        int x = v;
        for (int steps = 0; parent[static_cast<std::size_t>(x)] != kNoParent; ++steps) {
            if (steps >= n) throw std::invalid_argument("parent array contains a cycle");
            x = parent[static_cast<std::size_t>(x)];
        }
    }
}

}  // namespace

int leaf_distance(const TreeCert& tree) {
    const auto adj = tree_adjacency(tree);
    const int n = tree.order();
    int best = kInfiniteLeafDistance;
    for (int s = 0; s < n; ++s) {
        if (adj[static_cast<std::size_t>(s)].size() != 1) continue;
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::deque<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(w)] >= 0) continue;
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                if (adj[static_cast<std::size_t>(w)].size() == 1) best = std::min(best, dist[static_cast<std::size_t>(w)]);
                queue.push_back(w);
            }
        }
    }
    return best;
}

int leaf_degree(const TreeCert& tree) {
    const auto adj = tree_adjacency(tree);
    int best = 0;
    for (const auto& nbrs : adj) {
        const auto leaves = std::count_if(nbrs.begin(), nbrs.end(),
                                          [&](int w) { return adj[static_cast<std::size_t>(w)].size() == 1; });
        best = std::max(best, static_cast<int>(leaves));
    }
    return best;
}

TreeCert make_tree_cert(std::vector<int> parent) {
    check_encoding(parent);
    TreeCert t{std::move(parent)};
    t.leaf_distance = leaf_distance(t);
    t.leaf_degree = leaf_degree(t);
    return t;
}

TreeCert path_cert(const std::vector<int>& order) {
    std::vector<int> parent(order.size(), kNoParent);
    std::vector<bool> seen(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        if (v < 0 || v >= static_cast<int>(order.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("path order is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
        if (i > 0) parent[static_cast<std::size_t>(v)] = order[i - 1];
    }
    return make_tree_cert(std::move(parent));
}

bool is_spanning_tree_of(const TreeCert& tree, const Graph& g) {
    if (tree.order() != g.order()) return false;
    for (auto [u, v] : tree.edges()) {
        if (!g.adjacent(u, v)) return false;
    }
    return true;
}

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::None: return "none";
        case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::uint64_t default_branch_budget() {
    if (const char* env = std::getenv("LEAFSPAN_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBranchBudget;
}

namespace {

enum class Constraint { MinLeafDistance, MaxLeafDegree };

// Grows a subtree from vertex 0 by branching on one frontier edge at a time:
// either the edge joins the tree or it is forbidden for the rest of the
// branch. Every spanning tree is reached exactly once. A tree vertex whose
// allowed edges all point back into the tree has its final degree, so a
// degree-1 vertex in that state is a committed leaf and the constraint can be
// tested on committed leaves early.
class TreeSearch {
public:
    TreeSearch(const Graph& g, Constraint kind, int bound, std::uint64_t budget)
        : n_(g.order()), kind_(kind), bound_(bound), budget_(budget) {
        for (int v = 0; v < n_; ++v) avail_[static_cast<std::size_t>(v)] = g.neighbors(v);
        parent_.fill(kNoParent);
    }

    TreeSearchResult run() {
        add_root(0);
        TreeSearchResult out;
        const bool found = violates() ? false : descend();
        out.nodes = nodes_;
        if (found) {
            out.status = SearchStatus::Found;
            out.tree = make_tree_cert(std::vector<int>(parent_.begin(), parent_.begin() + n_));
        } else {
            out.status = exhausted_ ? SearchStatus::Inconclusive : SearchStatus::None;
        }
        return out;
    }

private:
    void add_root(int r) {
        tree_.insert(r);
        stack_[depth_++] = r;
        dist_[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 0;
    }

    void attach(int u, int w) {
        parent_[static_cast<std::size_t>(w)] = u;
        ++tdeg_[static_cast<std::size_t>(u)];
        tdeg_[static_cast<std::size_t>(w)] = 1;
        tadj_[static_cast<std::size_t>(u)].insert(w);
        tadj_[static_cast<std::size_t>(w)] = VertexSet::single(u);
        for_each_vertex(tree_, [&](int x) {
            const auto d = static_cast<std::uint8_t>(dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] + 1);
            dist_[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)] = d;
            dist_[static_cast<std::size_t>(x)][static_cast<std::size_t>(w)] = d;
        });
        dist_[static_cast<std::size_t>(w)][static_cast<std::size_t>(w)] = 0;
        tree_.insert(w);
        stack_[depth_++] = w;
    }

    void detach(int u, int w) {
        --depth_;
        tree_.erase(w);
        tadj_[static_cast<std::size_t>(u)].erase(w);
        tadj_[static_cast<std::size_t>(w)] = {};
        tdeg_[static_cast<std::size_t>(w)] = 0;
        --tdeg_[static_cast<std::size_t>(u)];
        parent_[static_cast<std::size_t>(w)] = kNoParent;
    }

    void toggle(int u, int w, bool allow) {
        if (allow) {
            avail_[static_cast<std::size_t>(u)].insert(w);
            avail_[static_cast<std::size_t>(w)].insert(u);
        } else {
            avail_[static_cast<std::size_t>(u)].erase(w);
            avail_[static_cast<std::size_t>(w)].erase(u);
        }
    }

    bool outside_reachable() const {
        VertexSet seen = tree_;
        VertexSet frontier = tree_;
        const VertexSet all = VertexSet::range(n_);
        while (!frontier.empty()) {
            VertexSet next;
            for_each_vertex(frontier, [&](int v) { next = next | avail_[static_cast<std::size_t>(v)]; });
            frontier = next - seen;
            seen = seen | frontier;
        }
        return seen == all;
    }

    bool violates() const {
        VertexSet leaves;
        for_each_vertex(tree_, [&](int x) {
            if (tdeg_[static_cast<std::size_t>(x)] == 1 && (avail_[static_cast<std::size_t>(x)] - tree_).empty()) {
                leaves.insert(x);
            }
        });
        if (leaves.empty()) return false;
        if (kind_ == Constraint::MinLeafDistance) {
            bool bad = false;
            for_each_vertex(leaves, [&](int a) {
                if (bad) return;
                for_each_vertex(leaves, [&](int b) {
                    if (a < b && dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] < bound_) bad = true;
                });
            });
            return bad;
        }
        bool bad = false;
        for_each_vertex(tree_, [&](int x) {
            if ((tadj_[static_cast<std::size_t>(x)] & leaves).size() > bound_) bad = true;
        });
        return bad;
    }

    bool descend() {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (depth_ == n_) return true;

        int u = -1;
        VertexSet out;
        for (int i = depth_ - 1; i >= 0; --i) {
            out = avail_[static_cast<std::size_t>(stack_[i])] - tree_;
            if (!out.empty()) {
                u = stack_[i];
                break;
            }
        }
        if (u < 0) return false;
        const int w = out.front();

        attach(u, w);
        if (!violates() && descend()) return true;
        detach(u, w);
        if (exhausted_) return false;

        toggle(u, w, false);
        if (outside_reachable() && !violates() && descend()) return true;
        toggle(u, w, true);
        return false;
    }

    int n_;
    Constraint kind_;
    int bound_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;

    VertexSet tree_;
    int depth_ = 0;
    std::array<int, kMaxVertices> stack_{};
    std::array<int, kMaxVertices> parent_{};
    std::array<int, kMaxVertices> tdeg_{};
    std::array<VertexSet, kMaxVertices> tadj_{};
    std::array<VertexSet, kMaxVertices> avail_{};
    std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> dist_{};
};

void check_search_input(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("spanning tree search needs n >= 2");
    if (!is_connected(g)) throw std::domain_error("spanning tree search needs a connected graph");
}

}  // namespace

TreeSearchResult find_spanning_tree_leaf_distance(const Graph& g, int d, std::uint64_t budget) {
    check_search_input(g);
    if (d < 1) throw std::invalid_argument("leaf distance bound d must be >= 1");
    return TreeSearch(g, Constraint::MinLeafDistance, d, budget).run();
}

TreeSearchResult find_spanning_tree_leaf_degree(const Graph& g, int k, std::uint64_t budget) {
    check_search_input(g);
    if (k < 1) throw std::invalid_argument("leaf degree bound k must be >= 1");
    return TreeSearch(g, Constraint::MaxLeafDegree, k, budget).run();
}

TreeCert hamilton_path_extremal(ExtremalParams params) {
    params.validate();
    const auto [n, t] = params;
    if (n < 5) throw std::invalid_argument("hamilton_path_extremal needs n >= 5");
    std::vector<int> order;
    for (int i = 0; i < t; ++i) {
        order.push_back(n - t + i);  // u_i
        order.push_back(i);          // s_i
    }
    for (int j = t; j < n - t; ++j) order.push_back(j);  // w_j
    return path_cert(order);
}

}  // namespace leafspan
