#include "legal/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace legal {

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edge_count_;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::complement() const {
    Graph h(n_);
    for (int v = 0; v < n_; ++v) {
        h.adj_[v] = adj_[v].complemented();
        h.adj_[v].reset(v);
    }
    h.edge_count_ = (long long)n_ * (n_ - 1) / 2 - edge_count_;
    return h;
}

bool Graph::is_connected_subset(const VertexSet& s) const {
    int start = s.lowest();
    if (start < 0) return false;
    int remaining = s.count() - 1;
    if (remaining == 0) return true;

    size_t nw = adj_[0].words().size();
    // Scratch buffers are reused across calls; this runs millions of times
    // per verification pass.
    thread_local std::vector<uint64_t> visited, frontier, next;
    visited.assign(nw, 0);
    frontier.assign(nw, 0);
    next.resize(nw);
    visited[start >> 6] |= uint64_t{1} << (start & 63);
    frontier[start >> 6] |= uint64_t{1} << (start & 63);

    const uint64_t* sw = s.words().data();
    while (remaining > 0) {
        std::fill(next.begin(), next.end(), 0);
        bool expanded = false;
        for (size_t k = 0; k < nw; ++k) {
            uint64_t w = frontier[k];
            while (w) {
                int v = int(k * 64 + std::countr_zero(w));
                w &= w - 1;
                const uint64_t* row = adj_[v].words().data();
                for (size_t j = 0; j < nw; ++j) next[j] |= row[j];
                expanded = true;
            }
        }
        if (!expanded) return false;
        bool moved = false;
        for (size_t j = 0; j < nw; ++j) {
            uint64_t fresh = next[j] & sw[j] & ~visited[j];
            visited[j] |= fresh;
            frontier[j] = fresh;
            if (fresh) {
                remaining -= std::popcount(fresh);
                moved = true;
            }
        }
        if (!moved) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(edge_count_));
    for (int u = 0; u < n_; ++u) {
        adj_[u].for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    }
    return out;
}

Matching greedy_maximal_matching(const Graph& g, RandomStream& rng) {
    auto edge_list = g.edges();
    rng.shuffle(edge_list);
    Matching m;
    VertexSet used(g.vertex_count());
    for (auto [u, v] : edge_list) {
        if (!used.test(u) && !used.test(v)) {
            m.pairs.emplace_back(u, v);
            used.set(u);
            used.set(v);
        }
    }
    return m;
}

std::optional<K23Witness> k23_witness(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            VertexSet common = g.neighbours(a) & g.neighbours(b);
            if (common.count() >= 3) {
                K23Witness w;
                w.a = a;
                w.b = b;
                int idx = 0;
                common.for_each([&](int c) {
                    if (idx < 3) w.common[idx++] = c;
                });
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> d0_short_path_violation(const Graph& g, const VertexSet& d0,
                                                        int maxlen) {
    int n = g.vertex_count();
    std::vector<int> parent(n);
    std::vector<int> dist(n);

    std::optional<std::vector<int>> found;
    std::vector<int> queue;
    queue.reserve(n);
    for (int src = 0; src < n && !found; ++src) {
        if (!d0.test(src)) continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        parent[src] = -1;
        queue.clear();
        queue.push_back(src);
        for (size_t head = 0; head < queue.size() && !found; ++head) {
            int v = queue[head];
            if (dist[v] == maxlen) break;
            g.neighbours(v).for_each([&](int w) {
                if (found || dist[w] >= 0) return;
                dist[w] = dist[v] + 1;
                parent[w] = v;
                // Report each unordered pair once: targets above the source.
                if (d0.test(w) && w > src) {
                    std::vector<int> path;
                    for (int x = w; x != -1; x = parent[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    found = std::move(path);
                    return;
                }
                queue.push_back(w);
            });
        }
    }
    return found;
}

}  // namespace legal
