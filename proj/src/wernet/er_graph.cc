// Copyright 2026 The wernet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wernet/er_graph.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "wernet/protocol.h"

namespace wernet {

namespace {

double uniform53(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_pair(const Graph &g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.num_nodes() || v >= g.num_nodes() || u == v) {
        throw std::invalid_argument("er_graph: invalid node pair");
    }
}

// Positions of the canonical shortest path's nodes; -1 elsewhere. An edge
// belongs to the path iff its endpoints sit at consecutive positions.
class PathMarks {
   public:
    explicit PathMarks(int n) : pos_(n, -1) {
    }
    void set(std::span<const int> path) {
        clear();
        path_.assign(path.begin(), path.end());
        for (size_t k = 0; k < path_.size(); k++) {
            pos_[path_[k]] = static_cast<int>(k);
        }
    }
    void clear() {
        for (int v : path_) {
            pos_[v] = -1;
        }
        path_.clear();
    }
    bool on_path_edge(int a, int b) const {
        int pa = pos_[a];
        int pb = pos_[b];
        return pa >= 0 && pb >= 0 && (pa - pb == 1 || pb - pa == 1);
    }

   private:
    std::vector<int> pos_;
    std::vector<int> path_;
};

// BFS that skips shortest-path edges.
void bfs_avoiding(const Graph &g, int source, int max_depth, const PathMarks &marks, BfsScratch &s) {
    s.reset();
    s.dist[source] = 0;
    s.order.push_back(source);
    for (size_t head = 0; head < s.order.size(); head++) {
        int v = s.order[head];
        int d = s.dist[v];
        if (d >= max_depth) {
            continue;
        }
        for (int w : g.neighbors(v)) {
            if (s.dist[w] != kUnreachable || marks.on_path_edge(v, w)) {
                continue;
            }
            s.dist[w] = d + 1;
            s.parent[w] = v;
            s.order.push_back(w);
        }
    }
}

// Depth-first enumeration of simple paths from `v` to `target` of length in
// [min_len, max_len] that avoid shortest-path edges. `to_target` holds
// distances to the target in the same edge-deleted graph and prunes branches.
template <typename Visit>
void extend_paths(
    const Graph &g,
    int target,
    int min_len,
    int max_len,
    const PathMarks &marks,
    const BfsScratch &to_target,
    std::vector<char> &used,
    std::vector<int> &stack,
    Visit &&visit) {
    int v = stack.back();
    int len = static_cast<int>(stack.size()) - 1;
    if (v == target) {
        if (len >= min_len) {
            visit(stack);
        }
        return;
    }
    for (int w : g.neighbors(v)) {
        if (used[w] || marks.on_path_edge(v, w)) {
            continue;
        }
        int rest = to_target.dist[w];
        if (rest == kUnreachable || len + 1 + rest > max_len) {
            continue;
        }
        used[w] = 1;
        stack.push_back(w);
        extend_paths(g, target, min_len, max_len, marks, to_target, used, stack, visit);
        stack.pop_back();
        used[w] = 0;
    }
}

// Shared per-graph working memory for the SPP searches.
struct SppWorkspace {
    PathMarks marks;
    BfsScratch outer;
    BfsScratch inner;
    std::vector<char> used;
    std::vector<int> stack;
    std::vector<int> path;

    explicit SppWorkspace(int n) : marks(n), outer(n), inner(n), used(n, 0) {
    }

    // Path from the BFS root of `outer` to v.
    void path_to(int v) {
        path.clear();
        for (int w = v; w != -1; w = outer.parent[w]) {
            path.push_back(w);
        }
        std::reverse(path.begin(), path.end());
        marks.set(path);
    }

    template <typename Visit>
    void alternates(const Graph &g, int s, int t, int min_len, int max_len, Visit &&visit) {
        bfs_avoiding(g, t, max_len, marks, inner);
        used[s] = 1;
        stack.assign(1, s);
        extend_paths(g, t, min_len, max_len, marks, inner, used, stack, visit);
        used[s] = 0;
    }
};

int max_L_of(std::span<const SppGeometry> geoms) {
    int L = 0;
    for (const SppGeometry &geom : geoms) {
        L = std::max(L, geom.L);
    }
    return L;
}

void require_geometry(SppGeometry geom) {
    if (geom.L < 2 || geom.n < 2 || geom.n > geom.L || geom.m_prime < geom.n || geom.m_prime > 2 * geom.n - 1) {
        throw std::invalid_argument("SppGeometry: requires 2 <= n <= L and n <= m' <= 2n - 1");
    }
}

double falling_from_n_minus_2(int N, int count) {
    double prod = 1;
    for (int k = 2; k < 2 + count; k++) {
        prod *= N - k;
    }
    return prod;
}

}  // namespace

Graph::Graph(int num_nodes, std::span<const std::pair<int, int>> edges) : num_nodes_(num_nodes) {
    if (num_nodes < 0) {
        throw std::invalid_argument("Graph: negative node count");
    }
    std::vector<size_t> degree(num_nodes + 1, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
            throw std::invalid_argument("Graph: endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("Graph: self-loop at node " + std::to_string(u));
        }
        degree[u]++;
        degree[v]++;
    }
    offsets_.assign(num_nodes + 1, 0);
    for (int v = 0; v < num_nodes; v++) {
        offsets_[v + 1] = offsets_[v] + degree[v];
    }
    adjacency_.resize(offsets_[num_nodes]);
    std::vector<size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (int v = 0; v < num_nodes; v++) {
        auto first = adjacency_.begin() + offsets_[v];
        auto last = adjacency_.begin() + offsets_[v + 1];
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            throw std::invalid_argument("Graph: duplicate edge at node " + std::to_string(v));
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges());
    for (int u = 0; u < num_nodes_; u++) {
        for (int v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph generate_er(int N, double p, std::mt19937_64 &rng) {
    if (N < 2) {
        throw std::invalid_argument("generate_er: N must be >= 2");
    }
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("generate_er: p must lie in [0, 1]");
    }
    std::vector<std::pair<int, int>> edges;
    if (p == 1) {
        for (int v = 1; v < N; v++) {
            for (int w = 0; w < v; w++) {
                edges.emplace_back(w, v);
            }
        }
    } else if (p > 0) {
        edges.reserve(static_cast<size_t>(p * N * (N - 1) / 2 * 1.1) + 16);
        double log_q = std::log1p(-p);
        int64_t v = 1;
        int64_t w = -1;
        while (v < N) {
            double skip = std::floor(std::log1p(-uniform53(rng)) / log_q);
            w += 1 + static_cast<int64_t>(std::min(skip, 4.0e18));
            while (w >= v && v < N) {
                w -= v;
                v++;
            }
            if (v < N) {
                edges.emplace_back(static_cast<int>(w), static_cast<int>(v));
            }
        }
    }
    return Graph(N, edges);
}

void BfsScratch::reset() {
    for (int v : order) {
        dist[v] = kUnreachable;
        parent[v] = -1;
    }
    order.clear();
}

void bfs(const Graph &g, int source, int max_depth, BfsScratch &s) {
    s.reset();
    s.dist[source] = 0;
    s.order.push_back(source);
    for (size_t head = 0; head < s.order.size(); head++) {
        int v = s.order[head];
        int d = s.dist[v];
        if (d >= max_depth) {
            continue;
        }
        for (int w : g.neighbors(v)) {
            if (s.dist[w] == kUnreachable) {
                s.dist[w] = d + 1;
                s.parent[w] = v;
                s.order.push_back(w);
            }
        }
    }
}

DistanceMatrix shortest_path_lengths(const Graph &g) {
    int n = g.num_nodes();
    DistanceMatrix out(n);
    BfsScratch s(n);
    for (int u = 0; u < n; u++) {
        bfs(g, u, INT_MAX, s);
        for (int v : s.order) {
            out.at(u, v) = s.dist[v];
        }
    }
    return out;
}

std::vector<int> shortest_path(const Graph &g, int u, int v) {
    require_pair(g, u, v);
    int lo = std::min(u, v);
    int hi = std::max(u, v);
    BfsScratch s(g.num_nodes());
    bfs(g, lo, INT_MAX, s);
    std::vector<int> path;
    if (s.dist[hi] == kUnreachable) {
        return path;
    }
    for (int w = hi; w != -1; w = s.parent[w]) {
        path.push_back(w);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<SppConfiguration> enumerate_spp(const Graph &g, int u, int v, const SppFilter &filter) {
    require_pair(g, u, v);
    std::vector<SppConfiguration> out;
    SppWorkspace ws(g.num_nodes());
    int lo = std::min(u, v);
    bfs(g, lo, INT_MAX, ws.outer);
    int hi = std::max(u, v);
    if (ws.outer.dist[hi] == kUnreachable) {
        return out;
    }
    ws.path_to(hi);
    std::vector<int> path = ws.path;
    int L = static_cast<int>(path.size()) - 1;
    int n_hi = std::min(filter.max_n, L);
    for (int n = std::max(2, filter.min_n); n <= n_hi; n++) {
        int max_len = static_cast<int>(std::min<int64_t>(2 * n - 1, static_cast<int64_t>(n) + filter.max_extra));
        for (int pos = 0; pos + n <= L; pos++) {
            ws.alternates(g, path[pos], path[pos + n], n, max_len, [&](const std::vector<int> &alt) {
                out.push_back({{L, n, static_cast<int>(alt.size()) - 1}, pos, alt});
            });
        }
    }
    std::sort(out.begin(), out.end(), [](const SppConfiguration &a, const SppConfiguration &b) {
        if (a.geometry.n != b.geometry.n) {
            return a.geometry.n < b.geometry.n;
        }
        if (a.position != b.position) {
            return a.position < b.position;
        }
        return a.alternate_path < b.alternate_path;
    });
    return out;
}

double g_degeneracy(int L, int n, int m_prime) {
    require_geometry({L, n, m_prime});
    double g = L - n + 1;
    return m_prime == n ? g / 2.0 : g;
}

double sigma_analytic(int L, int N, double p, DensityRegime regime) {
    if (L < 1 || N < 2 || !(p >= 0 && p <= 1)) {
        throw std::invalid_argument("sigma_analytic: requires L >= 1, N >= 2, 0 <= p <= 1");
    }
    switch (regime) {
        case DensityRegime::kExact:
            if (L == 1) {
                return p;
            }
            if (L == 2) {
                return (1.0 - std::pow(1.0 - p * p, N - 2)) * (1.0 - p);
            }
            break;
        case DensityRegime::kLowP:
            if (N >= L + 1) {
                return std::pow(p, L) * falling_from_n_minus_2(N, L - 1);
            }
            break;
        case DensityRegime::kHighP:
            if (L == 3) {
                return std::pow(1.0 - p * p, N - 2) * (1.0 - p);
            }
            break;
        case DensityRegime::kCritical:
            break;
    }
    throw std::invalid_argument("sigma_analytic: no formula for L = " + std::to_string(L) + " in this regime");
}

double eta_analytic(SppGeometry geom, int N, double p, DensityRegime regime) {
    require_geometry(geom);
    if (N < 2 || !(p >= 0 && p <= 1)) {
        throw std::invalid_argument("eta_analytic: requires N >= 2 and 0 <= p <= 1");
    }
    double g = g_degeneracy(geom.L, geom.n, geom.m_prime);
    int edges = geom.L + geom.m_prime;
    switch (regime) {
        case DensityRegime::kLowP:
            if (N >= edges) {
                return g * std::pow(p, edges) * falling_from_n_minus_2(N, edges - 2);
            }
            break;
        case DensityRegime::kCritical:
            if (std::abs(p * N - 1.0) <= 1e-9) {
                return g / (static_cast<double>(N) * N);
            }
            break;
        case DensityRegime::kHighP:
            if (geom == SppGeometry{3, 2, 2}) {
                return std::pow(1.0 - p * p, N - 2) * (1.0 - p);
            }
            break;
        case DensityRegime::kExact:
            break;
    }
    throw std::invalid_argument("eta_analytic: no formula for this geometry in this regime");
}

std::vector<PairCatalog> spp_catalog(const Graph &g, int L_max) {
    std::vector<PairCatalog> out;
    int n_nodes = g.num_nodes();
    SppWorkspace ws(n_nodes);
    for (int u = 0; u < n_nodes; u++) {
        bfs(g, u, L_max, ws.outer);
        for (int v : ws.outer.order) {
            int L = ws.outer.dist[v];
            if (v <= u || L < 3) {
                continue;
            }
            ws.path_to(v);
            PairCatalog entry{u, v, L, std::vector<int>(L - 2, 0)};
            bool any = false;
            for (int pos = 0; pos + 2 <= L; pos++) {
                int reach = 2 * std::min(L - 1, L - pos) - 1;
                bfs_avoiding(g, ws.path[pos], reach, ws.marks, ws.inner);
                for (int n = 2; n <= L - 1 && pos + n <= L; n++) {
                    int d = ws.inner.dist[ws.path[pos + n]];
                    if (d > 2 * n - 1) {
                        continue;
                    }
                    int &best = entry.min_m_prime[n - 2];
                    if (best == 0 || d < best) {
                        best = d;
                        any = true;
                    }
                }
            }
            if (any) {
                out.push_back(std::move(entry));
            }
        }
    }
    ws.marks.clear();
    return out;
}

std::vector<uint64_t> count_spp_existence(const Graph &g, std::span<const SppGeometry> geoms) {
    for (const SppGeometry &geom : geoms) {
        require_geometry(geom);
    }
    std::vector<uint64_t> counts(geoms.size(), 0);
    int L_max = max_L_of(geoms);
    int n_nodes = g.num_nodes();
    SppWorkspace ws(n_nodes);
    for (int u = 0; u < n_nodes; u++) {
        bfs(g, u, L_max, ws.outer);
        for (int v : ws.outer.order) {
            int L = ws.outer.dist[v];
            if (v <= u) {
                continue;
            }
            bool path_ready = false;
            for (size_t k = 0; k < geoms.size(); k++) {
                const SppGeometry &geom = geoms[k];
                if (geom.L != L) {
                    continue;
                }
                if (!path_ready) {
                    ws.path_to(v);
                    path_ready = true;
                }
                for (int pos = 0; pos + geom.n <= L; pos++) {
                    bfs_avoiding(g, ws.path[pos], geom.m_prime, ws.marks, ws.inner);
                    if (ws.inner.dist[ws.path[pos + geom.n]] == geom.m_prime) {
                        counts[k]++;
                        break;
                    }
                }
            }
        }
    }
    ws.marks.clear();
    return counts;
}

std::vector<uint64_t> count_spp_configurations(const Graph &g, std::span<const SppGeometry> geoms) {
    for (const SppGeometry &geom : geoms) {
        require_geometry(geom);
    }
    std::vector<uint64_t> counts(geoms.size(), 0);
    int L_max = max_L_of(geoms);
    int n_nodes = g.num_nodes();
    SppWorkspace ws(n_nodes);
    for (int u = 0; u < n_nodes; u++) {
        bfs(g, u, L_max, ws.outer);
        for (int v : ws.outer.order) {
            int L = ws.outer.dist[v];
            if (v <= u) {
                continue;
            }
            bool path_ready = false;
            for (size_t k = 0; k < geoms.size(); k++) {
                const SppGeometry &geom = geoms[k];
                if (geom.L != L) {
                    continue;
                }
                if (!path_ready) {
                    ws.path_to(v);
                    path_ready = true;
                }
                for (int pos = 0; pos + geom.n <= L; pos++) {
                    ws.alternates(g, ws.path[pos], ws.path[pos + geom.n], geom.m_prime, geom.m_prime,
                                  [&](const std::vector<int> &) { counts[k]++; });
                }
            }
        }
    }
    ws.marks.clear();
    return counts;
}

std::vector<double> network_delta_concurrence(const Graph &g, std::span<const double> xs, int L_max) {
    if (L_max < 3) {
        throw std::invalid_argument("network_delta_concurrence: L_max must be >= 3");
    }
    std::vector<double> sums(xs.size(), 0.0);
    for (const PairCatalog &entry : spp_catalog(g, L_max)) {
        for (size_t k = 0; k < xs.size(); k++) {
            WernerState x(xs[k]);
            double best = 0;
            for (int n = 2; n <= entry.L - 1; n++) {
                int m_prime = entry.min_m_prime[n - 2];
                if (m_prime == 0) {
                    continue;
                }
                best = std::max(best, spp_delta_concurrence(x, entry.L, n, m_prime - n));
            }
            sums[k] += best;
        }
    }
    double pairs = 0.5 * g.num_nodes() * (g.num_nodes() - 1.0);
    for (double &s : sums) {
        s /= pairs;
    }
    return sums;
}

void write_edge_list(std::ostream &out, const Graph &g) {
    auto edges = g.edges();
    out << g.num_nodes() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) {
        out << u << ' ' << v << '\n';
    }
}

Graph read_edge_list(std::istream &in) {
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) {
        throw std::invalid_argument("read_edge_list: bad header");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long k = 0; k < m; k++) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) {
            throw std::invalid_argument("read_edge_list: truncated edge list");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("read_edge_list: endpoint out of range");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

}  // namespace wernet
