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

#ifndef WERNET_ER_GRAPH_H
#define WERNET_ER_GRAPH_H

#include <climits>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace wernet {

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted ascending.
class Graph {
   public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// out-of-range endpoints.
    Graph(int num_nodes, std::span<const std::pair<int, int>> edges);

    int num_nodes() const {
        return num_nodes_;
    }
    size_t num_edges() const {
        return adjacency_.size() / 2;
    }
    std::span<const int> neighbors(int v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    bool has_edge(int u, int v) const;
    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph &other) const = default;

   private:
    int num_nodes_ = 0;
    std::vector<size_t> offsets_{0};
    std::vector<int> adjacency_;
};

/// G(N, p): each of the N (N - 1) / 2 edges present independently. Draws
/// from `rng` by geometric skipping. Requires N >= 2 and 0 <= p <= 1.
Graph generate_er(int N, double p, std::mt19937_64 &rng);

struct ErGraphSample {
    Graph graph;
    uint64_t seed;
    uint64_t trial;
    double p;
};

inline constexpr int kUnreachable = INT_MAX;

class DistanceMatrix {
   public:
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kUnreachable) {
    }
    int size() const {
        return n_;
    }
    int operator()(int u, int v) const {
        return d_[static_cast<size_t>(u) * n_ + v];
    }
    int &at(int u, int v) {
        return d_[static_cast<size_t>(u) * n_ + v];
    }

   private:
    int n_;
    std::vector<int> d_;
};

/// Breadth-first all-pairs distances; kUnreachable between components.
DistanceMatrix shortest_path_lengths(const Graph &g);

/// Reusable BFS state. `dist[v]` is valid for the nodes in `order`;
/// everything else reads as kUnreachable.
struct BfsScratch {
    std::vector<int> dist;
    std::vector<int> parent;
    std::vector<int> order;

    explicit BfsScratch(int n) : dist(n, kUnreachable), parent(n, -1) {
    }
    void reset();
};

/// BFS from `source` up to `max_depth`. Parents are first discoverers with
/// neighbors scanned in ascending order.
void bfs(const Graph &g, int source, int max_depth, BfsScratch &scratch);

/// The canonical shortest path between u and v: BFS from min(u, v) with
/// first-discoverer parents, listed from min(u, v). Empty if disconnected.
std::vector<int> shortest_path(const Graph &g, int u, int v);

/// Shortest-path length L, purified subpath length n, alternate path length
/// m' = n + m.
struct SppGeometry {
    int L;
    int n;
    int m_prime;

    bool operator==(const SppGeometry &other) const = default;
    auto operator<=>(const SppGeometry &other) const = default;
};

struct SppConfiguration {
    SppGeometry geometry;
    /// Index along the shortest path where the subpath starts.
    int position;
    /// Node sequence from path[position] to path[position + n].
    std::vector<int> alternate_path;

    bool operator==(const SppConfiguration &other) const = default;
};

/// Geometry bounds for enumerate_spp. Subpath lengths run over
/// [min_n, min(max_n, L)], alternate lengths over [n, min(max_extra + n, 2n - 1)].
struct SppFilter {
    int min_n = 2;
    int max_n = INT_MAX;
    int max_extra = INT_MAX;
};

/// Every (position, simple alternate path) along the canonical shortest path
/// whose alternate avoids all shortest-path edges. Sorted by (n, position,
/// path).
std::vector<SppConfiguration> enumerate_spp(const Graph &g, int u, int v, const SppFilter &filter = {});

/// Configuration multiplicity: L - n + 1, halved when m' = n.
double g_degeneracy(int L, int n, int m_prime);

enum class DensityRegime { kExact, kLowP, kHighP, kCritical };

/// Density of node pairs at distance L. Throws std::invalid_argument for
/// combinations without a formula.
double sigma_analytic(int L, int N, double p, DensityRegime regime);

/// Density of node pairs admitting the SPP geometry. Throws
/// std::invalid_argument for combinations without a formula.
double eta_analytic(SppGeometry geom, int N, double p, DensityRegime regime);

/// For the canonical shortest path of one pair: the minimal alternate length
/// over positions for each subpath length n in [2, L - 1]. Entries are 0 when
/// no alternate of length <= 2n - 1 exists.
struct PairCatalog {
    int u;
    int v;
    int L;
    std::vector<int> min_m_prime;  // index n - 2
};

/// Catalogs every connected pair with 3 <= L <= L_max.
std::vector<PairCatalog> spp_catalog(const Graph &g, int L_max);

/// Existence counts: entry k is the number of pairs for which some position
/// has shortest alternate length exactly geoms[k].m_prime.
std::vector<uint64_t> count_spp_existence(const Graph &g, std::span<const SppGeometry> geoms);

/// Configuration counts: entry k is the number of (pair, position, alternate
/// path) triples with geometry geoms[k].
std::vector<uint64_t> count_spp_configurations(const Graph &g, std::span<const SppGeometry> geoms);

/// Mean over all node pairs of the best single-SPP gain with L <= L_max,
/// clamped at zero. One value per entry of xs.
std::vector<double> network_delta_concurrence(const Graph &g, std::span<const double> xs, int L_max);

/// Edge-list text: "N M" then M lines "u v".
void write_edge_list(std::ostream &out, const Graph &g);
/// Throws std::invalid_argument on malformed input.
Graph read_edge_list(std::istream &in);

}  // namespace wernet

#endif
