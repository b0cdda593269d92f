#include "lzlef/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>

namespace lzlef {

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        return (std::size_t(m.ex) << 42) ^ (std::size_t(m.ey) << 21) ^ std::size_t(m.ez);
    }
};

// Down triangle v is adjacent to the up triangles x*v, y*v, z*v that
// survive in T.
std::vector<std::vector<int>> adjacency(const TriangularRegion& T) {
    std::unordered_map<Monomial, int, MonomialHash> upidx;
    for (int j = 0; j < int(T.up_triangles().size()); ++j) upidx.emplace(T.up_triangles()[j], j);
    std::vector<std::vector<int>> adj(T.down_triangles().size());
    for (int i = 0; i < int(T.down_triangles().size()); ++i) {
        const Monomial& v = T.down_triangles()[i];
        for (const Monomial& u : {Monomial{v.ex + 1, v.ey, v.ez}, Monomial{v.ex, v.ey + 1, v.ez},
                                  Monomial{v.ex, v.ey, v.ez + 1}}) {
            auto it = upidx.find(u);
            if (it != upidx.end()) adj[i].push_back(it->second);
        }
    }
    return adj;
}

// Hopcroft-Karp maximum matching on the down/up bipartite graph.
int max_matching(const std::vector<std::vector<int>>& adj, int n_up) {
    const int n_down = int(adj.size());
    const int inf = 1 << 30;
    std::vector<int> match_down(n_down, -1), match_up(n_up, -1), dist(n_down);
    int matching = 0;
    while (true) {
        std::queue<int> q;
        for (int v = 0; v < n_down; ++v) {
            if (match_down[v] < 0) {
                dist[v] = 0;
                q.push(v);
            } else {
                dist[v] = inf;
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v]) {
                int w = match_up[u];
                if (w < 0) {
                    reachable_free = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        if (!reachable_free) break;
        std::vector<bool> used_up(n_up, false);
        struct Dfs {
            const std::vector<std::vector<int>>& adj;
            std::vector<int>& match_down;
            std::vector<int>& match_up;
            std::vector<int>& dist;
            std::vector<bool>& used_up;
            int inf;
            bool go(int v) {
                for (int u : adj[v]) {
                    if (used_up[u]) continue;
                    int w = match_up[u];
                    if (w < 0 || (dist[w] == dist[v] + 1 && go(w))) {
                        used_up[u] = true;
                        match_down[v] = u;
                        match_up[u] = v;
                        return true;
                    }
                }
                dist[v] = inf;
                return false;
            }
        } dfs{adj, match_down, match_up, dist, used_up, inf};
        for (int v = 0; v < n_down; ++v)
            if (match_down[v] < 0 && dfs.go(v)) ++matching;
    }
    return matching;
}

}  // namespace

IntegerMatrix biadjacency(const TriangularRegion& T) {
    IntegerMatrix Z(int(T.down_triangles().size()), int(T.up_triangles().size()));
    const auto adj = adjacency(T);
    for (int i = 0; i < Z.rows(); ++i)
        for (int j : adj[i]) Z.at(i, j) = 1;
    return Z;
}

bool is_tileable_structural(const TriangularRegion& T) {
    if (!T.is_balanced())
        throw std::invalid_argument(
            "is_tileable_structural: region is unbalanced; use the matching oracle");
    for (int e = 0; e < T.d(); ++e)
        for (const Monomial& m : monomials_of_degree(e)) {
            long up = 0, down = 0;
            for (const Monomial& u : T.up_triangles())
                if (divides(m, u)) ++up;
            for (const Monomial& v : T.down_triangles())
                if (divides(m, v)) ++down;
            if (down > up) return false;
        }
    return true;
}

bool is_tileable_matching(const TriangularRegion& T) {
    if (T.empty()) return true;
    if (!T.is_balanced()) return false;
    const auto adj = adjacency(T);
    return max_matching(adj, int(T.up_triangles().size())) ==
           int(T.down_triangles().size());
}

std::vector<Tiling> enumerate_tilings(const TriangularRegion& T, std::optional<long> limit) {
    const long cap = limit.value_or(1000000L);
    std::vector<Tiling> out;
    if (!T.is_balanced()) return out;
    if (T.empty()) {
        if (cap > 0) out.push_back(Tiling{});
        return out;
    }
    const auto adj = adjacency(T);
    const int n = int(T.down_triangles().size());
    std::vector<int> choice(n, -1);
    std::vector<bool> used(T.up_triangles().size(), false);
    struct Rec {
        const TriangularRegion& T;
        const std::vector<std::vector<int>>& adj;
        std::vector<int>& choice;
        std::vector<bool>& used;
        std::vector<Tiling>& out;
        long cap;
        int n;
        void go(int row) {
            if (long(out.size()) >= cap) return;
            if (row == n) {
                Tiling t;
                for (int i = 0; i < n; ++i)
                    t.lozenges.emplace_back(T.down_triangles()[i],
                                            T.up_triangles()[choice[i]]);
                out.push_back(std::move(t));
                return;
            }
            for (int u : adj[row]) {
                if (used[u]) continue;
                used[u] = true;
                choice[row] = u;
                go(row + 1);
                used[u] = false;
                if (long(out.size()) >= cap) return;
            }
        }
    } rec{T, adj, choice, used, out, cap, n};
    rec.go(0);
    return out;
}

BigInt tiling_count(const TriangularRegion& T) {
    if (!T.is_balanced()) return 0;
    return permanent(biadjacency(T));
}

}  // namespace lzlef
