#include "golod/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "golod/errors.hpp"

namespace golod {

namespace {

// Enumerates all k-subsets of {1,...,m} in lexicographic order.
template <typename F>
void for_each_subset_of_size(int m, int k, F&& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    while (true) {
        fn(c);
        int i = k - 1;
        while (i >= 0 && c[i] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

std::vector<Simplex> maximal_faces(std::vector<Simplex> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Simplex> out;
    for (const auto& f : faces) {
        bool contained = false;
        for (const auto& g : faces) {
            if (f.size() < g.size() && simplex_subset(f, g)) {
                contained = true;
                break;
            }
        }
        if (!contained && !f.empty()) out.push_back(f);
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<Simplex> facets,
                                                 std::vector<std::string> names, bool relative) {
    if (m < 0) throw OutOfRangeError("vertex count must be non-negative");
    if (!names.empty() && static_cast<int>(names.size()) != m)
        throw OutOfRangeError("vertex name list does not match vertex count");
    for (auto& f : facets) {
        f = canonical_simplex(std::move(f));
        for (int v : f) {
            if (v < 1 || v > m)
                throw OutOfRangeError("vertex label " + std::to_string(v) + " outside [1," +
                                      std::to_string(m) + "]");
        }
    }
    SimplicialComplex K;
    K.m_ = m;
    K.facets_ = maximal_faces(std::move(facets));
    K.names_ = std::move(names);
    K.relative_ = relative;
    K.dim_ = -1;
    for (const auto& f : K.facets_) K.dim_ = std::max<int>(K.dim_, static_cast<int>(f.size()) - 1);

    if (!relative) {
        std::vector<bool> covered(m + 1, false);
        for (const auto& f : K.facets_)
            for (int v : f) covered[v] = true;
        for (int v = 1; v <= m; ++v)
            if (!covered[v]) throw GhostVertexError(v);
    }
    return K;
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    if (s.empty()) return true;
    for (const auto& f : facets_)
        if (simplex_subset(s, f)) return true;
    return false;
}

std::vector<Simplex> SimplicialComplex::faces(int d) const {
    if (d == -1) return {Simplex{}};
    if (d < -1 || d > dim_) return {};
    std::set<Simplex> out;
    for (const auto& f : facets_) {
        int n = static_cast<int>(f.size());
        if (n < d + 1) continue;
        // all (d+1)-subsets of f
        std::vector<int> idx(d + 1);
        for (int i = 0; i <= d; ++i) idx[i] = i;
        while (true) {
            Simplex s(d + 1);
            for (int i = 0; i <= d; ++i) s[i] = f[idx[i]];
            out.insert(std::move(s));
            int i = d;
            while (i >= 0 && idx[i] == n - (d + 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f;
    for (int d = 0; d <= dim_; ++d) f.push_back(static_cast<long>(faces(d).size()));
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    int sign = 1;
    for (long fd : f_vector()) {
        chi += sign * fd;
        sign = -sign;
    }
    return chi;
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<int>& I) const {
    if (I.empty()) throw EmptySubsetError();
    std::vector<int> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> newlabel(m_ + 1, 0);
    for (size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 1 || v > m_) throw OutOfRangeError("subset label " + std::to_string(v));
        newlabel[v] = static_cast<int>(i) + 1;
    }
    std::vector<Simplex> sub;
    for (const auto& f : facets_) {
        Simplex s;
        for (int v : f)
            if (newlabel[v]) s.push_back(newlabel[v]);
        if (!s.empty()) sub.push_back(std::move(s));
    }
    std::vector<std::string> nm;
    nm.reserve(sorted.size());
    for (int v : sorted) nm.push_back(vertex_name(v));
    return from_facets(static_cast<int>(sorted.size()), std::move(sub), std::move(nm), relative_);
}

SimplicialComplex SimplicialComplex::vertex_deletion(int v) const {
    if (v < 1 || v > m_) throw OutOfRangeError("vertex " + std::to_string(v));
    std::vector<int> I;
    for (int u = 1; u <= m_; ++u)
        if (u != v) I.push_back(u);
    return full_subcomplex(I);
}

SimplicialComplex SimplicialComplex::link(int u) const {
    if (u < 1 || u > m_) throw OutOfRangeError("vertex " + std::to_string(u));
    std::vector<int> newlabel(m_ + 1, 0);
    std::vector<std::string> nm;
    int next = 1;
    for (int v = 1; v <= m_; ++v) {
        if (v == u) continue;
        newlabel[v] = next++;
        nm.push_back(vertex_name(v));
    }
    std::vector<Simplex> lk;
    for (const auto& f : facets_) {
        if (!simplex_contains(f, u)) continue;
        Simplex s;
        for (int v : f)
            if (v != u) s.push_back(newlabel[v]);
        if (!s.empty()) lk.push_back(std::move(s));
    }
    return from_facets(m_ - 1, std::move(lk), std::move(nm), /*relative=*/true);
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
    if (d < 0) return from_facets(0, {});
    if (d >= dim_) return *this;
    std::vector<Simplex> fac = faces(d);
    for (const auto& f : facets_)
        if (static_cast<int>(f.size()) - 1 < d) fac.push_back(f);
    return from_facets(m_, std::move(fac), names_, relative_);
}

std::vector<Simplex> SimplicialComplex::minimal_nonfaces() const {
    std::vector<Simplex> out;
    int max_size = std::min(m_, dim_ + 2);
    if (relative_) max_size = std::max(max_size, 1);
    for (int size = 1; size <= max_size; ++size) {
        for_each_subset_of_size(m_, size, [&](const std::vector<int>& c) {
            if (has_face(c)) return;
            for (int i = 0; i < size; ++i) {
                Simplex sub = simplex_erase(c, c[i]);
                if (!has_face(sub)) return;
            }
            out.push_back(c);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::is_k_neighborly(int k) const {
    if (k < 0) throw OutOfRangeError("neighborliness index must be >= 0");
    bool ok = true;
    for_each_subset_of_size(m_, k + 1, [&](const std::vector<int>& c) {
        if (!ok) return;
        if (!has_face(c)) ok = false;
    });
    return ok;
}

std::vector<std::vector<int>> SimplicialComplex::adjacency() const {
    std::vector<std::set<int>> adj(m_ + 1);
    for (const auto& f : facets_)
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) {
                adj[f[i]].insert(f[j]);
                adj[f[j]].insert(f[i]);
            }
    std::vector<std::vector<int>> out(m_ + 1);
    for (int v = 1; v <= m_; ++v) out[v] = {adj[v].begin(), adj[v].end()};
    return out;
}

bool SimplicialComplex::has_edge(int u, int v) const {
    return u != v && has_face(canonical_simplex({u, v}));
}

std::string SimplicialComplex::vertex_name(int v) const {
    if (v >= 1 && v <= static_cast<int>(names_.size()) && !names_[v - 1].empty())
        return names_[v - 1];
    return std::to_string(v);
}

std::string SimplicialComplex::simplex_name(const Simplex& s) const {
    if (s.empty()) return "{}";
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += vertex_name(s[i]);
    }
    return out + "}";
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    int mk = K.vertex_count(), ml = L.vertex_count();
    const std::vector<Simplex> empty_only{Simplex{}};
    const auto& kf = K.facets().empty() ? empty_only : K.facets();
    const auto& lf = L.facets().empty() ? empty_only : L.facets();
    std::vector<Simplex> fac;
    fac.reserve(kf.size() * lf.size());
    for (const auto& f : kf) {
        for (const auto& g : lf) {
            Simplex s = f;
            for (int v : g) s.push_back(v + mk);
            fac.push_back(std::move(s));
        }
    }
    std::vector<std::string> names;
    if (!K.vertex_names().empty() || !L.vertex_names().empty()) {
        for (int v = 1; v <= mk; ++v) names.push_back(K.vertex_name(v));
        for (int v = 1; v <= ml; ++v) names.push_back(L.vertex_name(v));
    }
    return SimplicialComplex::from_facets(mk + ml, std::move(fac), std::move(names),
                                          K.relative() || L.relative());
}

SimplicialComplex wedge(const SimplicialComplex& K, const SimplicialComplex& L, int v, int w) {
    int mk = K.vertex_count(), ml = L.vertex_count();
    if (v < 1 || v > mk) throw OutOfRangeError("wedge vertex " + std::to_string(v));
    if (w < 1 || w > ml) throw OutOfRangeError("wedge vertex " + std::to_string(w));
    auto map_l = [&](int u) {
        if (u == w) return v;
        return mk + (u > w ? u - 1 : u);
    };
    std::vector<Simplex> fac = K.facets();
    for (const auto& g : L.facets()) {
        Simplex s;
        for (int u : g) s.push_back(map_l(u));
        fac.push_back(canonical_simplex(std::move(s)));
    }
    std::vector<std::string> names;
    if (!K.vertex_names().empty() || !L.vertex_names().empty()) {
        for (int u = 1; u <= mk; ++u) names.push_back(K.vertex_name(u));
        for (int u = 1; u <= ml; ++u)
            if (u != w) names.push_back(L.vertex_name(u));
    }
    return SimplicialComplex::from_facets(mk + ml - 1, std::move(fac), std::move(names));
}

namespace {

std::vector<int> lex_bfs_order(const std::vector<std::vector<int>>& adj, int n) {
    std::vector<std::vector<int>> label(n + 1);
    std::vector<bool> visited(n + 1, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v) {
            if (visited[v]) continue;
            if (best == -1 || label[v] > label[best]) best = v;
        }
        visited[best] = true;
        order.push_back(best);
        for (int u : adj[best])
            if (!visited[u]) label[u].push_back(n - step);
    }
    return order;
}

// Rotate/reflect so the cycle starts at its smallest vertex and proceeds
// toward the smaller of its two neighbors.
std::vector<int> canonical_cycle(std::vector<int> c) {
    size_t k = c.size();
    size_t start = std::min_element(c.begin(), c.end()) - c.begin();
    std::rotate(c.begin(), c.begin() + start, c.end());
    if (k >= 2 && c[k - 1] < c[1]) {
        std::reverse(c.begin() + 1, c.end());
    }
    return c;
}

}  // namespace

std::optional<std::vector<int>> shortest_hole(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size()) - 1;
    std::vector<std::vector<bool>> has(n + 1, std::vector<bool>(n + 1, false));
    for (int v = 1; v <= n; ++v)
        for (int u : adj[v]) has[v][u] = true;

    std::optional<std::vector<int>> best;
    // For every chordless path u - v - w, the shortest u..w path avoiding v
    // and the rest of N(v) closes up to a shortest hole through v.
    for (int v = 1; v <= n; ++v) {
        for (size_t a = 0; a < adj[v].size(); ++a) {
            for (size_t b = a + 1; b < adj[v].size(); ++b) {
                int u = adj[v][a], w = adj[v][b];
                if (has[u][w]) continue;
                std::vector<bool> blocked(n + 1, false);
                blocked[v] = true;
                for (int x : adj[v])
                    if (x != u && x != w) blocked[x] = true;
                // BFS from u to w in the unblocked subgraph.
                std::vector<int> parent(n + 1, 0);
                std::deque<int> queue{u};
                parent[u] = u;
                while (!queue.empty() && !parent[w]) {
                    int x = queue.front();
                    queue.pop_front();
                    for (int y : adj[x]) {
                        if (blocked[y] || parent[y]) continue;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
                if (!parent[w]) continue;
                std::vector<int> path;
                for (int x = w; x != u; x = parent[x]) path.push_back(x);
                path.push_back(u);
                // cycle: v, u, ..., w
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                if (!best || cycle.size() < best->size()) best = canonical_cycle(cycle);
            }
        }
    }
    return best;
}

ChordalityResult is_chordal(const SimplicialComplex& K) {
    int n = K.vertex_count();
    auto adj = K.adjacency();
    std::vector<std::vector<bool>> has(n + 1, std::vector<bool>(n + 1, false));
    for (int v = 1; v <= n; ++v)
        for (int u : adj[v]) has[v][u] = true;

    std::vector<int> order = lex_bfs_order(adj, n);
    std::vector<int> alpha(order.rbegin(), order.rend());
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[alpha[i]] = i;

    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        int v = alpha[i];
        int u = -1;
        for (int x : adj[v])
            if (pos[x] > i && (u == -1 || pos[x] < pos[u])) u = x;
        if (u == -1) continue;
        for (int x : adj[v]) {
            if (pos[x] > i && x != u && !has[u][x]) {
                ok = false;
                break;
            }
        }
    }
    if (ok) return {true, {}};
    auto hole = shortest_hole(adj);
    // A failed perfect-elimination check implies a hole exists.
    return {false, hole.value()};
}

bool is_induced_cycle(const SimplicialComplex& K, const std::vector<int>& cycle) {
    size_t k = cycle.size();
    if (k < 4) return false;
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != k) return false;
    for (int v : cycle)
        if (v < 1 || v > K.vertex_count()) return false;
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (K.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    }
    return true;
}

}  // namespace golod
