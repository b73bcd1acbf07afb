#include "toric/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toric {

bool Hypergraph::is_uniform(int d) const {
    for (const auto& e : edges)
        if (static_cast<int>(e.size()) != d)
            return false;
    return true;
}

std::optional<int> Hypergraph::uniform_degree() const {
    if (edges.empty())
        return std::nullopt;
    int d = static_cast<int>(edges.front().size());
    return is_uniform(d) ? std::optional<int>(d) : std::nullopt;
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges)
        for (int v : e)
            deg[v]++;
    return deg;
}

Hypergraph new_hypergraph(int n, std::vector<std::vector<int>> raw_edges) {
    if (n < 0)
        throw IndexOutOfRange("vertex count must be nonnegative");
    for (auto& e : raw_edges) {
        if (e.empty())
            throw EmptyEdge("edge with no vertices");
        for (int v : e)
            if (v < 0 || v >= n)
                throw IndexOutOfRange("vertex " + std::to_string(v) +
                                      " out of range (n=" + std::to_string(n) + ")");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end()); // edges are vertex sets
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    for (size_t i = 1; i < raw_edges.size(); ++i)
        if (raw_edges[i] == raw_edges[i - 1])
            throw DuplicateEdge("duplicate edge; use a multihypergraph for repeated edges");
    Hypergraph h;
    h.n = n;
    h.edges = std::move(raw_edges);
    return h;
}

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
    IncidenceMatrix a;
    a.rows = h.n;
    a.cols = h.edge_count();
    a.entry.assign(a.rows, std::vector<int>(a.cols, 0));
    for (int e = 0; e < a.cols; ++e)
        for (int v : h.edges[e])
            a.entry[v][e] = 1;
    return a;
}

IncidenceMatrix transpose(const IncidenceMatrix& a) {
    IncidenceMatrix t;
    t.rows = a.cols;
    t.cols = a.rows;
    t.entry.assign(t.rows, std::vector<int>(t.cols, 0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            t.entry[j][i] = a.entry[i][j];
    return t;
}

Hypergraph dual(const Hypergraph& h) {
    Hypergraph d;
    d.n = h.edge_count();
    d.edges.reserve(h.n);
    for (int v = 0; v < h.n; ++v) {
        std::vector<int> star;
        for (int e = 0; e < h.edge_count(); ++e)
            if (std::binary_search(h.edges[e].begin(), h.edges[e].end(), v))
                star.push_back(e);
        if (star.empty())
            throw EmptyEdge("vertex " + std::to_string(v) +
                            " is isolated; its dual edge would be empty");
        d.edges.push_back(std::move(star));
    }
    d.vertex_labels = h.edge_labels;
    d.edge_labels = h.vertex_labels;
    return d;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

bool is_connected(const Hypergraph& h) {
    if (h.n == 0)
        return true;
    UnionFind uf(h.n);
    std::vector<bool> covered(h.n, false);
    for (const auto& e : h.edges)
        for (size_t i = 0; i < e.size(); ++i) {
            covered[e[i]] = true;
            if (i > 0)
                uf.unite(e[0], e[i]);
        }
    int root = -1;
    for (int v = 0; v < h.n; ++v) {
        if (!covered[v])
            return false; // isolated vertex
        if (root == -1)
            root = uf.find(v);
        else if (uf.find(v) != root)
            return false;
    }
    return true;
}

CoreRemoval remove_core(const Hypergraph& h, const std::vector<int>& core) {
    std::vector<bool> in_core(h.n, false);
    for (int v : core) {
        if (v < 0 || v >= h.n)
            throw IndexOutOfRange("core vertex " + std::to_string(v) + " out of range");
        in_core[v] = true;
    }

    CoreRemoval r;
    for (int v = 0; v < h.n; ++v)
        if (in_core[v])
            r.removed.push_back(v);

    r.remnants.resize(h.edge_count());
    UnionFind uf(h.n);
    for (int e = 0; e < h.edge_count(); ++e) {
        auto& rem = r.remnants[e];
        for (int v : h.edges[e])
            if (!in_core[v])
                rem.push_back(v);
        if (rem.empty())
            r.empty_edges.push_back(e);
        else
            for (size_t i = 1; i < rem.size(); ++i)
                uf.unite(rem[0], rem[i]);
    }

    // Group nonempty remnants by their connected component, ordered by the
    // smallest vertex they contain.
    std::vector<int> comp_of_root(h.n, -1);
    for (int v = 0; v < h.n; ++v) {
        if (in_core[v])
            continue;
        bool used = false;
        for (int e = 0; e < h.edge_count(); ++e)
            if (!r.remnants[e].empty() &&
                std::binary_search(h.edges[e].begin(), h.edges[e].end(), v)) {
                used = true;
                break;
            }
        if (!used)
            continue;
        int root = uf.find(v);
        if (comp_of_root[root] == -1) {
            comp_of_root[root] = static_cast<int>(r.components.size());
            r.components.push_back({});
        }
        r.components[comp_of_root[root]].vertices.push_back(v);
    }
    for (int e = 0; e < h.edge_count(); ++e)
        if (!r.remnants[e].empty())
            r.components[comp_of_root[uf.find(r.remnants[e][0])]].edges.push_back(e);

    return r;
}

CoreRemoval remove_core(const Multihypergraph& mh, const std::vector<int>& core) {
    // Remnants are kept per edge slot, so multiplicities carry over unchanged.
    return remove_core(mh.base, core);
}

} // namespace toric
