#include "toric/discrepancy.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace toric {

DiscrepancyResult discrepancy(const Hypergraph& h, const DiscrepancyConfig& cfg) {
    if (h.edges.empty())
        throw Error("discrepancy: hypergraph has no edges");
    if (h.n > cfg.max_vertices)
        throw ResourceLimit("discrepancy: " + std::to_string(h.n) +
                            " vertices exceeds the exact-search cap of " +
                            std::to_string(cfg.max_vertices));

    const int m = h.edge_count();

    // High-degree vertices first: their assignment constrains most edges.
    std::vector<int> order(h.n);
    std::iota(order.begin(), order.end(), 0);
    auto deg = h.degrees();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });

    std::vector<std::vector<int>> edges_of(h.n);
    for (int e = 0; e < m; ++e)
        for (int v : h.edges[e])
            edges_of[v].push_back(e);

    std::vector<long long> sum(m, 0);
    std::vector<int> remaining(m);
    long long parity_floor = 0; // nothing beats the odd-edge parity bound
    for (int e = 0; e < m; ++e) {
        remaining[e] = static_cast<int>(h.edges[e].size());
        parity_floor = std::max<long long>(parity_floor, remaining[e] & 1);
    }

    std::vector<int> chi(h.n, 0);
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> best_chi;
    long long work = 0;

    auto rec = [&](auto&& self, int i) -> void {
        if (best == parity_floor)
            return; // already optimal
        if (++work > cfg.max_work)
            throw ResourceLimit("discrepancy: work cap exceeded");
        if (i == h.n) {
            long long val = 0;
            for (int e = 0; e < m; ++e)
                val = std::max(val, std::llabs(sum[e]));
            if (val < best) {
                best = val;
                best_chi = chi;
            }
            return;
        }
        // An edge can still move its sum by at most its undecided count.
        long long lb = 0;
        for (int e = 0; e < m; ++e) {
            long long edge_lb = std::max<long long>(std::llabs(sum[e]) - remaining[e],
                                                    (h.edges[e].size() & 1));
            lb = std::max(lb, edge_lb);
        }
        if (lb >= best)
            return;
        int v = order[i];
        for (int s : {+1, -1}) {
            if (i == 0 && s == -1)
                break; // global flip symmetry
            chi[v] = s;
            for (int e : edges_of[v]) {
                sum[e] += s;
                remaining[e]--;
            }
            self(self, i + 1);
            for (int e : edges_of[v]) {
                sum[e] -= s;
                remaining[e]++;
            }
            chi[v] = 0;
        }
    };
    rec(rec, 0);

    DiscrepancyResult r;
    r.value = best;
    r.witness.chi = best_chi;
    return r;
}

std::optional<Bicoloring> is_monomial_via_dual(const HostPtr& host,
                                               const DiscrepancyConfig& cfg) {
    const Hypergraph d = dual(*host); // throws EmptyEdge on isolated vertices
    DiscrepancyConfig dual_cfg = cfg;
    dual_cfg.max_vertices = std::max(cfg.max_vertices, d.n);
    DiscrepancyResult r = discrepancy(d, dual_cfg);
    if (r.value != 0)
        return std::nullopt;

    // chi lives on the dual vertices, i.e. on the edges of the host.
    Bicoloring c;
    c.host = host;
    c.blue.assign(host->edge_count(), 0);
    c.red.assign(host->edge_count(), 0);
    for (int e = 0; e < host->edge_count(); ++e)
        (r.witness.chi[e] > 0 ? c.blue : c.red)[e] = 1;
    return c;
}

bool primitive_via_dual(const HostPtr& host, const DiscrepancyConfig& cfg) {
    const Hypergraph& h = *host;
    const int m = h.edge_count();
    if (m == 0)
        throw NotMonomial("empty hypergraph supports no walk");
    if (m > 62)
        throw ResourceLimit("primitive_via_dual: too many edges for exhaustive search");
    dual(h); // isolated-vertex check, same contract as is_monomial_via_dual

    // Enumerate balanced all-edge colorings up to global flip (edge 0 blue).
    // Two distinct ones would agree on a proper nonempty edge subset whose
    // restriction is balanced, which is exactly a zero-discrepancy coloring
    // of a shrunken dual subhypergraph; uniqueness is therefore equivalent
    // to the subhypergraph condition.
    long long work = 0;
    int found = 0;
    for (unsigned long long mask = 0; mask < (1ull << (m - 1)); ++mask) {
        if (++work > cfg.max_work)
            throw ResourceLimit("primitive_via_dual: work cap exceeded");
        std::vector<long long> bal(h.n, 0);
        for (int e = 0; e < m; ++e) {
            int s = (e > 0 && (mask >> (e - 1)) & 1ull) ? -1 : +1;
            for (int v : h.edges[e])
                bal[v] += s;
        }
        if (std::all_of(bal.begin(), bal.end(), [](long long x) { return x == 0; })) {
            if (++found >= 2)
                return false;
        }
    }
    if (found == 0)
        throw NotMonomial("no balanced coloring of all edges exists");
    return true;
}

} // namespace toric
