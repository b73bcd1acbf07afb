#include "toric/fiber.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

namespace toric {

std::vector<Coeff> margin(const FiberPoint& p) {
    return apply_incidence(incidence_matrix(*p.host), p.counts);
}

Fiber enumerate_fiber(const HostPtr& host, const std::vector<Coeff>& b, long long max_work) {
    const Hypergraph& h = *host;
    if (static_cast<int>(b.size()) != h.n)
        throw Error("margin length does not match vertex count");

    Fiber f;
    f.margin = b;

    auto deg = h.degrees();
    for (int v = 0; v < h.n; ++v)
        if (deg[v] == 0 && b[v] != 0)
            return f; // uncovered vertex with demand: empty fiber
    if (std::any_of(b.begin(), b.end(), [](Coeff x) { return x < 0; }))
        return f;

    const int m = h.edge_count();
    std::vector<int> last(h.n, -1);
    for (int e = 0; e < m; ++e)
        for (int v : h.edges[e])
            last[v] = e;

    std::vector<Coeff> residual = b;
    std::vector<Coeff> u(m, 0);
    long long work = 0;

    auto rec = [&](auto&& self, int e) -> void {
        if (++work > max_work)
            throw ResourceLimit("enumerate_fiber: work cap exceeded");
        if (e == m) {
            if (std::all_of(residual.begin(), residual.end(),
                            [](Coeff x) { return x == 0; }))
                f.points.push_back(FiberPoint{host, u});
            return;
        }
        Coeff cap = std::numeric_limits<Coeff>::max();
        for (int v : h.edges[e])
            cap = std::min(cap, residual[v]);
        for (Coeff c = 0; c <= cap; ++c) {
            u[e] = c;
            for (int v : h.edges[e])
                residual[v] -= c;
            bool ok = true;
            for (int v : h.edges[e])
                if (last[v] == e && residual[v] != 0) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, e + 1);
            for (int v : h.edges[e])
                residual[v] += c;
        }
        u[e] = 0;
    };
    rec(rec, 0);
    return f;
}

std::optional<FiberPoint> apply_move(const FiberPoint& p, const WalkVector& m, int direction) {
    if (!(*p.host == *m.host))
        throw HostMismatch("move and point live on different hosts");
    FiberPoint q = p;
    for (size_t e = 0; e < q.counts.size(); ++e) {
        q.counts[e] = checked_add(q.counts[e], direction * m.coeffs[e]);
        if (q.counts[e] < 0)
            return std::nullopt;
    }
    return q;
}

std::vector<FiberPoint> random_walk(const FiberPoint& start,
                                    const std::vector<WalkVector>& moves, long long steps,
                                    unsigned long long seed) {
    std::vector<FiberPoint> trace;
    trace.reserve(steps + 1);
    trace.push_back(start);
    std::mt19937_64 gen(seed);
    FiberPoint cur = start;
    for (long long i = 0; i < steps; ++i) {
        if (!moves.empty()) {
            unsigned long long draw = gen() % (2 * moves.size());
            const WalkVector& m = moves[draw / 2];
            int dir = (draw % 2 == 0) ? +1 : -1;
            if (auto next = apply_move(cur, m, dir))
                cur = std::move(*next);
        }
        trace.push_back(cur);
    }
    return trace;
}

bool fiber_connected(const Fiber& f, const std::vector<WalkVector>& moves) {
    const size_t n = f.points.size();
    if (n <= 1)
        return true;
    std::map<std::vector<Coeff>, size_t> index;
    for (size_t i = 0; i < n; ++i)
        index[f.points[i].counts] = i;

    std::vector<bool> seen(n, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t visited = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (const auto& m : moves)
            for (int dir : {+1, -1}) {
                auto q = apply_move(f.points[i], m, dir);
                if (!q)
                    continue;
                auto it = index.find(q->counts);
                if (it != index.end() && !seen[it->second]) {
                    seen[it->second] = true;
                    ++visited;
                    stack.push_back(it->second);
                }
            }
    }
    return visited == n;
}

} // namespace toric
