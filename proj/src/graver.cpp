#include "toric/graver.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace toric {

bool conformal_leq(const WalkVector& v, const WalkVector& u) {
    if (!v.host || !u.host || !(*v.host == *u.host))
        throw HostMismatch("conformal comparison across different hosts");
    for (size_t e = 0; e < u.coeffs.size(); ++e) {
        Coeff a = v.coeffs[e], b = u.coeffs[e];
        if (a > 0 && (b < a))
            return false;
        if (a < 0 && (b > a))
            return false;
    }
    return true;
}

namespace {

using Vec = std::vector<Coeff>;

bool conformal_leq_vec(const Vec& v, const Vec& u) {
    for (size_t e = 0; e < u.size(); ++e) {
        if (v[e] > 0 && u[e] < v[e])
            return false;
        if (v[e] < 0 && u[e] > v[e])
            return false;
    }
    return true;
}

Coeff pos_degree(const Vec& v) {
    Coeff d = 0;
    for (Coeff x : v)
        if (x > 0)
            d = checked_add(d, x);
    return d;
}

Vec normalize_sign(Vec v) {
    for (Coeff x : v) {
        if (x > 0)
            return v;
        if (x < 0) {
            for (auto& y : v)
                y = -y;
            return v;
        }
    }
    return v;
}

// canonical order: by degree, then lexicographic on coefficients
struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        Coeff da = pos_degree(a), db = pos_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    }
};

// For each vertex, the last canonical edge index containing it. Once the
// search has assigned that edge, the vertex balance must already be zero.
std::vector<int> last_edge_of_vertex(const Hypergraph& h) {
    std::vector<int> last(h.n, -1);
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edges[e])
            last[v] = e;
    return last;
}

struct WorkCounter {
    long long used = 0;
    long long cap;
    const char* what;
    void tick() {
        if (++used > cap)
            throw ResourceLimit(std::string(what) + ": work cap of " + std::to_string(cap) +
                                " exceeded after " + std::to_string(used - 1) + " steps");
    }
};

// Depth-first enumeration of kernel vectors within per-edge coefficient
// ranges, with vertex-completion pruning. Calls visit(v) on every nonzero
// kernel vector; visit returns false to stop the whole search.
template <typename Lo, typename Hi, typename Visit>
void search_kernel_box(const Hypergraph& h, Lo lo, Hi hi, WorkCounter& work, Visit visit) {
    const int m = h.edge_count();
    const auto last = last_edge_of_vertex(h);
    std::vector<Coeff> v(m, 0);
    std::vector<Coeff> balance(h.n, 0);
    bool stopped = false;

    auto rec = [&](auto&& self, int e) -> void {
        if (stopped)
            return;
        work.tick();
        if (e == m) {
            if (!std::all_of(v.begin(), v.end(), [](Coeff x) { return x == 0; }))
                if (!visit(v))
                    stopped = true;
            return;
        }
        for (Coeff c = lo(e); c <= hi(e); ++c) {
            v[e] = c;
            if (c != 0)
                for (int vert : h.edges[e])
                    balance[vert] += c;
            bool ok = true;
            for (int vert : h.edges[e])
                if (last[vert] == e && balance[vert] != 0) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, e + 1);
            if (c != 0)
                for (int vert : h.edges[e])
                    balance[vert] -= c;
            if (stopped)
                break;
        }
        v[e] = 0;
    };
    rec(rec, 0);
}

} // namespace

bool is_primitive(const WalkVector& u, long long max_work) {
    if (std::all_of(u.coeffs.begin(), u.coeffs.end(), [](Coeff x) { return x == 0; }))
        throw ZeroVector("primitivity is undefined for the zero vector");
    if (!in_kernel(u))
        throw NotInKernel("vector is not in the kernel of the incidence matrix");

    WorkCounter work{0, max_work, "is_primitive"};
    bool primitive = true;
    search_kernel_box(
        *u.host, [&](int e) { return std::min<Coeff>(u.coeffs[e], 0); },
        [&](int e) { return std::max<Coeff>(u.coeffs[e], 0); }, work,
        [&](const Vec& v) {
            if (v == u.coeffs)
                return true; // keep searching
            primitive = false;
            return false;
        });
    return primitive;
}

namespace {

// Conformal normal form: repeatedly subtract basis elements (with either
// sign) that are conformally below the vector. The remainder stays in the
// kernel and its 1-norm strictly decreases, so this terminates.
Vec normal_form(Vec s, const std::set<Vec, VecLess>& basis) {
    bool reduced = true;
    while (reduced && !std::all_of(s.begin(), s.end(), [](Coeff x) { return x == 0; })) {
        reduced = false;
        for (const auto& g : basis) {
            bool plus = conformal_leq_vec(g, s);
            bool minus = !plus && [&] {
                for (size_t e = 0; e < s.size(); ++e) {
                    if (-g[e] > 0 && s[e] < -g[e])
                        return false;
                    if (-g[e] < 0 && s[e] > -g[e])
                        return false;
                }
                return true;
            }();
            if (plus || minus) {
                for (size_t e = 0; e < s.size(); ++e)
                    s[e] = checked_sub(s[e], plus ? g[e] : -g[e]);
                reduced = true;
                break;
            }
        }
    }
    return s;
}

GraverBasis graver_completion(const HostPtr& host, const GraverConfig& cfg) {
    const auto a = incidence_matrix(*host);
    std::set<Vec, VecLess> basis; // sign-normalized half-set
    for (auto& b : integer_kernel_basis(a)) {
        Vec v = normalize_sign(std::move(b));
        if (!std::all_of(v.begin(), v.end(), [](Coeff x) { return x == 0; }))
            basis.insert(std::move(v));
    }

    WorkCounter work{0, cfg.max_work, "graver completion"};
    std::set<Vec, VecLess> pending;
    auto enqueue = [&](Vec s) {
        s = normalize_sign(std::move(s));
        if (std::all_of(s.begin(), s.end(), [](Coeff x) { return x == 0; }))
            return;
        if (pending.insert(std::move(s)).second)
            work.tick();
    };
    auto enqueue_sums = [&](const Vec& u, const Vec& v) {
        Vec sum(u.size()), diff(u.size());
        for (size_t e = 0; e < u.size(); ++e) {
            sum[e] = checked_add(u[e], v[e]);
            diff[e] = checked_sub(u[e], v[e]);
        }
        enqueue(std::move(sum));
        enqueue(std::move(diff));
    };

    for (auto it = basis.begin(); it != basis.end(); ++it)
        for (auto jt = it; jt != basis.end(); ++jt)
            enqueue_sums(*it, *jt);

    while (!pending.empty()) {
        Vec s = *pending.begin();
        pending.erase(pending.begin());
        Vec r = normal_form(std::move(s), basis);
        if (std::all_of(r.begin(), r.end(), [](Coeff x) { return x == 0; }))
            continue;
        r = normalize_sign(std::move(r));
        for (const auto& g : basis)
            enqueue_sums(r, g);
        enqueue_sums(r, r);
        basis.insert(std::move(r));
    }

    // Completion yields a superset of the Graver basis; strip anything a
    // distinct element still reduces.
    std::vector<Vec> all(basis.begin(), basis.end());
    std::vector<Vec> minimal;
    for (const auto& g : all) {
        bool dominated = false;
        for (const auto& h : all) {
            if (&h == &g || h == g)
                continue;
            Vec neg = h;
            for (auto& x : neg)
                x = -x;
            if (conformal_leq_vec(h, g) || conformal_leq_vec(neg, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            minimal.push_back(g);
    }

    GraverBasis result;
    result.host = host;
    result.method = GraverMethod::completion;
    for (auto& v : minimal)
        result.elements.push_back(WalkVector{host, std::move(v)});
    return result;
}

GraverBasis graver_oracle(const HostPtr& host, const GraverConfig& cfg) {
    if (!cfg.degree_bound)
        throw BoundRequired("bounded oracle needs a degree bound");
    const Coeff bound = *cfg.degree_bound;

    WorkCounter work{0, cfg.max_work, "graver oracle"};
    std::vector<Vec> kernel_vectors;
    {
        // Degree budgets both ways; sign normalization is enforced afterwards
        // by keeping one of v, -v.
        const Hypergraph& h = *host;
        const int m = h.edge_count();
        const auto last = last_edge_of_vertex(h);
        Vec v(m, 0);
        std::vector<Coeff> balance(h.n, 0);
        Coeff pos = 0, neg = 0;
        auto rec = [&](auto&& self, int e) -> void {
            work.tick();
            if (e == m) {
                if (!std::all_of(v.begin(), v.end(), [](Coeff x) { return x == 0; })) {
                    Vec nv = normalize_sign(v);
                    if (nv == v)
                        kernel_vectors.push_back(v);
                }
                return;
            }
            for (Coeff c = -bound; c <= bound; ++c) {
                if (c > 0 && pos + c > bound)
                    break;
                if (c < 0 && neg - c > bound)
                    continue;
                v[e] = c;
                pos += std::max<Coeff>(c, 0);
                neg += std::max<Coeff>(-c, 0);
                for (int vert : h.edges[e])
                    balance[vert] += c;
                bool ok = true;
                for (int vert : h.edges[e])
                    if (last[vert] == e && balance[vert] != 0) {
                        ok = false;
                        break;
                    }
                if (ok)
                    self(self, e + 1);
                for (int vert : h.edges[e])
                    balance[vert] -= c;
                pos -= std::max<Coeff>(c, 0);
                neg -= std::max<Coeff>(-c, 0);
            }
            v[e] = 0;
        };
        rec(rec, 0);
    }

    // A proper conformal subvector has strictly smaller degree, so within
    // the bound the minimal ones are exactly the Graver elements there.
    std::vector<Vec> minimal;
    for (const auto& u : kernel_vectors) {
        bool dominated = false;
        for (const auto& w : kernel_vectors) {
            if (w == u)
                continue;
            Vec neg = w;
            for (auto& x : neg)
                x = -x;
            if (conformal_leq_vec(w, u) || conformal_leq_vec(neg, u)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            minimal.push_back(u);
    }
    std::sort(minimal.begin(), minimal.end(), VecLess{});

    GraverBasis result;
    result.host = host;
    result.method = GraverMethod::bounded_oracle;
    result.bound = bound;
    for (auto& v : minimal)
        result.elements.push_back(WalkVector{host, std::move(v)});
    return result;
}

} // namespace

GraverBasis graver_basis(const HostPtr& host, const GraverConfig& cfg) {
    if (!host->edges.empty() && !host->uniform_degree())
        throw NotUniform("graver basis requires a uniform hypergraph");
    if (cfg.method == GraverMethod::bounded_oracle)
        return graver_oracle(host, cfg);
    return graver_completion(host, cfg);
}

std::vector<WalkVector> markov_moves(const HostPtr& host, const GraverConfig& cfg) {
    return graver_basis(host, cfg).elements;
}

std::vector<WalkVector> squarefree_subset(const std::vector<WalkVector>& moves) {
    std::vector<WalkVector> out;
    for (const auto& u : moves)
        if (std::all_of(u.coeffs.begin(), u.coeffs.end(),
                        [](Coeff x) { return x >= -1 && x <= 1; }))
            out.push_back(u);
    return out;
}

} // namespace toric
