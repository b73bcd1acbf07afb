#include "toric/bouquet.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace toric {

std::optional<std::pair<std::vector<int>, std::vector<int>>>
recognize_matching_pair(const Hypergraph& h) {
    if (h.edges.empty())
        return std::nullopt;
    auto deg = h.degrees();
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
        return std::nullopt;

    // Each vertex links its two incident edges; a proper 2-coloring of that
    // constraint graph is exactly a split into two perfect matchings.
    const int m = h.edge_count();
    std::vector<std::array<int, 2>> at(h.n, {-1, -1});
    for (int e = 0; e < m; ++e)
        for (int v : h.edges[e])
            at[v][at[v][0] == -1 ? 0 : 1] = e;

    std::vector<int> color(m, -1);
    for (int start = 0; start < m; ++start) {
        if (color[start] != -1)
            continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (int v : h.edges[e]) {
                int other = at[v][0] == e ? at[v][1] : at[v][0];
                if (color[other] == -1) {
                    color[other] = 1 - color[e];
                    stack.push_back(other);
                } else if (color[other] == color[e]) {
                    return std::nullopt; // odd conflict cycle
                }
            }
        }
    }

    std::pair<std::vector<int>, std::vector<int>> split;
    for (int e = 0; e < m; ++e)
        (color[e] == color[0] ? split.first : split.second).push_back(e);
    if (split.second.empty())
        return std::nullopt;
    return split;
}

bool matching_pair_primitive(const Hypergraph& h, const Multihypergraph& m) {
    if (!recognize_matching_pair(h))
        throw NotMatchingPair("edge set is not a pair of perfect matchings");
    if (!(m.base == h))
        throw NotMatchingPair("multihypergraph is not supported on the host");
    if (!is_connected(h))
        return false;
    return std::all_of(m.multiplicity.begin(), m.multiplicity.end(),
                       [](long long x) { return x == 1; });
}

std::optional<SunflowerDecomposition> recognize_bouquet(const HostPtr& host) {
    const Hypergraph& h = *host;
    if (h.edges.empty())
        return std::nullopt;
    auto deg = h.degrees();

    std::vector<bool> is_core(h.n, false);
    bool any_core = false;
    for (int v = 0; v < h.n; ++v) {
        if (deg[v] == 0)
            return std::nullopt; // uncovered vertex
        if (deg[v] > 2) {
            is_core[v] = true;
            any_core = true;
        }
    }
    if (!any_core)
        return std::nullopt;

    // Petals are the edges meeting a core vertex; the rest must form the
    // matching. Petals group into sunflowers by their core part.
    std::map<std::vector<int>, std::vector<int>> by_core;
    std::vector<int> matching;
    std::vector<std::vector<int>> free_part(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        std::vector<int> core_part, free;
        for (int v : h.edges[e])
            (is_core[v] ? core_part : free).push_back(v);
        if (core_part.empty()) {
            matching.push_back(e);
        } else {
            if (free.empty())
                return std::nullopt; // petal swallowed by the core
            by_core[core_part].push_back(e);
            free_part[e] = std::move(free);
        }
    }

    SunflowerDecomposition d;
    d.host = host;
    for (auto& [core, petals] : by_core) {
        if (petals.size() < 2)
            return std::nullopt;
        d.sunflowers.push_back({core, petals});
    }
    d.matching = matching;

    // Sunflower law: petals of one sunflower intersect exactly in the core;
    // petals of different sunflowers only within both cores.
    for (size_t i = 0; i < d.sunflowers.size(); ++i) {
        const auto& si = d.sunflowers[i];
        for (size_t a = 0; a < si.petals.size(); ++a)
            for (size_t b = a + 1; b < si.petals.size(); ++b) {
                std::vector<int> inter;
                std::set_intersection(h.edges[si.petals[a]].begin(), h.edges[si.petals[a]].end(),
                                      h.edges[si.petals[b]].begin(), h.edges[si.petals[b]].end(),
                                      std::back_inserter(inter));
                if (inter != si.core)
                    return std::nullopt;
            }
        for (size_t j = i + 1; j < d.sunflowers.size(); ++j) {
            const auto& sj = d.sunflowers[j];
            std::vector<int> cores_meet;
            std::set_intersection(si.core.begin(), si.core.end(), sj.core.begin(),
                                  sj.core.end(), std::back_inserter(cores_meet));
            for (int pa : si.petals)
                for (int pb : sj.petals) {
                    std::vector<int> inter;
                    std::set_intersection(h.edges[pa].begin(), h.edges[pa].end(),
                                          h.edges[pb].begin(), h.edges[pb].end(),
                                          std::back_inserter(inter));
                    if (!std::includes(cores_meet.begin(), cores_meet.end(), inter.begin(),
                                       inter.end()))
                        return std::nullopt;
                }
        }
    }

    // The matching must cover every non-core vertex exactly once, and every
    // non-core vertex must sit in exactly one petal.
    std::vector<int> petal_cover(h.n, 0), match_cover(h.n, 0);
    for (const auto& s : d.sunflowers)
        for (int e : s.petals)
            for (int v : free_part[e])
                petal_cover[v]++;
    for (int e : matching)
        for (int v : h.edges[e])
            match_cover[v]++;
    for (int v = 0; v < h.n; ++v) {
        if (is_core[v]) {
            if (match_cover[v] != 0)
                return std::nullopt;
        } else if (petal_cover[v] != 1 || match_cover[v] != 1) {
            return std::nullopt;
        }
    }

    for (int v = 0; v < h.n; ++v)
        if (is_core[v])
            d.core_vertices.push_back(v);
    d.core_membership.assign(h.n, {});
    for (size_t i = 0; i < d.sunflowers.size(); ++i)
        for (int v : d.sunflowers[i].core)
            d.core_membership[v].push_back(static_cast<int>(i));

    // Components of the core-removed hypergraph, with petal counts.
    CoreRemoval cr = remove_core(h, d.core_vertices);
    std::map<int, int> petal_sunflower;
    for (size_t i = 0; i < d.sunflowers.size(); ++i)
        for (int e : d.sunflowers[i].petals)
            petal_sunflower[e] = static_cast<int>(i);

    d.touching.assign(d.sunflowers.size(), {});
    for (size_t j = 0; j < cr.components.size(); ++j) {
        SunflowerDecomposition::Component comp;
        comp.vertices = cr.components[j].vertices;
        comp.petals_per_sunflower.assign(d.sunflowers.size(), 0);
        for (int e : cr.components[j].edges) {
            auto it = petal_sunflower.find(e);
            if (it == petal_sunflower.end()) {
                comp.matching_edges.push_back(e);
            } else {
                comp.petal_edges.push_back(e);
                comp.petal_count++;
                comp.petals_per_sunflower[it->second]++;
                auto& t = d.touching[it->second];
                if (t.empty() || t.back() != static_cast<int>(j))
                    t.push_back(static_cast<int>(j));
            }
        }
        d.components.push_back(std::move(comp));
    }

    for (const auto& comp : d.components)
        if (comp.petal_edges.empty())
            return std::nullopt; // stray matching edge off the sunflowers

    if (d.sunflowers.size() == 1) {
        d.kind = BouquetKind::single_sunflower;
    } else {
        bool disjoint = true;
        for (size_t i = 0; i < d.sunflowers.size() && disjoint; ++i)
            for (size_t j = i + 1; j < d.sunflowers.size() && disjoint; ++j) {
                std::vector<int> inter;
                std::set_intersection(d.sunflowers[i].core.begin(), d.sunflowers[i].core.end(),
                                      d.sunflowers[j].core.begin(), d.sunflowers[j].core.end(),
                                      std::back_inserter(inter));
                disjoint = inter.empty();
            }
        d.kind = disjoint ? BouquetKind::partitioned_core : BouquetKind::relaxed_core;
    }
    return d;
}

long long default_multiplicity_bound(const SunflowerDecomposition& d) {
    long long l = 1, mn = 0;
    for (const auto& c : d.components) {
        long long g = std::gcd(l, c.petal_count);
        if (g > 0 && l <= 64 * c.petal_count)
            l = l / g * c.petal_count;
        mn = (mn == 0) ? c.petal_count : std::min(mn, c.petal_count);
    }
    if (mn == 0)
        return 1;
    return std::clamp<long long>(l / mn, 1, 64);
}

namespace {

// Per-core-vertex balance: for a vertex v, summing over the sunflowers it
// belongs to, the J-side petal count must equal the K-side petal count.
// Petals are counted per sunflower within each component, which is what the
// degree of v actually receives (components may touch several sunflowers).
bool balance_holds(const SunflowerDecomposition& d, const std::vector<long long>& mult,
                   const std::vector<int>& side) {
    for (int v : d.core_vertices) {
        long long lhs = 0, rhs = 0;
        for (int i : d.core_membership[v]) {
            for (int j : d.touching[i]) {
                if (mult[j] == 0)
                    continue;
                long long contrib =
                    checked_mul(mult[j], d.components[j].petals_per_sunflower[i]);
                if (side[j] == 0)
                    lhs = checked_add(lhs, contrib);
                else
                    rhs = checked_add(rhs, contrib);
            }
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

Bicoloring certificate_witness(const SunflowerDecomposition& d,
                               const std::vector<long long>& mult,
                               const std::vector<int>& side) {
    Bicoloring w;
    w.host = d.host;
    w.blue.assign(d.host->edge_count(), 0);
    w.red.assign(d.host->edge_count(), 0);
    for (size_t j = 0; j < d.components.size(); ++j) {
        // J: matching red, petals blue. K: the opposite.
        auto& match_side = (side[j] == 0) ? w.red : w.blue;
        auto& petal_side = (side[j] == 0) ? w.blue : w.red;
        for (int e : d.components[j].matching_edges)
            match_side[e] = mult[j];
        for (int e : d.components[j].petal_edges)
            petal_side[e] = mult[j];
    }
    return w;
}

void validate_decomposition(const SunflowerDecomposition& d) {
    if (!d.host || d.sunflowers.empty() || d.components.empty())
        throw InvalidDecomposition("decomposition has no sunflowers or components");
    for (const auto& c : d.components)
        if (c.petal_count <= 0)
            throw InvalidDecomposition("component without petals");
}

// Enumerates (side, mult) solutions in canonical order and feeds them to
// the callback until it returns false.
template <typename Fn>
void for_each_certificate(const SunflowerDecomposition& d, long long bound, Fn fn) {
    const size_t k = d.components.size();
    if (k < 2 || bound < 1)
        return;
    // side[0] = J fixed: swapping sides is a global color flip.
    std::vector<int> side(k, 0);
    std::vector<long long> mult(k, 1);
    bool go = true;
    auto mults = [&](auto&& self, size_t j) -> void {
        if (!go)
            return;
        if (j == k) {
            if (balance_holds(d, mult, side))
                go = fn(side, mult);
            return;
        }
        for (long long m = 1; m <= bound && go; ++m) {
            mult[j] = m;
            self(self, j + 1);
        }
        mult[j] = 1;
    };
    for (unsigned mask = 1; mask < (1u << (k - 1)) && go; ++mask) {
        side[0] = 0;
        for (size_t j = 1; j < k; ++j)
            side[j] = (mask >> (k - 1 - j)) & 1u; // lexicographic over sides
        mults(mults, 0);
    }
}

bool primitive_check(const SunflowerDecomposition& d, const std::vector<int>& side,
                     const std::vector<long long>& mult) {
    // A subwalk keeps each component on its side with multiplicity between
    // 0 (dropped) and its certificate value; non-core vertices stay balanced
    // automatically. Any balanced assignment other than the zero and full
    // ones is a proper subwalk, covering both sub-partitions and the full
    // partition with smaller multiplicities.
    const size_t k = d.components.size();
    std::vector<long long> sub(k, 0);
    bool found = false;
    auto rec = [&](auto&& self, size_t j) -> void {
        if (found)
            return;
        if (j == k) {
            bool zero = std::all_of(sub.begin(), sub.end(), [](long long x) { return x == 0; });
            if (zero || sub == mult)
                return;
            if (balance_holds(d, sub, side))
                found = true;
            return;
        }
        for (long long m = 0; m <= mult[j] && !found; ++m) {
            sub[j] = m;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return !found;
}

} // namespace

std::optional<PartitionCertificate> bouquet_monomial(const SunflowerDecomposition& d,
                                                     long long bound) {
    validate_decomposition(d);
    if (bound < 1)
        throw InvalidDecomposition("multiplicity bound must be at least 1");
    std::optional<PartitionCertificate> out;
    for_each_certificate(d, bound,
                         [&](const std::vector<int>& side, const std::vector<long long>& mult) {
                             PartitionCertificate c;
                             c.side = side;
                             c.multiplicities = mult;
                             c.witness = certificate_witness(d, mult, side);
                             c.primitive = primitive_check(d, side, mult);
                             out = std::move(c);
                             return false;
                         });
    return out;
}

bool bouquet_primitive(const PartitionCertificate& c, const SunflowerDecomposition& d) {
    validate_decomposition(d);
    if (c.side.size() != d.components.size() ||
        c.multiplicities.size() != d.components.size())
        throw CertificateMismatch("certificate shape does not match the decomposition");
    for (size_t j = 0; j < c.multiplicities.size(); ++j)
        if (c.multiplicities[j] < 1 || (c.side[j] != 0 && c.side[j] != 1))
            throw CertificateMismatch("certificate entries out of range");
    if (!balance_holds(d, c.multiplicities, c.side))
        throw CertificateMismatch("certificate does not satisfy the balance equations");
    return primitive_check(d, c.side, c.multiplicities);
}

std::optional<PartitionCertificate> find_primitive_certificate(const SunflowerDecomposition& d,
                                                               long long bound) {
    validate_decomposition(d);
    std::optional<PartitionCertificate> out;
    for_each_certificate(d, bound,
                         [&](const std::vector<int>& side, const std::vector<long long>& mult) {
                             if (!primitive_check(d, side, mult))
                                 return true; // keep searching
                             PartitionCertificate c;
                             c.side = side;
                             c.multiplicities = mult;
                             c.witness = certificate_witness(d, mult, side);
                             c.primitive = true;
                             out = std::move(c);
                             return false;
                         });
    return out;
}

} // namespace toric
