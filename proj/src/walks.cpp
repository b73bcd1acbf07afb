#include "toric/walks.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

namespace {

void check_host_vector(const HostPtr& host, const std::vector<Coeff>& v, const char* what) {
    if (!host)
        throw Error(std::string(what) + ": missing host");
    if (static_cast<int>(v.size()) != host->edge_count())
        throw Error(std::string(what) + ": vector length does not match edge count");
}

// blue degree minus red degree at every vertex
std::vector<Coeff> vertex_imbalance(const Bicoloring& c) {
    check_host_vector(c.host, c.blue, "bicoloring");
    check_host_vector(c.host, c.red, "bicoloring");
    std::vector<Coeff> bal(c.host->n, 0);
    for (int e = 0; e < c.host->edge_count(); ++e) {
        Coeff d = checked_sub(c.blue[e], c.red[e]);
        if (d == 0)
            continue;
        for (int v : c.host->edges[e])
            bal[v] = checked_add(bal[v], d);
    }
    return bal;
}

} // namespace

Bicoloring Bicoloring::from_indices(HostPtr host, const std::vector<int>& blue_edges,
                                    const std::vector<int>& red_edges) {
    Bicoloring c;
    c.host = std::move(host);
    c.blue.assign(c.host->edge_count(), 0);
    c.red.assign(c.host->edge_count(), 0);
    for (int e : blue_edges) {
        if (e < 0 || e >= c.host->edge_count())
            throw IndexOutOfRange("blue edge index " + std::to_string(e) + " out of range");
        c.blue[e]++;
    }
    for (int e : red_edges) {
        if (e < 0 || e >= c.host->edge_count())
            throw IndexOutOfRange("red edge index " + std::to_string(e) + " out of range");
        c.red[e]++;
    }
    return c;
}

Coeff Bicoloring::blue_total() const {
    return std::accumulate(blue.begin(), blue.end(), Coeff{0}, checked_add);
}

Coeff Bicoloring::red_total() const {
    return std::accumulate(red.begin(), red.end(), Coeff{0}, checked_add);
}

bool is_balanced(const Bicoloring& c) {
    return is_zero(vertex_imbalance(c));
}

WalkVector sign_normalized(WalkVector u) {
    for (Coeff x : u.coeffs) {
        if (x > 0)
            return u;
        if (x < 0) {
            for (auto& y : u.coeffs)
                y = -y;
            return u;
        }
    }
    return u; // zero vector
}

WalkVector negated(const WalkVector& u) {
    WalkVector v = u;
    for (auto& x : v.coeffs)
        x = -x;
    return v;
}

Coeff walk_degree(const WalkVector& u) {
    Coeff d = 0;
    for (Coeff x : u.coeffs)
        if (x > 0)
            d = checked_add(d, x);
    return d;
}

bool in_kernel(const WalkVector& u) {
    check_host_vector(u.host, u.coeffs, "walk vector");
    return is_zero(apply_incidence(incidence_matrix(*u.host), u.coeffs));
}

WalkVector to_walk_vector(const Bicoloring& c) {
    if (!is_balanced(c))
        throw NotBalanced("coloring is not balanced");
    WalkVector u;
    u.host = c.host;
    u.coeffs.resize(c.host->edge_count());
    for (int e = 0; e < c.host->edge_count(); ++e)
        u.coeffs[e] = checked_sub(c.blue[e], c.red[e]);
    return sign_normalized(std::move(u));
}

Bicoloring to_bicoloring(const WalkVector& u) {
    check_host_vector(u.host, u.coeffs, "walk vector");
    Bicoloring c;
    c.host = u.host;
    c.blue.assign(u.coeffs.size(), 0);
    c.red.assign(u.coeffs.size(), 0);
    for (size_t e = 0; e < u.coeffs.size(); ++e) {
        if (u.coeffs[e] > 0)
            c.blue[e] = u.coeffs[e];
        else if (u.coeffs[e] < 0)
            c.red[e] = -u.coeffs[e];
    }
    return c;
}

Binomial make_binomial(HostPtr host, std::vector<Coeff> plus, std::vector<Coeff> minus) {
    check_host_vector(host, plus, "binomial");
    check_host_vector(host, minus, "binomial");
    for (size_t e = 0; e < plus.size(); ++e) {
        if (plus[e] < 0 || minus[e] < 0)
            throw Error("binomial exponents must be nonnegative");
        Coeff common = std::min(plus[e], minus[e]);
        plus[e] -= common;
        minus[e] -= common;
    }
    return Binomial{std::move(host), std::move(plus), std::move(minus)};
}

Binomial to_binomial(const WalkVector& u) {
    Bicoloring c = to_bicoloring(u);
    return Binomial{u.host, std::move(c.blue), std::move(c.red)};
}

WalkVector binomial_to_walk_vector(const Binomial& b) {
    WalkVector u;
    u.host = b.host;
    u.coeffs.resize(b.plus.size());
    for (size_t e = 0; e < b.plus.size(); ++e)
        u.coeffs[e] = checked_sub(b.plus[e], b.minus[e]);
    return u;
}

bool in_ideal(const Binomial& b) {
    check_host_vector(b.host, b.plus, "binomial");
    check_host_vector(b.host, b.minus, "binomial");
    WalkVector u = binomial_to_walk_vector(b);
    return in_kernel(u);
}

Bicoloring induced_coloring(const WalkSequence& s) {
    Bicoloring c;
    c.host = s.host;
    c.blue.assign(s.host->edge_count(), 0);
    c.red.assign(s.host->edge_count(), 0);
    for (const auto& st : s.steps) {
        if (st.edge < 0 || st.edge >= s.host->edge_count())
            throw IndexOutOfRange("walk step edge out of range");
        (st.color == EdgeColor::blue ? c.blue : c.red)[st.edge]++;
    }
    return c;
}

std::vector<WalkSequence> decompose(const Bicoloring& c) {
    if (!c.host->uniform_degree() && !c.host->edges.empty())
        throw NotUniform("decompose requires a uniform host");
    if (!is_balanced(c))
        throw NotBalanced("coloring is not balanced");

    const Hypergraph& h = *c.host;
    const int m = h.edge_count();
    std::vector<Coeff> blue_rem = c.blue, red_rem = c.red;

    // imbalance[v] = blue degree minus red degree of the walk built so far
    std::vector<Coeff> imbalance(h.n, 0);
    std::vector<bool> walk_covers(h.n, false);

    auto add_edge_to_walk = [&](int e, EdgeColor col) {
        for (int v : h.edges[e]) {
            imbalance[v] += (col == EdgeColor::blue ? 1 : -1);
            walk_covers[v] = true;
        }
        (col == EdgeColor::blue ? blue_rem : red_rem)[e]--;
    };

    // Eligible next edge: the lowest-index remaining edge of the required
    // color containing a vertex whose walk imbalance the new color repairs.
    // Such an edge always exists while the walk is unbalanced.
    auto pick = [&](EdgeColor col) -> int {
        const auto& pool = (col == EdgeColor::blue ? blue_rem : red_rem);
        for (int e = 0; e < m; ++e) {
            if (pool[e] <= 0)
                continue;
            for (int v : h.edges[e]) {
                Coeff need = (col == EdgeColor::blue ? -imbalance[v] : imbalance[v]);
                if (walk_covers[v] && need > 0)
                    return e;
            }
        }
        return -1;
    };

    std::vector<WalkSequence> walks;
    while (true) {
        int start = -1;
        for (int e = 0; e < m; ++e)
            if (blue_rem[e] > 0) {
                start = e;
                break;
            }
        if (start == -1)
            break; // balanced remainder with no blue edges is empty

        WalkSequence w;
        w.host = c.host;
        std::fill(imbalance.begin(), imbalance.end(), 0);
        std::fill(walk_covers.begin(), walk_covers.end(), false);

        add_edge_to_walk(start, EdgeColor::blue);
        w.steps.push_back({start, EdgeColor::blue});

        while (!is_zero(imbalance)) {
            EdgeColor col =
                (w.steps.size() % 2 == 1) ? EdgeColor::red : EdgeColor::blue;
            int e = pick(col);
            if (e == -1)
                throw Error("decompose: internal invariant violated"); // unreachable
            add_edge_to_walk(e, col);
            w.steps.push_back({e, col});
        }
        walks.push_back(std::move(w));
    }
    return walks;
}

bool sequence_check(const WalkSequence& s) {
    if (s.steps.size() % 2 != 0)
        return false;
    const Hypergraph& h = *s.host;
    std::vector<bool> seen(h.n, false);
    for (size_t i = 0; i < s.steps.size(); ++i) {
        const auto& st = s.steps[i];
        if (st.edge < 0 || st.edge >= h.edge_count())
            return false;
        EdgeColor expect = (i % 2 == 0) ? EdgeColor::blue : EdgeColor::red;
        if (st.color != expect)
            return false;
        if (i > 0) {
            bool meets = false;
            for (int v : h.edges[st.edge])
                if (seen[v]) {
                    meets = true;
                    break;
                }
            if (!meets)
                return false;
        }
        for (int v : h.edges[st.edge])
            seen[v] = true;
    }
    return s.steps.empty() || is_balanced(induced_coloring(s));
}

} // namespace toric
