#pragma once

#include <optional>
#include <vector>

#include "toric/walks.hpp"

namespace toric {

/// Total ±1 vertex coloring.
struct Coloring {
    std::vector<int> chi; // +1 / -1 per vertex
};

struct DiscrepancyResult {
    long long value = 0;
    Coloring witness;
};

struct DiscrepancyConfig {
    int max_vertices = 30;       // exact search cap
    long long max_work = 50'000'000;
};

/// Exact combinatorial discrepancy: min over colorings of the maximum
/// |sum of chi over an edge|, with a witness, by branch and bound.
/// Throws ResourceLimit past the configured caps.
DiscrepancyResult discrepancy(const Hypergraph& h, const DiscrepancyConfig& cfg = {});

/// Monomial-hypergraph test through the dual: h admits a balanced coloring
/// of all its edges iff the dual has discrepancy zero. On success the dual
/// witness is pulled back to an edge bicoloring of h (each edge once).
/// Throws EmptyEdge if h has isolated vertices.
std::optional<Bicoloring> is_monomial_via_dual(const HostPtr& host,
                                               const DiscrepancyConfig& cfg = {});

/// Primitivity of the simple (multiplicity-one, all edges) walk through the
/// dual: true iff no zero-discrepancy coloring of the dual stays balanced
/// on a nonempty proper subhypergraph. Equivalently, the balanced coloring
/// must be unique up to a global flip: two distinct balanced colorings
/// agree on a proper nonempty edge set, and that restriction is itself
/// balanced. Throws NotMonomial if no balanced coloring exists.
bool primitive_via_dual(const HostPtr& host, const DiscrepancyConfig& cfg = {});

} // namespace toric
