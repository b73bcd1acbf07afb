#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

/// A finite hypergraph on vertices 0..n-1. Each edge is a strictly
/// increasing list of vertex indices. Hypergraphs built through
/// new_hypergraph() additionally have their edge list sorted
/// lexicographically and contain no duplicate edges; dual() output keeps
/// its edges in source-vertex order instead so that the incidence matrix
/// is exactly the transpose (and may repeat an edge when two source
/// vertices have identical incidence).
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;
    std::vector<std::string> vertex_labels; // presentation only, may be empty
    std::vector<std::string> edge_labels;

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool is_uniform(int d) const;
    // Common edge size, if all edges agree. Empty edge list counts as uniform
    // with no defined degree.
    std::optional<int> uniform_degree() const;

    std::vector<int> degrees() const;

    // Structural equality; labels are metadata and do not participate.
    bool operator==(const Hypergraph& o) const { return n == o.n && edges == o.edges; }
};

using HostPtr = std::shared_ptr<const Hypergraph>;

inline HostPtr make_host(Hypergraph h) { return std::make_shared<const Hypergraph>(std::move(h)); }

/// Canonicalizing factory: sorts each edge, sorts the edge list
/// lexicographically, and validates.
/// Throws IndexOutOfRange, EmptyEdge, DuplicateEdge.
Hypergraph new_hypergraph(int n, std::vector<std::vector<int>> raw_edges);

struct Multihypergraph {
    Hypergraph base;
    std::vector<long long> multiplicity; // one per edge, >= 0
};

/// 0/1 matrix with one row per vertex and one column per edge.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> entry; // entry[v][e]
};

IncidenceMatrix incidence_matrix(const Hypergraph& h);
IncidenceMatrix transpose(const IncidenceMatrix& a);

/// Dual hypergraph: one vertex per edge of h, one edge per vertex of h,
/// listed in vertex order so that incidence_matrix(dual(h)) equals the
/// transpose of incidence_matrix(h) entrywise.
/// Throws EmptyEdge if h has an isolated vertex (its dual edge would be
/// empty); drop isolated vertices first if that is intended.
Hypergraph dual(const Hypergraph& h);

/// Connectivity of the primal graph (vertices adjacent when they share a
/// hyperedge). Isolated vertices make the result false.
bool is_connected(const Hypergraph& h);

/// Result of deleting a core vertex set C: the remnant e \ C of every edge,
/// and the connected components of the nonempty remnants.
struct CoreRemoval {
    std::vector<int> removed; // sorted C

    std::vector<std::vector<int>> remnants; // per original edge, possibly empty
    std::vector<int> empty_edges;           // edges whose remnant is empty

    struct Component {
        std::vector<int> vertices; // sorted, non-core
        std::vector<int> edges;    // sorted original edge indices
    };
    std::vector<Component> components; // ordered by smallest vertex
};

CoreRemoval remove_core(const Hypergraph& h, const std::vector<int>& core);
CoreRemoval remove_core(const Multihypergraph& mh, const std::vector<int>& core);

} // namespace toric
