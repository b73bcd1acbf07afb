#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/walks.hpp"

namespace toric {

/// One sunflower: a core vertex set and the petal edges that pairwise
/// intersect exactly in it.
struct Sunflower {
    std::vector<int> core;   // sorted vertices
    std::vector<int> petals; // sorted edge indices
};

enum class BouquetKind { single_sunflower, partitioned_core, relaxed_core };

/// A matched-petal (relaxed-core) sunflower structure: sunflowers meeting
/// only at their cores plus a perfect matching on the non-core vertices,
/// together with the components of the core-removed hypergraph and the
/// petal counts the balance equations need.
struct SunflowerDecomposition {
    HostPtr host;
    BouquetKind kind = BouquetKind::single_sunflower;

    std::vector<Sunflower> sunflowers;
    std::vector<int> matching; // sorted edge indices

    struct Component {
        std::vector<int> vertices;       // non-core vertices
        std::vector<int> petal_edges;    // petals whose remnant lies here
        std::vector<int> matching_edges; // matching edges inside
        long long petal_count = 0;       // |G_j|, with multiplicity
        std::vector<long long> petals_per_sunflower; // |G_j ∩ S_i| per sunflower
    };
    std::vector<Component> components;

    // touching[i] = indices j of components containing a vertex of sunflower i
    std::vector<std::vector<int>> touching;
    // core_membership[v] = sunflower indices whose core contains vertex v
    std::vector<std::vector<int>> core_membership; // indexed by vertex
    std::vector<int> core_vertices;                // sorted union of cores
};

/// A partition of the components into two color sides with positive
/// multiplicities, the primitivity verdict and the witness coloring.
struct PartitionCertificate {
    std::vector<int> side;                 // per component: 0 = J, 1 = K
    std::vector<long long> multiplicities; // per component, >= 1
    bool primitive = false;
    Bicoloring witness;
};

/// If the edge set splits into two edge-disjoint perfect matchings, returns
/// the split (the class containing edge 0 first); otherwise nullopt.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
recognize_matching_pair(const Hypergraph& h);

/// Primitivity for a pair-of-matchings support: the host must be connected
/// and the multihypergraph free of repeated edges. Throws NotMatchingPair.
bool matching_pair_primitive(const Hypergraph& h, const Multihypergraph& m);

/// Template recognition for matched-petal sunflower bouquets. Conservative:
/// returns nullopt on anything that does not match the template exactly.
std::optional<SunflowerDecomposition> recognize_bouquet(const HostPtr& host);

/// Default cap for the multiplicity search: lcm of the petal counts over
/// the smallest count, clamped to [1, 64].
long long default_multiplicity_bound(const SunflowerDecomposition& d);

/// Searches bipartitions and multiplicities (1..bound) for a solution of
/// the per-core-vertex balance equations; the first solution in canonical
/// order is returned with its witness coloring. Throws InvalidDecomposition.
std::optional<PartitionCertificate> bouquet_monomial(const SunflowerDecomposition& d,
                                                     long long bound);

/// Checks that no sub-assignment of multiplicities 0..m (other than 0 and m
/// itself) satisfies the balance equations, i.e. the certificate walk has
/// no proper subwalk. Throws CertificateMismatch.
bool bouquet_primitive(const PartitionCertificate& c, const SunflowerDecomposition& d);

/// First certificate in canonical order that is primitive, if any.
std::optional<PartitionCertificate> find_primitive_certificate(const SunflowerDecomposition& d,
                                                               long long bound);

} // namespace toric
