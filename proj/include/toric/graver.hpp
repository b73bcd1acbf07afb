#pragma once

#include <optional>
#include <vector>

#include "toric/walks.hpp"

namespace toric {

enum class GraverMethod { completion, bounded_oracle };

struct GraverConfig {
    GraverMethod method = GraverMethod::completion;
    std::optional<Coeff> degree_bound; // required by the bounded oracle
    long long max_work = 1'000'000;    // queue insertions / search nodes
};

/// All primitive monomial walks of a uniform hypergraph, as sign-normalized
/// kernel vectors sorted by (degree, coefficients).
struct GraverBasis {
    HostPtr host;
    std::vector<WalkVector> elements;
    GraverMethod method = GraverMethod::completion;
    std::optional<Coeff> bound;
};

/// Conformal order: v <= u iff v agrees with u in sign and is componentwise
/// no larger in absolute value. Throws HostMismatch.
bool conformal_leq(const WalkVector& v, const WalkVector& u);

/// Exact primitivity test by exhaustive search of the sign-constrained box
/// below |u|: true iff no kernel vector other than 0 and u lives there.
/// Throws NotInKernel, ZeroVector, ResourceLimit.
bool is_primitive(const WalkVector& u, long long max_work = 1'000'000);

/// Graver basis computation. The completion method closes a lattice kernel
/// basis under conformal summation with conformal normal-form reduction;
/// the bounded oracle enumerates kernel vectors up to a degree bound and
/// keeps the conformal-minimal ones (an independent implementation used to
/// cross-check the completion).
/// Throws NotUniform, BoundRequired, ResourceLimit.
GraverBasis graver_basis(const HostPtr& host, const GraverConfig& cfg = {});

/// Markov moves connecting the fibers of the host: the Graver elements.
std::vector<WalkVector> markov_moves(const HostPtr& host, const GraverConfig& cfg = {});

/// Elements with every coefficient in {-1, 0, +1}.
std::vector<WalkVector> squarefree_subset(const std::vector<WalkVector>& moves);

} // namespace toric
