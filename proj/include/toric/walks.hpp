#pragma once

#include <vector>

#include "toric/hypergraph.hpp"
#include "toric/intlinalg.hpp"

namespace toric {

enum class EdgeColor { blue, red };

/// Blue/red edge multisets over a host hypergraph, stored as per-edge
/// multiplicities. The same edge may carry both colors.
struct Bicoloring {
    HostPtr host;
    std::vector<Coeff> blue;
    std::vector<Coeff> red;

    static Bicoloring from_indices(HostPtr host, const std::vector<int>& blue_edges,
                                   const std::vector<int>& red_edges);

    Coeff blue_total() const;
    Coeff red_total() const;
    bool empty() const { return blue_total() == 0 && red_total() == 0; }
};

/// Signed edge-multiplicity vector: positive entries are blue copies,
/// negative entries red. Balanced colorings correspond to kernel vectors of
/// the incidence matrix.
struct WalkVector {
    HostPtr host;
    std::vector<Coeff> coeffs;

    bool operator==(const WalkVector& o) const {
        return *host == *o.host && coeffs == o.coeffs;
    }
};

/// Pure difference of two monomials in the edge variables, as exponent
/// vectors. Construction reduces the common part so the supports are
/// disjoint.
struct Binomial {
    HostPtr host;
    std::vector<Coeff> plus;
    std::vector<Coeff> minus;
};

Binomial make_binomial(HostPtr host, std::vector<Coeff> plus, std::vector<Coeff> minus);
Binomial to_binomial(const WalkVector& u);
WalkVector binomial_to_walk_vector(const Binomial& b);

struct WalkStep {
    int edge;
    EdgeColor color;
    bool operator==(const WalkStep& o) const { return edge == o.edge && color == o.color; }
};

/// Ordered edge sequence alternating blue/red, each edge meeting the union
/// of its predecessors, with a balanced induced coloring.
struct WalkSequence {
    HostPtr host;
    std::vector<WalkStep> steps;
};

/// Balancing condition: every covered vertex has equal blue and red degree.
bool is_balanced(const Bicoloring& c);

/// Blue minus red multiplicities, sign-normalized (first nonzero entry in
/// canonical edge order is positive). Throws NotBalanced.
WalkVector to_walk_vector(const Bicoloring& c);

/// Canonical coloring of a vector: positive coefficients blue, negative red.
Bicoloring to_bicoloring(const WalkVector& u);

/// Membership of the binomial in the toric ideal of the host: both
/// monomials have the same image under the monomial map.
bool in_ideal(const Binomial& b);

/// Splits a balanced coloring into edge-disjoint monomial walks whose
/// colored multiset union is exactly the input. Deterministic: at each step
/// the lowest-index eligible edge is taken. Host must be uniform.
/// Throws NotBalanced, NotUniform.
std::vector<WalkSequence> decompose(const Bicoloring& c);

/// Checks the monomial-walk conditions for an explicit sequence: even
/// length, blue/red alternation by position, prefix intersection, and a
/// balanced induced coloring.
bool sequence_check(const WalkSequence& s);

Bicoloring induced_coloring(const WalkSequence& s);

WalkVector sign_normalized(WalkVector u);
WalkVector negated(const WalkVector& u);

/// Sum of the positive coefficients (number of blue edge slots).
Coeff walk_degree(const WalkVector& u);

bool in_kernel(const WalkVector& u);

} // namespace toric
