#pragma once

#include <vector>

#include "toric/errors.hpp"
#include "toric/hypergraph.hpp"

namespace toric {

using Coeff = long long;

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

/// A * u for the 0/1 incidence matrix.
std::vector<Coeff> apply_incidence(const IncidenceMatrix& a, const std::vector<Coeff>& u);

bool is_zero(const std::vector<Coeff>& v);

/// Basis of the integer kernel { u : A u = 0 } as rows. Computed by row
/// reduction of [A^T | I] to Hermite form; the kernel of an integer matrix
/// is saturated, so the basis generates the full lattice.
std::vector<std::vector<Coeff>> integer_kernel_basis(const IncidenceMatrix& a);

} // namespace toric
