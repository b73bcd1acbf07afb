#pragma once

#include <optional>
#include <vector>

#include "toric/walks.hpp"

namespace toric {

/// Nonnegative integer edge multiset (an observed data point).
struct FiberPoint {
    HostPtr host;
    std::vector<Coeff> counts;

    bool operator==(const FiberPoint& o) const {
        return *host == *o.host && counts == o.counts;
    }
};

/// All points sharing one margin.
struct Fiber {
    std::vector<Coeff> margin;
    std::vector<FiberPoint> points; // ascending lexicographic
};

/// Vertex margin A * counts.
std::vector<Coeff> margin(const FiberPoint& p);

/// Every nonnegative integer solution of A u = b, by bounded backtracking
/// in canonical edge order. Throws ResourceLimit.
Fiber enumerate_fiber(const HostPtr& host, const std::vector<Coeff>& b,
                      long long max_work = 10'000'000);

/// counts + direction * move when it stays nonnegative, else nullopt.
/// Throws HostMismatch.
std::optional<FiberPoint> apply_move(const FiberPoint& p, const WalkVector& m, int direction);

/// Seeded Markov chain on a fiber: at each step one (move, direction) pair
/// is drawn uniformly and applied when feasible, otherwise the walk stays.
/// Randomness: std::mt19937_64 seeded with `seed`; each proposal is one raw
/// draw reduced mod 2*|moves| (index = draw/2, direction from draw%2), so
/// traces replay identically everywhere. Returns steps+1 points.
std::vector<FiberPoint> random_walk(const FiberPoint& start,
                                    const std::vector<WalkVector>& moves, long long steps,
                                    unsigned long long seed);

/// Connectivity of the fiber graph whose edges join points differing by
/// one move in either direction.
bool fiber_connected(const Fiber& f, const std::vector<WalkVector>& moves);

} // namespace toric
