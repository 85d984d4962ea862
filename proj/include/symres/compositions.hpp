#pragma once

#include <vector>

namespace symres {

/* Solution of sum a_i = j, sum i*a_i = t over indices 0..p. */
struct Composition {
    std::vector<int> a;
    int j = 0;
    int t = 0;

    bool operator==(const Composition& o) const { return a == o.a; }
};

/* All solutions in ascending lexicographic order on (a_0, ..., a_p);
 * empty when infeasible. Requires j, t >= 0 and p >= 1. */
std::vector<Composition> enumerate_compositions(int j, int t, int p);

} // namespace symres
