#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symres/matrix.hpp"

namespace symres {

/* Externally computed Betti vectors shipped with a fixture as reference
 * data only. */
struct ReferenceTable {
    std::string label;
    int j = 0;
    std::vector<long> values;
};

/* A finite free resolution F.: 0 -> F_p -> ... -> F_0, given by the matrices
 * phi_1..phi_p where phi_i : F_i -> F_{i-1} has beta_{i-1} rows and beta_i
 * columns (column c is the image of the c-th basis vector of F_i). */
struct FreeResolution {
    RingPtr ring;
    std::vector<PolyMatrix> maps; // phi_1 .. phi_p
    std::vector<long> betti;      // beta_0 .. beta_p, derived from shapes
    bool minimal_claimed = false;
    bool minimal_verified = false; // every entry of every map has zero constant term
    std::string description;
    std::vector<ReferenceTable> reference_tables;

    int pd() const { return static_cast<int>(maps.size()); }

    /* construct from maps; checks shape-compatibility, optionally the complex
     * condition phi_i . phi_{i+1} = 0 and the claimed minimality */
    static FreeResolution create(RingPtr ring, std::vector<PolyMatrix> maps, bool minimal_claimed,
                                 bool check_complex = true);
};

/* Alternating-sum expected ranks r_i = sum_{n=i}^p (-1)^{n-i} beta_n for
 * i = 1..p, plus r_0 (the generic rank of the presented module). */
struct DefectRanks {
    std::vector<long> r; // r[i-1] = r_i
    long r0 = 0;

    long at(int i) const { return r.at(static_cast<std::size_t>(i) - 1); }
};

DefectRanks defect_ranks(const FreeResolution& res);

/* Resolution file: JSON with a ring block, a minimality claim and the maps
 * phi_1, phi_2, ... in order; entries use the polynomial grammar. */
FreeResolution load_resolution(const std::string& path);
FreeResolution load_resolution_stream(std::istream& in, const std::string& origin = "<stream>");
std::string save_resolution(const FreeResolution& res);

} // namespace symres
