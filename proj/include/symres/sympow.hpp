#pragma once

#include <string>
#include <vector>

#include "symres/betti.hpp"
#include "symres/compositions.hpp"
#include "symres/resolution.hpp"

namespace symres {

/* Basis of the degree-a divided power of a rank-l free module: exponent
 * vectors of length l summing to a, in descending lexicographic order. */
std::vector<std::vector<int>> divided_basis(int rank, int degree);

/* Basis of the degree-a exterior power: strictly increasing index tuples,
 * in ascending lexicographic order. */
std::vector<std::vector<int>> exterior_basis(int rank, int degree);

struct Block {
    Composition comp;
    long rank = 0;                 // product of factor ranks; 0 when an exterior factor overflows
    std::vector<long> factor_ranks;
    long offset = 0;               // first basis index of this block inside its component
};

struct ComponentSpec {
    int t = 0;
    std::vector<Block> blocks; // one per composition, composition order
    long total_rank = 0;

    const Block* find(const std::vector<int>& comp) const;
    const Block& block_of_index(long index) const; // basis index -> owning block
};

/* Mixed divided/exterior component of S_jF. in homological degree t:
 * one block per composition, factor rank C(beta_i + a_i - 1, a_i) at even i
 * and C(beta_i, a_i) at odd i. j = 1 reproduces F. itself. */
ComponentSpec component_spec(const FreeResolution& res, int j, int t);

/* complex length: j*p for p even, j(p-1) + min(beta_p, j) for p odd */
long expected_length(const FreeResolution& res, int j);

/* Matrix of D_{a_src}F (x) Wedge^{a_dst}G -> D_{a_src-1}F (x) Wedge^{a_dst+1}G
 * induced by phi : F -> G: lower one divided exponent, wedge the image into
 * the exterior factor with insertion signs. Basis order: divided factor
 * outer, exterior factor inner. */
PolyMatrix build_A_map(const PolyMatrix& phi, int a_src, int a_dst);

/* Matrix of Wedge^{a_src}F (x) D_{a_dst}G -> Wedge^{a_src-1}F (x) D_{a_dst+1}G:
 * delete the l-th wedge factor with sign (-1)^{l+1} and multiply the image
 * into the divided factor (raising an exponent e contributes e+1). */
PolyMatrix build_B_map(const PolyMatrix& phi, int a_src, int a_dst);

struct SymPowerComplex {
    RingPtr ring;
    int j = 0;
    std::vector<ComponentSpec> components; // t = 0..length
    std::vector<PolyMatrix> differentials; // d_t at index t-1
    bool char_forced = false;              // assembled past the characteristic gate

    long length() const { return static_cast<long>(components.size()) - 1; }
    std::vector<long> component_ranks() const;
};

struct AssembleOptions {
    bool force_characteristic = false;
    long rank_cap = 50000; // bound on the total rank of all components
};

/* Build S_jF. with its block differentials. Requires characteristic 0 or
 * > j*p (so every integer in 2..jp is invertible) unless forced. */
SymPowerComplex assemble_complex(const FreeResolution& res, int j, const AssembleOptions& opts = {});

struct Violation {
    int t = 0; // d_t (minimality) or d_t . d_{t+1} (complex check)
    long row = 0;
    long col = 0;
    std::string value;
    std::string provenance;
};

struct VerifyReport {
    bool pass = true;
    std::vector<Violation> violations;
};

/* exact products d_t . d_{t+1}; failures are reported, not thrown */
VerifyReport verify_dd_zero(const SymPowerComplex& c);

/* every differential entry must lie in (x_1..x_n) */
VerifyReport verify_minimal(const SymPowerComplex& c);

/* export format: per-t block metadata plus the differential matrices in the
 * resolution file's matrix layout; field order is stable for diffing */
std::string save_complex(const SymPowerComplex& c);

/* Betti table read off the assembled component ranks (source: complex-ranks) */
BettiTable betti_table_ranks(const SymPowerComplex& c,
                             const std::string& label = "symmetric-power");

} // namespace symres
