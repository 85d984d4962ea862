#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symres/groebner.hpp"
#include "symres/resolution.hpp"

namespace symres {

struct SWGuards {
    std::size_t max_minor_count = 100000;
    BuchbergerOptions groebner;
};

/* Grade of I_size(phi_i) with the conventions: size <= 0 gives the unit
 * ideal (grade +infinity), size beyond the matrix gives the zero ideal
 * (grade 0). Results are cached per (i, size): the same minors ideal shows
 * up for several conditions and Groebner runs dominate runtime. */
class GradeEngine {
public:
    GradeEngine(const FreeResolution& res, SWGuards guards = {});

    struct Value {
        bool infinite = false; // unit ideal
        long grade = 0;
    };

    Value minors_grade(int i, long size); // i in 1..pd

private:
    const FreeResolution& res_;
    SWGuards guards_;
    std::map<std::pair<int, long>, Value> cache_;
};

struct SWVerdict {
    std::string condition; // rendered, e.g. "(a) i=2: grade I_2(phi_2) >= 4"
    char kind = 'a';       // 'a' even-grade, 'b' odd-grade, 'c' characteristic
    int i = 0;
    int t = -1;          // only for kind 'b'
    long minor_size = 0; // only for kinds 'a','b'
    long required = 0;
    std::optional<long> computed; // empty means +infinity (unit ideal)
    bool pass = false;
};

struct SWReport {
    int j = 0;
    std::vector<SWVerdict> verdicts;
    bool overall = false;
};

/* the grade-threshold and invertibility criterion under which S_jF. is exact:
 * (a) grade I_{r_i}(phi_i) >= j*i for even i, (b) grade I_{r_i - t}(phi_i) >=
 * j(i-1)+1+t for odd i and t = 0..j-1, (c) j! invertible. */
SWReport check_swj(const FreeResolution& res, int j, GradeEngine& engine);
SWReport check_swj(const FreeResolution& res, int j, SWGuards guards = {});

struct Pd1Verdict {
    int j = 0;
    long required = 0;
    std::optional<long> computed;
    bool pass = false;
};

struct Pd1Report {
    std::vector<Pd1Verdict> verdicts;
    bool overall = false; // pass for every tested j implies S_jF. minimal for j = 2..beta_1
};

/* pd = 1 criterion: grade I_j(phi_1) >= beta_1 - j + 1 for j = 1..min(up_to, beta_1) */
Pd1Report pd1_grade_criterion(const FreeResolution& res, int up_to, GradeEngine& engine);
Pd1Report pd1_grade_criterion(const FreeResolution& res, int up_to, SWGuards guards = {});

struct JFeasibility {
    int p = 0;
    long dim_used = 0;
    int j = 0;
    long required_pd = 0; // expected pd of S_j under the criterion hypotheses
    bool feasible = false;
    std::string subcase; // which stated sub-case applies
};

/* necessary condition for S_jF. to be a minimal resolution over a ring of the
 * given dimension: expected pd <= dim. dim defaults to the variable count. */
JFeasibility j_feasible(const FreeResolution& res, int j, std::optional<long> dim_override = {});

/* largest feasible j (nullopt when every j is feasible) */
std::optional<long> max_feasible_j(const FreeResolution& res, std::optional<long> dim_override = {});

} // namespace symres
