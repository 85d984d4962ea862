#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symres {

/* binomial(n, k): 0 for k < 0 or k > n, 1 for k = 0. Total on all integer
 * inputs so composition sums need no special cases. */
mpz_class binomial(long n, long k);

/* rank of the degree-j divided power of a free module of rank l */
mpz_class divided_power_rank(long l, long j);

/* Betti numbers of the j-th symmetric power from those of the module:
 * sum over compositions (a_0..a_p) with sum a_i = j, sum i*a_i = t of
 * products with divided-style factors at even homological positions and
 * plain binomials at odd ones. */
mpz_class betti_formula(const std::vector<long>& beta, int j, int t);

/* pd = 1 closed form C(b0+j-t-1, j-t) * C(b1, t); requires 0 <= t <= min(b1, j) */
mpz_class betti_pd1(long beta0, long beta1, int j, int t);

/* pd = 2 closed form, case split on j >= t vs j < t; requires 0 <= t <= 2j */
mpz_class betti_pd2(long beta0, long beta1, long beta2, int j, int t);

/* length of the symmetric-power complex: j*p for p even,
 * j(p-1) + min(beta_p, j) for p odd */
long expected_pd(const std::vector<long>& beta, int j);

/* single t-independent upper bound: C(sum beta_i + j(p+2)/2, j) for p even,
 * C(sum beta_i + j(p+1)/2, j) for p odd (the p = 1 form is sum beta_i + j) */
mpz_class upper_bound(const std::vector<long>& beta, int j);

/* binomial lower bounds, only stated for p = 1 and p = 2 */
std::optional<mpz_class> lower_bound(const std::vector<long>& beta, int j, int t);

/* minimal generator count of the j-th Rees component of a linear-type module */
mpz_class rees_mu(long mu, int j);

struct BettiTable {
    std::string label;  // symmetric-power | rees-component | ideal-power
    int j = 0;
    std::vector<mpz_class> values; // t = 0..pd
    int pd = 0;
    std::string source; // formula | complex-ranks
};

/* table of betti_formula values for t = 0..expected_pd */
BettiTable betti_table_formula(const std::vector<long>& beta, int j,
                               const std::string& label = "symmetric-power");

struct BoundRow {
    int t = 0;
    std::optional<mpz_class> lower;
    mpz_class value;
    mpz_class upper;
    bool pass = false;
};

struct BoundReport {
    std::vector<BoundRow> rows;
    bool all_pass = true;
};

BoundReport bound_report(const std::vector<long>& beta, int j);
BoundReport bound_report_for(const BettiTable& table, const std::vector<long>& beta);

struct BehRow {
    int t = 0;
    mpz_class value;
    mpz_class threshold; // C(d, t)
    bool pass = false;
};

/* per-t comparison beta_t >= C(d,t) plus the total-rank comparison
 * sum beta_t >= 2^d; the guarantee needs beta1 >= d, reported separately */
struct BehReport {
    bool hypothesis_held = false; // beta1 >= d
    std::vector<BehRow> rows;
    bool per_t_pass = true;
    mpz_class total;
    mpz_class total_threshold; // 2^d
    bool total_pass = false;
};

BehReport beh_check(const BettiTable& table, long dim, long beta1);

/* composite first Betti number over a fiber product, by the displayed
 * identity beta_1 = beta0_S * beta1_T_k + beta1_S, and the per-t bound
 * beta_t >= C(beta1_T_k, t) for the supplied table */
struct FiberReport {
    mpz_class composite_beta1;
    std::vector<BehRow> rows;
    bool all_pass = true;
};

FiberReport fiber_bound(long beta0_S, long beta1_S, long beta1_T_k, const BettiTable& table);

} // namespace symres
