#include "symres/betti.hpp"

#include <stdexcept>

#include "symres/compositions.hpp"
#include "symres/errors.hpp"

namespace symres {

namespace {

void enumerate_rec(int pos, int p, int weight_left, int degree_left, std::vector<int>& cur,
                   std::vector<Composition>& out)
{
    if (pos == p) {
        if (static_cast<long>(p) * weight_left == degree_left) {
            cur[static_cast<std::size_t>(p)] = weight_left;
            Composition c;
            c.a = cur;
            for (int i = 0; i <= p; ++i) {
                c.j += cur[static_cast<std::size_t>(i)];
                c.t += i * cur[static_cast<std::size_t>(i)];
            }
            out.push_back(std::move(c));
        }
        return;
    }
    for (int ai = 0; ai <= weight_left; ++ai) {
        long deg_here = static_cast<long>(pos) * ai;
        if (deg_here > degree_left)
            break;
        long rest_max = static_cast<long>(p) * (weight_left - ai);
        if (degree_left - deg_here > rest_max)
            continue;
        cur[static_cast<std::size_t>(pos)] = ai;
        enumerate_rec(pos + 1, p, weight_left - ai, degree_left - static_cast<int>(deg_here), cur,
                      out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

std::vector<Composition> enumerate_compositions(int j, int t, int p)
{
    if (j < 0 || t < 0 || p < 1)
        throw InputError("enumerate_compositions: need j >= 0, t >= 0, p >= 1");
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<std::size_t>(p) + 1, 0);
    enumerate_rec(0, p, j, t, cur, out);
    return out;
}

mpz_class binomial(long n, long k)
{
    if (k < 0)
        return 0;
    if (k == 0)
        return 1;
    if (n < 0)
        throw std::logic_error("binomial with negative n and positive k");
    if (k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class divided_power_rank(long l, long j)
{
    if (l < 0 || j < 0)
        throw InputError("divided_power_rank: need l >= 0, j >= 0");
    if (l == 0)
        return j == 0 ? 1 : 0;
    return binomial(j + l - 1, l - 1);
}

mpz_class betti_formula(const std::vector<long>& beta, int j, int t)
{
    const int p = static_cast<int>(beta.size()) - 1;
    if (p < 1)
        throw InputError("betti_formula: need at least beta_0 and beta_1");
    mpz_class sum = 0;
    for (const Composition& comp : enumerate_compositions(j, t, p)) {
        mpz_class prod = 1;
        for (int i = 0; i <= p; ++i) {
            long b = beta[static_cast<std::size_t>(i)];
            long a = comp.a[static_cast<std::size_t>(i)];
            prod *= (i % 2 == 0) ? binomial(b + a - 1, a) : binomial(b, a);
            if (prod == 0)
                break;
        }
        sum += prod;
    }
    return sum;
}

mpz_class betti_pd1(long beta0, long beta1, int j, int t)
{
    if (t < 0 || t > std::min<long>(beta1, j))
        throw InputError("betti_pd1: t = " + std::to_string(t) + " out of range 0.." +
                         std::to_string(std::min<long>(beta1, j)));
    return binomial(beta0 + j - t - 1, j - t) * binomial(beta1, t);
}

mpz_class betti_pd2(long beta0, long beta1, long beta2, int j, int t)
{
    if (t < 0 || t > 2 * j)
        throw InputError("betti_pd2: t = " + std::to_string(t) + " out of range 0.." +
                         std::to_string(2 * j));
    auto kernel = [&](long r) -> mpz_class {
        return binomial(beta2 + r - 1, r) * binomial(beta1, t - 2 * r) *
               binomial(beta0 + j - t + r - 1, j - t + r);
    };
    mpz_class sum = 0;
    if (j >= t) {
        for (long r = 0; r <= t / 2; ++r)
            sum += kernel(r);
    } else {
        for (long r = t - j; r <= std::min<long>(j, t / 2); ++r)
            sum += kernel(r);
    }
    return sum;
}

long expected_pd(const std::vector<long>& beta, int j)
{
    const int p = static_cast<int>(beta.size()) - 1;
    if (p < 1 || j < 0)
        throw InputError("expected_pd: need p >= 1 and j >= 0");
    if (p % 2 == 0)
        return static_cast<long>(j) * p;
    return static_cast<long>(j) * (p - 1) + std::min<long>(beta.back(), j);
}

mpz_class upper_bound(const std::vector<long>& beta, int j)
{
    const int p = static_cast<int>(beta.size()) - 1;
    long total = 0;
    for (long b : beta)
        total += b;
    long slack = (p % 2 == 0) ? static_cast<long>(j) * (p + 2) / 2
                              : static_cast<long>(j) * (p + 1) / 2;
    return binomial(total + slack, j);
}

std::optional<mpz_class> lower_bound(const std::vector<long>& beta, int j, int t)
{
    const int p = static_cast<int>(beta.size()) - 1;
    if (p == 1)
        return binomial(beta[1], t);
    if (p == 2)
        return j >= t ? binomial(beta[1], t) : binomial(beta[1], 2 * j - t);
    return std::nullopt;
}

mpz_class rees_mu(long mu, int j)
{
    if (mu < 1 || j < 0)
        throw InputError("rees_mu: need mu >= 1 and j >= 0");
    return binomial(mu + j - 1, j);
}

BettiTable betti_table_formula(const std::vector<long>& beta, int j, const std::string& label)
{
    BettiTable tbl;
    tbl.label = label;
    tbl.j = j;
    tbl.pd = static_cast<int>(expected_pd(beta, j));
    tbl.source = "formula";
    for (int t = 0; t <= tbl.pd; ++t)
        tbl.values.push_back(betti_formula(beta, j, t));
    return tbl;
}

BoundReport bound_report(const std::vector<long>& beta, int j)
{
    return bound_report_for(betti_table_formula(beta, j), beta);
}

BoundReport bound_report_for(const BettiTable& table, const std::vector<long>& beta)
{
    BoundReport rep;
    mpz_class up = upper_bound(beta, table.j);
    for (int t = 0; t < static_cast<int>(table.values.size()); ++t) {
        BoundRow row;
        row.t = t;
        row.value = table.values[static_cast<std::size_t>(t)];
        row.upper = up;
        row.lower = lower_bound(beta, table.j, t);
        mpz_class lo = row.lower ? *row.lower : mpz_class(0);
        row.pass = (lo <= row.value) && (row.value <= row.upper);
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

BehReport beh_check(const BettiTable& table, long dim, long beta1)
{
    BehReport rep;
    rep.hypothesis_held = beta1 >= dim;
    rep.total = 0;
    for (int t = 0; t < static_cast<int>(table.values.size()); ++t) {
        BehRow row;
        row.t = t;
        row.value = table.values[static_cast<std::size_t>(t)];
        row.threshold = binomial(dim, t);
        row.pass = row.value >= row.threshold;
        rep.per_t_pass = rep.per_t_pass && row.pass;
        rep.total += row.value;
        rep.rows.push_back(std::move(row));
    }
    mpz_ui_pow_ui(rep.total_threshold.get_mpz_t(), 2,
                  static_cast<unsigned long>(std::max(0L, dim)));
    rep.total_pass = rep.total >= rep.total_threshold;
    return rep;
}

FiberReport fiber_bound(long beta0_S, long beta1_S, long beta1_T_k, const BettiTable& table)
{
    FiberReport rep;
    rep.composite_beta1 = mpz_class(beta0_S) * beta1_T_k + beta1_S;
    for (int t = 0; t < static_cast<int>(table.values.size()); ++t) {
        BehRow row;
        row.t = t;
        row.value = table.values[static_cast<std::size_t>(t)];
        row.threshold = binomial(beta1_T_k, t);
        row.pass = row.value >= row.threshold;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace symres
