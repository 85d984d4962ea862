#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "symres/betti.hpp"
#include "symres/poly.hpp"
#include "symres/resolution.hpp"
#include "symres/sympow.hpp"

namespace testutil {

using namespace symres;

#ifndef SYMRES_FIXTURES
#define SYMRES_FIXTURES "fixtures"
#endif

inline std::string fixture(const std::string& name)
{
    return std::string(SYMRES_FIXTURES) + "/" + name;
}

inline FreeResolution load_pd1()
{
    return load_resolution(fixture("pd1_monomial_3gens.json"));
}
inline FreeResolution load_pd2_4gens()
{
    return load_resolution(fixture("pd2_squarefree_4gens.json"));
}
inline FreeResolution load_pd2_6gens()
{
    return load_resolution(fixture("pd2_bipartite_6gens.json"));
}

/* Koszul complex on the ring variables: an independent source of valid
 * complexes of any length for d.d = 0 coverage. */
inline FreeResolution koszul_resolution(const RingPtr& ring)
{
    const int n = static_cast<int>(ring->nvars());
    std::vector<PolyMatrix> maps;
    for (int i = 1; i <= n; ++i) {
        auto src = exterior_basis(n, i);
        auto dst = exterior_basis(n, i - 1);
        std::map<std::vector<int>, long> idx;
        for (long k = 0; k < static_cast<long>(dst.size()); ++k)
            idx[dst[static_cast<std::size_t>(k)]] = k;
        PolyMatrix m(ring, dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c)
            for (std::size_t pos = 0; pos < src[c].size(); ++pos) {
                auto tup = src[c];
                int var = tup[pos];
                tup.erase(tup.begin() + static_cast<long>(pos));
                Coeff s = Coeff::from_int(pos % 2 == 0 ? 1 : -1, ring->characteristic());
                m.at(static_cast<std::size_t>(idx.at(tup)), c) +=
                    Polynomial::variable(ring, static_cast<std::size_t>(var)).scale(s);
            }
        maps.push_back(std::move(m));
    }
    return FreeResolution::create(ring, std::move(maps), true);
}

/* all-zero maps of the given shape: a trivially valid complex, used when only
 * the Betti vector matters */
inline FreeResolution zero_resolution(const RingPtr& ring, const std::vector<long>& beta)
{
    std::vector<PolyMatrix> maps;
    for (std::size_t i = 0; i + 1 < beta.size(); ++i)
        maps.emplace_back(ring, static_cast<std::size_t>(beta[i]),
                          static_cast<std::size_t>(beta[i + 1]));
    return FreeResolution::create(ring, std::move(maps), false);
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_deg)
{
    std::uniform_int_distribution<int> dist(0, max_deg);
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        m.exponent(i) = static_cast<std::uint32_t>(dist(rng));
    return m;
}

inline Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, int max_terms, int max_deg)
{
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<long> coeffs(-4, 4);
    Polynomial p(ring);
    int n = terms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term(random_monomial(rng, ring->nvars(), max_deg),
                   Coeff::from_int(coeffs(rng), ring->characteristic()));
    return p;
}

/* nonzero monomial times small coefficient, degree >= 1 */
inline Polynomial random_monomial_entry(std::mt19937& rng, const RingPtr& ring)
{
    std::uniform_int_distribution<long> coeffs(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    Monomial m(ring->nvars());
    std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
    std::uniform_int_distribution<int> extra(0, 2);
    m.exponent(var(rng)) += 1;
    for (int e = extra(rng); e > 0; --e)
        m.exponent(var(rng)) += 1;
    long c = coeffs(rng) * (sign(rng) ? 1 : -1);
    return Polynomial::term(ring, m, Coeff::from_int(c, ring->characteristic()));
}

/* sparse matrices with monomial entries; not a complex, for rank bookkeeping only */
inline FreeResolution random_monomial_resolution(std::mt19937& rng, const RingPtr& ring,
                                                 const std::vector<long>& beta, double density)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<PolyMatrix> maps;
    for (std::size_t i = 0; i + 1 < beta.size(); ++i) {
        PolyMatrix m(ring, static_cast<std::size_t>(beta[i]),
                     static_cast<std::size_t>(beta[i + 1]));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (coin(rng) < density)
                    m.at(r, c) = random_monomial_entry(rng, ring);
        maps.push_back(std::move(m));
    }
    return FreeResolution::create(ring, std::move(maps), false, /*check_complex=*/false);
}

/* brute-force Krull dimension of a monomial ideal: largest variable subset
 * containing no generator's support; no Groebner machinery involved */
inline int brute_krull_monomial(std::size_t nvars, const std::vector<Monomial>& gens)
{
    int best = -1;
    for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
        bool ok = true;
        for (const auto& g : gens) {
            bool inside = true;
            for (std::size_t v = 0; v < nvars; ++v)
                if (g.exponent(v) > 0 && !(s & (1u << v))) {
                    inside = false;
                    break;
                }
            if (inside && !g.is_one()) {
                ok = false;
                break;
            }
            if (inside && g.is_one())
                return -1; // unit ideal
        }
        if (ok)
            best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

/* truncated-series oracle for the alternating rank sum: the coefficient of
 * z^j in prod_{i odd} (1-z)^{beta_i} / prod_{i even} (1-z)^{beta_i}, computed
 * by repeated multiplication and long division of integer series (no
 * binomials anywhere) */
inline mpz_class euler_series_oracle(const std::vector<long>& beta, int j)
{
    std::vector<mpz_class> num(static_cast<std::size_t>(j) + 1, 0);
    num[0] = 1;
    auto mul_one_minus_z = [&](std::vector<mpz_class>& s) {
        for (std::size_t k = s.size(); k-- > 1;)
            s[k] -= s[k - 1];
    };
    std::vector<mpz_class> den(static_cast<std::size_t>(j) + 1, 0);
    den[0] = 1;
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (long rep = 0; rep < beta[i]; ++rep)
            mul_one_minus_z(i % 2 == 1 ? num : den);
    /* long division num/den to order j; den[0] = 1 */
    std::vector<mpz_class> q(static_cast<std::size_t>(j) + 1, 0);
    for (std::size_t k = 0; k < q.size(); ++k) {
        mpz_class acc = num[k];
        for (std::size_t m = 1; m <= k; ++m)
            acc -= den[m] * q[k - m];
        q[k] = acc;
    }
    return q[static_cast<std::size_t>(j)];
}

/* truncated-series oracle for the unsigned total rank: the coefficient of
 * z^j in prod_{i odd} (1+z)^{beta_i} / prod_{i even} (1-z)^{beta_i} */
inline mpz_class total_rank_series_oracle(const std::vector<long>& beta, int j)
{
    std::vector<mpz_class> num(static_cast<std::size_t>(j) + 1, 0);
    num[0] = 1;
    auto mul_one_plus_z = [&](std::vector<mpz_class>& s) {
        for (std::size_t k = s.size(); k-- > 1;)
            s[k] += s[k - 1];
    };
    auto div_one_minus_z = [&](std::vector<mpz_class>& s) {
        for (std::size_t k = 1; k < s.size(); ++k)
            s[k] += s[k - 1]; // 1/(1-z) is the running-sum operator
    };
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (long rep = 0; rep < beta[i]; ++rep) {
            if (i % 2 == 1)
                mul_one_plus_z(num);
            else
                div_one_minus_z(num);
        }
    return num[static_cast<std::size_t>(j)];
}

/* brute-force composition enumeration by nested scan over all tuples */
inline std::vector<std::vector<int>> brute_compositions(int j, int t, int p)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(p) + 1, 0);
    while (true) {
        int w = 0, d = 0;
        for (int i = 0; i <= p; ++i) {
            w += cur[static_cast<std::size_t>(i)];
            d += i * cur[static_cast<std::size_t>(i)];
        }
        if (w == j && d == t)
            out.push_back(cur);
        /* odometer over 0..j per slot, leftmost slowest so output is lex ascending */
        int k = p;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == j)
            cur[static_cast<std::size_t>(k--)] = 0;
        if (k < 0)
            break;
        ++cur[static_cast<std::size_t>(k)];
    }
    return out;
}

/* compare generator lists as multisets up to sign */
inline bool same_generators_up_to_sign(std::vector<Polynomial> a, std::vector<Polynomial> b)
{
    if (a.size() != b.size())
        return false;
    auto key = [](const Polynomial& p) {
        Polynomial q = p.leading_coeff().is_negative() ? -p : p;
        return q.str();
    };
    std::vector<std::string> ka, kb;
    for (const auto& p : a)
        ka.push_back(key(p));
    for (const auto& p : b)
        kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

} // namespace testutil
