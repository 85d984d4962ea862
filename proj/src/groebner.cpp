#include "symres/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <cstdio>
#include <set>

#include "symres/errors.hpp"

namespace symres {

namespace {

struct Budget {
    std::size_t left;
    void step()
    {
        if (left == 0)
            throw GuardError("Groebner S-pair reduction budget exceeded");
        --left;
    }
};

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& gs, Budget& budget)
{
    Polynomial rem(f.ring());
    Polynomial cur = f;
    while (!cur.is_zero()) {
        const Monomial& lm = cur.leading_monomial();
        const Polynomial* reducer = nullptr;
        for (const auto& g : gs) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            budget.step();
            Monomial q = lm.divide(reducer->leading_monomial());
            Coeff c = cur.leading_coeff() / reducer->leading_coeff();
            cur -= reducer->mul_term(q, c);
        } else {
            rem.add_term(lm, cur.leading_coeff());
            cur -= Polynomial::term(cur.ring(), lm, cur.leading_coeff());
        }
    }
    return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g)
{
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.mul_term(l.divide(f.leading_monomial()), f.leading_coeff().inverse());
    Polynomial b = g.mul_term(l.divide(g.leading_monomial()), g.leading_coeff().inverse());
    return a - b;
}

struct Pair {
    std::size_t i, j; // i < j
    Monomial lcm;
    std::uint64_t sugar;
};

struct PairLess {
    /* sugar strategy, ties broken by lcm then indices; deterministic */
    bool operator()(const Pair& a, const Pair& b) const
    {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        int c = Monomial::degrevlex_cmp(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

std::string cache_key(const Ideal& ideal)
{
    std::string key = ideal.ring->str() + "|char=" + std::to_string(ideal.ring->characteristic()) +
                      "|order=degrevlex|gens=";
    std::vector<std::string> gens;
    gens.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators)
        gens.push_back(g.str());
    std::sort(gens.begin(), gens.end());
    for (const auto& g : gens)
        key += g + ";";
    return key;
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::filesystem::path cache_path(const std::string& dir, const std::string& key)
{
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return std::filesystem::path(dir) / (std::string("gb_") + buf + ".txt");
}

std::optional<std::vector<Polynomial>> cache_load(const std::string& dir, const std::string& key,
                                                  const RingPtr& ring)
{
    std::ifstream in(cache_path(dir, key));
    if (!in)
        return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "# " + key)
        return std::nullopt; // hash collision or stale format
    std::vector<Polynomial> basis;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        basis.push_back(parse_polynomial(line, ring));
    }
    return basis;
}

void cache_store(const std::string& dir, const std::string& key,
                 const std::vector<Polynomial>& basis)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(cache_path(dir, key));
    if (!out)
        return; // cache is best-effort
    out << "# " << key << "\n";
    for (const auto& g : basis)
        out << g.str() << "\n";
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gs)
{
    Budget budget{std::numeric_limits<std::size_t>::max()};
    return reduce_full(f, gs, budget);
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts)
{
    GroebnerBasis out{ideal, {}, "degrevlex"};
    const RingPtr& ring = ideal.ring;

    if (!opts.cache_dir.empty()) {
        if (auto cached = cache_load(opts.cache_dir, cache_key(ideal), ring)) {
            out.basis = std::move(*cached);
            return out;
        }
    }

    Budget budget{opts.spair_budget};

    /* seed: monic generators, deduplicated, inter-reduced once */
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators)
        if (!g.is_zero())
            gens.push_back(g.monic());
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return Monomial::degrevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        Polynomial r = reduce_full(g, basis, budget);
        if (!r.is_zero())
            basis.push_back(r.monic());
    }

    std::vector<std::uint64_t> sugar;
    sugar.reserve(basis.size());
    for (const auto& g : basis)
        sugar.push_back(g.total_degree());

    std::set<Pair, PairLess> queue;
    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        std::uint64_t s = std::max(
            sugar[i] + l.divide(basis[i].leading_monomial()).degree(),
            sugar[j] + l.divide(basis[j].leading_monomial()).degree());
        queue.insert(Pair{i, j, std::move(l), s});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            push_pair(i, j);

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({p.i, p.j});

        /* coprime-leading-term criterion */
        if (basis[p.i].leading_monomial().coprime(basis[p.j].leading_monomial()))
            continue;
        /* chain criterion: some k with lt_k | lcm and both (i,k), (j,k) treated */
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j)
                continue;
            if (!basis[k].leading_monomial().divides(p.lcm))
                continue;
            auto ik = std::minmax(p.i, k);
            auto jk = std::minmax(p.j, k);
            if (treated.count({ik.first, ik.second}) && treated.count({jk.first, jk.second}))
                skip = true;
        }
        if (skip)
            continue;

        Polynomial r = reduce_full(s_polynomial(basis[p.i], basis[p.j]), basis, budget);
        if (r.is_zero())
            continue;
        basis.push_back(r.monic());
        sugar.push_back(std::max(p.sugar, r.total_degree()));
        std::size_t idx = basis.size() - 1;
        for (std::size_t i = 0; i < idx; ++i)
            push_pair(i, idx);
    }

    /* minimalize: drop elements whose leading term another one divides */
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i)
                continue;
            const Monomial& lk = basis[k].leading_monomial();
            const Monomial& li = basis[i].leading_monomial();
            if (lk.divides(li) && (lk != li || k < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    /* tail-reduce each element against the others */
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i)
                others.push_back(minimal[k]);
        Polynomial r = reduce_full(minimal[i], others, budget);
        if (!r.is_zero())
            reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return Monomial::degrevlex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    out.basis = std::move(reduced);

    if (!opts.cache_dir.empty())
        cache_store(opts.cache_dir, cache_key(ideal), out.basis);
    return out;
}

int krull_dimension(const GroebnerBasis& gb)
{
    const std::size_t n = gb.ideal.ring->nvars();
    if (gb.basis.empty())
        return static_cast<int>(n); // zero ideal
    for (const auto& g : gb.basis)
        if (g.leading_monomial().is_one())
            return -1; // unit ideal

    if (n > 24)
        throw GuardError("krull_dimension: too many variables for subset enumeration");

    std::vector<std::uint32_t> supports;
    supports.reserve(gb.basis.size());
    for (const auto& g : gb.basis) {
        std::uint32_t mask = 0;
        const Monomial& lm = g.leading_monomial();
        for (std::size_t i = 0; i < n; ++i)
            if (lm.exponent(i) > 0)
                mask |= (1u << i);
        supports.push_back(mask);
    }

    int best = 0;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t s = 0; s <= full; ++s) {
        int size = __builtin_popcount(s);
        if (size <= best)
            continue;
        bool independent = true;
        for (std::uint32_t supp : supports)
            if ((supp & ~s) == 0) { // support contained in s
                independent = false;
                break;
            }
        if (independent)
            best = size;
    }
    return best;
}

int krull_dimension(const Ideal& ideal, const BuchbergerOptions& opts)
{
    if (ideal.unit_flag)
        return -1;
    if (ideal.generators.empty())
        return static_cast<int>(ideal.ring->nvars());
    return krull_dimension(buchberger(ideal, opts));
}

GradeResult grade(const Ideal& ideal, const BuchbergerOptions& opts)
{
    const int n = static_cast<int>(ideal.ring->nvars());
    for (std::size_t i = 0; i < ideal.generators.size(); ++i)
        if (!ideal.generators[i].constant_term().is_zero())
            throw InputError("grade: generator " + std::to_string(i) + " = " +
                             ideal.generators[i].str() +
                             " has nonzero constant term, so the ideal is not contained in the "
                             "maximal ideal at the origin");
    int dim = krull_dimension(ideal, opts);
    int height = n - dim;
    return GradeResult{ideal, dim, height, height, true};
}

} // namespace symres
