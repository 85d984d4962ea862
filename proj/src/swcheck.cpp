#include "symres/swcheck.hpp"

#include <algorithm>

#include "symres/betti.hpp"
#include "symres/errors.hpp"
#include "symres/matrix.hpp"

namespace symres {

GradeEngine::GradeEngine(const FreeResolution& res, SWGuards guards)
    : res_(res), guards_(std::move(guards))
{
}

GradeEngine::Value GradeEngine::minors_grade(int i, long size)
{
    if (i < 1 || i > res_.pd())
        throw InputError("minors_grade: map index " + std::to_string(i) + " out of range");
    if (size <= 0)
        return Value{true, 0};
    auto key = std::make_pair(i, size);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;

    const PolyMatrix& phi = res_.maps[static_cast<std::size_t>(i) - 1];
    Ideal ideal = minors_ideal(phi, size, guards_.max_minor_count);
    Value v;
    if (ideal.unit_flag)
        v = Value{true, 0};
    else
        v = Value{false, static_cast<long>(grade(ideal, guards_.groebner).grade)};
    cache_.emplace(key, v);
    return v;
}

namespace {

std::string grade_condition_str(int i, long size, long required)
{
    return "grade I_" + std::to_string(size) + "(phi_" + std::to_string(i) +
           ") >= " + std::to_string(required);
}

SWVerdict grade_verdict(GradeEngine& engine, char kind, int i, int t, long size, long required)
{
    SWVerdict v;
    v.kind = kind;
    v.i = i;
    v.t = t;
    v.minor_size = size;
    v.required = required;
    std::string prefix = kind == 'a' ? "(a) i=" + std::to_string(i)
                                     : "(b) i=" + std::to_string(i) + " t=" + std::to_string(t);
    v.condition = prefix + ": " + grade_condition_str(i, size, required);
    GradeEngine::Value g = engine.minors_grade(i, size);
    if (g.infinite) {
        v.computed = std::nullopt;
        v.pass = true; // unit ideal: grade treated as +infinity
    } else {
        v.computed = g.grade;
        v.pass = g.grade >= required;
    }
    return v;
}

} // namespace

SWReport check_swj(const FreeResolution& res, int j, GradeEngine& engine)
{
    if (j < 1)
        throw InputError("check_swj: j must be >= 1");
    const int p = res.pd();
    const DefectRanks dr = defect_ranks(res);

    SWReport rep;
    rep.j = j;
    rep.overall = true;
    for (int i = 1; i <= p; ++i) {
        if (i % 2 == 0) {
            SWVerdict v = grade_verdict(engine, 'a', i, -1, dr.at(i), static_cast<long>(j) * i);
            rep.overall = rep.overall && v.pass;
            rep.verdicts.push_back(std::move(v));
        } else {
            for (int t = 0; t <= j - 1; ++t) {
                long required = static_cast<long>(j) * (i - 1) + 1 + t;
                SWVerdict v = grade_verdict(engine, 'b', i, t, dr.at(i) - t, required);
                rep.overall = rep.overall && v.pass;
                rep.verdicts.push_back(std::move(v));
            }
        }
    }

    SWVerdict c;
    c.kind = 'c';
    const std::uint32_t ch = res.ring->characteristic();
    c.required = j;
    c.pass = (ch == 0) || (static_cast<long>(ch) > j);
    c.condition = "(c) " + std::to_string(j) + "! invertible (characteristic " +
                  std::to_string(ch) + ")";
    rep.overall = rep.overall && c.pass;
    rep.verdicts.push_back(std::move(c));
    return rep;
}

SWReport check_swj(const FreeResolution& res, int j, SWGuards guards)
{
    GradeEngine engine(res, std::move(guards));
    return check_swj(res, j, engine);
}

Pd1Report pd1_grade_criterion(const FreeResolution& res, int up_to, GradeEngine& engine)
{
    if (res.pd() != 1)
        throw InputError("pd1_grade_criterion applies only to resolutions of length 1");
    const long beta1 = res.betti[1];
    Pd1Report rep;
    rep.overall = true;
    for (int jj = 1; jj <= std::min<long>(up_to, beta1); ++jj) {
        Pd1Verdict v;
        v.j = jj;
        v.required = beta1 - jj + 1;
        GradeEngine::Value g = engine.minors_grade(1, jj);
        if (g.infinite) {
            v.computed = std::nullopt;
            v.pass = true;
        } else {
            v.computed = g.grade;
            v.pass = g.grade >= v.required;
        }
        rep.overall = rep.overall && v.pass;
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

Pd1Report pd1_grade_criterion(const FreeResolution& res, int up_to, SWGuards guards)
{
    GradeEngine engine(res, std::move(guards));
    return pd1_grade_criterion(res, up_to, engine);
}

JFeasibility j_feasible(const FreeResolution& res, int j, std::optional<long> dim_override)
{
    JFeasibility f;
    f.p = res.pd();
    f.dim_used = dim_override.value_or(static_cast<long>(res.ring->nvars()));
    f.j = j;
    f.required_pd = expected_pd(res.betti, j);
    f.feasible = f.required_pd <= f.dim_used;
    if (f.p % 2 == 0) {
        f.subcase = "pd even: j <= dim/pd";
    } else if (f.p == 1) {
        f.subcase = "pd = 1: min{beta_1, j} <= dim";
    } else if (res.betti.back() <= j) {
        f.subcase = "pd odd, min{beta_pd, j} = beta_pd: j <= (dim - beta_pd)/(pd - 1)";
    } else {
        f.subcase = "pd odd, min{beta_pd, j} = j: j <= dim/pd";
    }
    return f;
}

std::optional<long> max_feasible_j(const FreeResolution& res, std::optional<long> dim_override)
{
    const long dim = dim_override.value_or(static_cast<long>(res.ring->nvars()));
    const int p = res.pd();
    if (p % 2 == 0)
        return dim / p;
    if (p == 1)
        return res.betti[1] <= dim ? std::optional<long>{} : std::optional<long>{dim};
    /* p odd > 1: expected pd is nondecreasing in j */
    long j = 0;
    while (expected_pd(res.betti, static_cast<int>(j + 1)) <= dim)
        ++j;
    return j;
}

} // namespace symres
