#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "symres/errors.hpp"
#include "symres/matrix.hpp"

#include "helpers.hpp"

using namespace symres;
using testutil::random_poly;

namespace {

PolyMatrix phi_pd1()
{
    auto R = RingConfig::create({"x", "y", "z"}, 0);
    PolyMatrix m(R, 3, 2);
    m.at(0, 0) = parse_polynomial("-y*z", R);
    m.at(0, 1) = parse_polynomial("-x*z^2", R);
    m.at(1, 0) = parse_polynomial("x^2", R);
    m.at(2, 1) = parse_polynomial("z", R);
    return m;
}

/* plain Laplace expansion along the first row, no pivot heuristics: the
 * reference route for the production determinant */
Polynomial naive_det(const PolyMatrix& m, std::vector<std::size_t> rows,
                     std::vector<std::size_t> cols)
{
    if (rows.size() == 1)
        return m.at(rows[0], cols[0]);
    Polynomial acc(m.ring());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
        Polynomial term = m.at(rows[0], cols[k]) * naive_det(m, sub_rows, sub_cols);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Polynomial naive_det(const PolyMatrix& m)
{
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return naive_det(m, rows, cols);
}

} // namespace

TEST_CASE("determinant basics")
{
    auto R = RingConfig::create({"x", "y", "z", "w"}, 0);
    PolyMatrix m(R, 2, 2);
    m.at(0, 0) = parse_polynomial("x", R);
    m.at(0, 1) = parse_polynomial("y", R);
    m.at(1, 0) = parse_polynomial("z", R);
    m.at(1, 1) = parse_polynomial("w", R);
    CHECK(determinant(m) == parse_polynomial("x*w - y*z", R));
    CHECK(determinant(PolyMatrix::identity(R, 3)) == Polynomial::one(R));
    CHECK_THROWS_AS(determinant(PolyMatrix(R, 2, 3)), InputError);

    PolyMatrix phi = phi_pd1();
    Polynomial top = determinant(phi.submatrix({0, 1}, {0, 1}));
    CHECK(top == parse_polynomial("x^3*z^2", phi.ring()));
}

TEST_CASE("minors ideal conventions and the pd-1 fixture generators")
{
    PolyMatrix phi = phi_pd1();
    const auto& R = phi.ring();

    Ideal i0 = minors_ideal(phi, 0);
    CHECK(i0.unit_flag);
    REQUIRE(i0.generators.size() == 1);
    CHECK(i0.generators[0] == Polynomial::one(R));
    CHECK(minors_ideal(phi, -3).unit_flag);

    Ideal i3 = minors_ideal(phi, 3);
    CHECK(i3.generators.empty());
    CHECK_FALSE(i3.unit_flag);

    Ideal i1 = minors_ideal(phi, 1);
    std::vector<std::string> got1;
    for (const auto& g : i1.generators)
        got1.push_back(g.str());
    CHECK(got1 == std::vector<std::string>{"-y*z", "-x*z^2", "x^2", "z"});

    Ideal i2 = minors_ideal(phi, 2);
    std::vector<std::string> got2;
    for (const auto& g : i2.generators)
        got2.push_back(g.str());
    CHECK(got2 == std::vector<std::string>{"x^3*z^2", "-y*z^2", "x^2*z"});
}

TEST_CASE("minors guard")
{
    PolyMatrix phi = phi_pd1();
    CHECK_THROWS_AS(minors_ideal(phi, 1, 3), GuardError);
}

TEST_CASE("rank over the fraction field")
{
    PolyMatrix phi = phi_pd1();
    CHECK(rank_over_fraction_field(phi) == 2);
    auto R = phi.ring();
    CHECK(rank_over_fraction_field(PolyMatrix(R, 3, 3)) == 0);
    CHECK(rank_over_fraction_field(PolyMatrix::identity(R, 4)) == 4);
}

TEST_CASE("determinant is alternating under row swaps")
{
    std::mt19937 rng(11);
    auto R = RingConfig::create({"x", "y"}, 0);
    for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<std::size_t> size(2, 4);
        std::size_t n = size(rng);
        PolyMatrix m(R, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = random_poly(rng, R, 2, 2);
        PolyMatrix swapped = m;
        for (std::size_t c = 0; c < n; ++c)
            std::swap(swapped.at(0, c), swapped.at(1, c));
        CHECK(determinant(swapped) == -determinant(m));
    }
}

TEST_CASE("largest t with nonzero minors equals the rank")
{
    std::mt19937 rng(23);
    auto R = RingConfig::create({"x", "y"}, 0);
    for (int it = 0; it < 20; ++it) {
        PolyMatrix m(R, 3, 4);
        std::uniform_real_distribution<double> coin(0, 1);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (coin(rng) < 0.55)
                    m.at(r, c) = random_poly(rng, R, 2, 1);
        std::size_t rk = rank_over_fraction_field(m);
        long largest = 0;
        for (long t = 1; t <= 3; ++t)
            if (!minors_ideal(m, t).generators.empty())
                largest = t;
        CHECK(static_cast<std::size_t>(largest) == rk);
    }
}

TEST_CASE("block upper-triangular determinant factors")
{
    std::mt19937 rng(5);
    auto R = RingConfig::create({"x", "y"}, 0);
    for (int it = 0; it < 15; ++it) {
        PolyMatrix m(R, 4, 4);
        PolyMatrix a(R, 2, 2), d(R, 2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                a.at(r, c) = random_poly(rng, R, 2, 2);
                d.at(r, c) = random_poly(rng, R, 2, 2);
                m.at(r, c) = a.at(r, c);
                m.at(r + 2, c + 2) = d.at(r, c);
                m.at(r, c + 2) = random_poly(rng, R, 2, 2); // upper block arbitrary
            }
        CHECK(determinant(m) == determinant(a) * determinant(d));
    }
}

TEST_CASE("Bareiss path agrees with plain Laplace expansion")
{
    std::mt19937 rng(17);
    auto R = RingConfig::create({"x", "y"}, 0);
    for (int it = 0; it < 10; ++it) {
        PolyMatrix m(R, 5, 5);
        std::uniform_real_distribution<double> coin(0, 1);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c)
                if (coin(rng) < 0.5)
                    m.at(r, c) = random_poly(rng, R, 1, 2);
        CHECK(determinant(m) == naive_det(m));
    }
}

TEST_CASE("matrix product and zero tests")
{
    auto R = RingConfig::create({"x", "y", "z"}, 0);
    PolyMatrix a(R, 2, 2), b(R, 2, 2);
    a.at(0, 0) = parse_polynomial("x", R);
    a.at(1, 1) = parse_polynomial("y", R);
    b.at(0, 1) = parse_polynomial("z", R);
    PolyMatrix p = a * b;
    CHECK(p.at(0, 1) == parse_polynomial("x*z", R));
    CHECK(p.nonzero_count() == 1);
    CHECK_FALSE(p.is_zero());
    CHECK(PolyMatrix(R, 3, 2).is_zero());
    CHECK_THROWS_AS(a * PolyMatrix(R, 3, 2), InputError);
}
