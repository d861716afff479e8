#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "entcone/catalog.hpp"
#include "entcone/cone.hpp"

#include "oracle.hpp"

using namespace entcone;

namespace {

std::vector<std::vector<Int>> ray_ints(const std::vector<ExtremeRay>& rays) {
    std::vector<std::vector<Int>> out;
    for (const auto& r : rays) {
        std::vector<Rational> v(r.rep.raw().begin(), r.rep.raw().end());
        out.push_back(primitive_vector(v));
    }
    return out;
}

std::vector<Int> iv(std::initializer_list<int> xs) {
    std::vector<Int> out;
    for (int x : xs)
        out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("rational rank and primitive vectors") {
    std::vector<std::vector<Rational>> rows = {
        {Rational(1), Rational(2), Rational(3)},
        {Rational(2), Rational(4), Rational(6)},
        {Rational(0), Rational(1), Rational(1)},
    };
    CHECK(rational_rank(rows) == 2);
    rows.push_back({Rational(1), Rational(0), Rational(0)});
    CHECK(rational_rank(rows) == 3);

    CHECK(primitive_vector({make_rational(1, 2), make_rational(3, 4)}) == iv({2, 3}));
    CHECK(primitive_vector({Rational(-4), Rational(6)}) == iv({-2, 3}));
    CHECK_THROWS_AS(primitive_vector({Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("double description reproduces the n=2 cone") {
    const auto rays = double_description(elemental_inequalities(GroundSet(2)));
    CHECK(ray_ints(rays) ==
          std::vector<std::vector<Int>>{iv({0, 1, 1}), iv({1, 0, 1}), iv({1, 1, 1})});
}

TEST_CASE("double description reproduces the n=3 cone") {
    const auto rays = double_description(elemental_inequalities(GroundSet(3)));
    const std::vector<std::vector<Int>> expected = {
        iv({0, 0, 0, 1, 1, 1, 1}), iv({0, 1, 1, 0, 0, 1, 1}),
        iv({0, 1, 1, 1, 1, 1, 1}), iv({1, 0, 1, 0, 1, 0, 1}),
        iv({1, 0, 1, 1, 1, 1, 1}), iv({1, 1, 1, 0, 1, 1, 1}),
        iv({1, 1, 1, 1, 1, 1, 1}), iv({1, 1, 2, 1, 2, 2, 2}),
    };
    CHECK(ray_ints(rays) == expected);
}

TEST_CASE("double description matches the brute-force oracle for n=2,3") {
    for (int n : {2, 3}) {
        const auto ineqs = elemental_inequalities(GroundSet(n));
        const auto dd = ray_ints(double_description(ineqs));
        auto brute = oracle::brute_force_rays(ineqs);
        std::sort(brute.begin(), brute.end());
        CHECK(dd == brute);
    }
}

TEST_CASE("double description is insensitive to inequality order") {
    const auto base = elemental_inequalities(GroundSet(3));
    const auto reference = ray_ints(double_description(base));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto shuffled = base;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(ray_ints(double_description(shuffled)) == reference);
    }
}

TEST_CASE("the n=4 cone has 41 rays with the catalog tight-set sizes") {
    const auto ineqs = elemental_inequalities(GroundSet(4));
    const auto rays = double_description(ineqs);
    REQUIRE(rays.size() == 41);

    std::map<size_t, int> tight_histogram;
    for (const auto& r : rays)
        ++tight_histogram[r.tight.size()];
    const std::map<size_t, int> expected = {{27, 4},  {24, 6}, {22, 10},
                                            {18, 6},  {16, 9}, {14, 6}};
    CHECK(tight_histogram == expected);

    // stored tight sets equal recomputed ones
    for (const auto& r : rays)
        CHECK(r.tight == tight_facets(r.rep, ineqs));
}

TEST_CASE("verify_extreme recomputes extremeness from scratch") {
    const auto ineqs = elemental_inequalities(GroundSet(4));
    const auto rays = double_description(ineqs);
    for (const auto& r : rays)
        CHECK(verify_extreme(r, ineqs));

    // the all-ones function is the modular rank of the free rank-1 matroid
    // on four elements and is extreme
    RationalSetFunction ones((GroundSet(4)));
    for (unsigned m = 1; m <= 15; ++m)
        ones.set_value(m, Rational(1));
    CHECK(verify_extreme(ExtremeRay(ones, {}), ineqs));

    // a conic combination of two rays is feasible but not extreme
    const auto e2 = elemental_inequalities(GroundSet(2));
    RationalSetFunction sum((GroundSet(2)));
    sum.set_value(0b01, Rational(1));
    sum.set_value(0b10, Rational(1));
    sum.set_value(0b11, Rational(2));
    CHECK_FALSE(verify_extreme(ExtremeRay(sum, {}), e2));

    // the zero function spans no ray
    CHECK_FALSE(verify_extreme(ExtremeRay(RationalSetFunction(GroundSet(2)), {}), e2));

    // an infeasible function is rejected even with a large tight set
    RationalSetFunction bad((GroundSet(2)));
    bad.set_value(0b01, Rational(-1));
    bad.set_value(0b10, Rational(1));
    CHECK_FALSE(verify_extreme(ExtremeRay(bad, {}), e2));
}

TEST_CASE("dual round-trip: rays of the ray-cone are the facet normals") {
    const auto ineqs = elemental_inequalities(GroundSet(3));
    const auto rays = double_description(ineqs);

    std::vector<LinearInequality> dual;
    int idx = 0;
    for (const auto& r : rays)
        dual.push_back(LinearInequality(r.rep, idx++));
    const auto normals = ray_ints(double_description(dual));

    std::set<std::vector<Int>> expected;
    for (const auto& iq : ineqs) {
        std::vector<Rational> v(iq.coeffs.raw().begin(), iq.coeffs.raw().end());
        expected.insert(primitive_vector(v));
    }
    CHECK(std::set<std::vector<Int>>(normals.begin(), normals.end()) == expected);
    CHECK(normals.size() == 9);
}

TEST_CASE("2-face enumeration: 510 of the 820 pairs, all with corank 2") {
    const auto ineqs = elemental_inequalities(GroundSet(4));
    const auto rays = double_description(ineqs);
    const auto faces = enumerate_2faces(rays, ineqs);
    CHECK(faces.size() == 820);
    int count = 0;
    for (const auto& f : faces) {
        CHECK(f.i < f.j);
        if (f.is_2face)
            ++count;
    }
    CHECK(count == 510);

    // every flagged pair shares a tight set of rank exactly dim-2
    int checked = 0;
    for (const auto& f : faces) {
        if (!f.is_2face || ++checked > 25)
            continue;
        std::set<int> ti(rays[static_cast<size_t>(f.i)].tight.begin(),
                         rays[static_cast<size_t>(f.i)].tight.end());
        std::vector<std::vector<Rational>> shared;
        for (int t : rays[static_cast<size_t>(f.j)].tight)
            if (ti.count(t)) {
                const auto& c = ineqs[static_cast<size_t>(t)].coeffs.raw();
                shared.push_back(std::vector<Rational>(c.begin(), c.end()));
            }
        CHECK(rational_rank(shared) == 13);
    }
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(double_description({}), std::invalid_argument);

    // one inequality in dimension 3 leaves a line: not pointed
    const auto e2 = elemental_inequalities(GroundSet(2));
    CHECK_THROWS_AS(double_description({e2[0]}), std::runtime_error);

    // mixed ground sets
    std::vector<LinearInequality> mixed = {e2[0],
                                           elemental_inequalities(GroundSet(3))[0]};
    CHECK_THROWS_AS(double_description(mixed), std::invalid_argument);
}
