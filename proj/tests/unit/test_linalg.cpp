#include "affine/linalg.hpp"
#include "affine/zoo.hpp"
#include "random_specs.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace affine;

namespace {

AffineVector vec(std::vector<Rational> v)
{
    return AffineVector(std::move(v));
}

} // namespace

TEST_CASE("affine vectors must sum to one")
{
    CHECK_NOTHROW(vec({-2, 2, 0, 0, 1}));
    CHECK_THROWS_AS(vec({1, 1}), DefinitionError);
    CHECK_THROWS_AS(vec({}), DefinitionError);
    CHECK(AffineVector::unit(3, 1) == vec({0, 1, 0}));
}

TEST_CASE("matrix shape checks")
{
    CHECK_THROWS_AS(AffineMatrix::from_rows({}), DefinitionError);
    CHECK_THROWS_AS(AffineMatrix::from_rows({{1, 0}, {0}}), DefinitionError);
    CHECK(AffineMatrix::identity(2) == AffineMatrix{{1, 0}, {0, 1}});
}

TEST_CASE("apply")
{
    const auto pal = zoo::build_pal_npal(1).base;
    const AffineVector e3 = AffineVector::unit(5, 2);
    CHECK(apply(AffineMatrix::identity(3), vec({Rational(1, 2), -1, Rational(3, 2)})) ==
          vec({Rational(1, 2), -1, Rational(3, 2)}));
    CHECK(apply(pal.matrices.at('1'), e3) == vec({1, 1, 3, 0, -4}));
    CHECK(apply(pal.matrices.at('2'), e3) == vec({2, 2, 3, 0, -6}));
    CHECK_THROWS_AS(apply(AffineMatrix::identity(2), e3), DefinitionError);
    CHECK_THROWS_AS(apply(AffineMatrix{{1, 0}, {1, 1}}, vec({1, 0})), DefinitionError);
}

TEST_CASE("weighting operator")
{
    CHECK(weigh(vec({1, 0, 0}), {0}) == 1);
    CHECK(weigh(vec({-2, 2, 0, 0, 1}), {0, 1}) == Rational(4, 5));
    CHECK(weigh(vec({Rational(1, 2), Rational(1, 2), 0}), {2}) == 0);
    CHECK(weigh(vec({1, 0, 0}), {}) == 0);
    CHECK_THROWS_AS(weigh(vec({1, 0}), {2}), std::out_of_range);
}

TEST_CASE("l1 norm")
{
    CHECK(l1_norm(vec({1, 0, 0})) == 1);
    CHECK(l1_norm(vec({-2, 2, 0, 0, 1})) == 5);
    CHECK(l1_norm(vec({4, 1, 1, 1, -6})) == 13);
}

TEST_CASE("matrix validation")
{
    CHECK(validate_matrix(zoo::build_pal_npal(1).base.matrices.at('0')).ok());
    CHECK(validate_matrix(AffineMatrix::identity(4)).ok());
    const ValidationReport bad = validate_matrix(AffineMatrix{{1, 0}, {1, 1}});
    REQUIRE(bad.problems.size() == 1);
    CHECK(bad.problems[0] == "column 1 sums to 2");
}

TEST_CASE("properties over random affine matrices")
{
    testing::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const AfaSpec spec = testing::random_afa(rng, 1 + trial % 6, "ab");
        const AffineMatrix &a = spec.matrices.at('a');
        const AffineMatrix &b = spec.matrices.at('b');
        const std::size_t n = a.dimension();
        REQUIRE(validate_matrix(a).ok());

        // Products of affine matrices are affine, and composition matches sequential application.
        CHECK(validate_matrix(a * b).ok());
        const AffineVector v = apply(spec.matrices.at(kLeftMarker), AffineVector::unit(n, spec.initial));
        CHECK(apply(a * b, v) == apply(a, apply(b, v)));

        // The weights of all states add up to one and the norm never drops below one.
        StateSet all;
        for (std::size_t i = 0; i < n; ++i)
            all.insert(i);
        CHECK(weigh(v, all) == 1);
        CHECK(l1_norm(v) >= 1);
        StateSet half;
        for (std::size_t i = 0; i < n; i += 2)
            half.insert(i);
        const Rational w = weigh(v, half);
        CHECK(w >= 0);
        CHECK(w <= 1);
    }
}
