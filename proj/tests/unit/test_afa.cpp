#include "affine/afa.hpp"
#include "affine/zoo.hpp"
#include "random_specs.hpp"

#include <doctest.h>

using namespace affine;

namespace {

AffineVector vec(std::vector<Rational> v)
{
    return AffineVector(std::move(v));
}

AfaSpec identity_machine(std::size_t n, std::size_t initial, StateSet accepting)
{
    AfaSpec spec;
    for (std::size_t i = 0; i < n; ++i)
        spec.states.push_back("q" + std::to_string(i));
    spec.alphabet = "ab";
    for (Symbol s : std::string("^ab$"))
        spec.matrices[s] = AffineMatrix::identity(n);
    spec.initial = initial;
    spec.accepting = std::move(accepting);
    return spec;
}

} // namespace

TEST_CASE("run follows the matrices")
{
    const AfaSpec pal = zoo::build_pal_npal(1).base;
    CHECK(afa::run(pal, "101") == vec({0, 0, 0, 0, 1}));
    CHECK(afa::run(pal, "1012") == vec({-2, 2, 0, 0, 1}));

    const AffineVector e = AffineVector::unit(5, pal.initial);
    CHECK(afa::run(pal, "") == apply(pal.matrices.at('$'), apply(pal.matrices.at('^'), e)));

    const auto steps = afa::trace(pal, "1012");
    REQUIRE(steps.size() == 7);
    CHECK(steps.front() == e);
    CHECK(steps[1] == vec({0, 0, 1, 0, 0}));
    CHECK(steps[2] == vec({1, 1, 3, 0, -4}));
    CHECK(steps.back() == afa::run(pal, "1012"));

    CHECK_THROWS_AS(afa::run(pal, "13"), InputError);
    CHECK_THROWS_AS(afa::run(pal, "1$"), InputError);
}

TEST_CASE("acceptance probability")
{
    AfaSpec pal = zoo::build_pal_npal(1).base;
    CHECK(afa::accept_prob(pal, "1012") == Rational(4, 5));
    CHECK(afa::accept_prob(identity_machine(3, 1, {1}), "abba") == 1);
    CHECK(afa::accept_prob(identity_machine(3, 1, {}), "abba") == 0);
    CHECK(afa::accept_prob(identity_machine(3, 1, {0, 2}), "") == 0);
}

TEST_CASE("Las Vegas outcomes")
{
    const LasVegasAfaSpec pal = zoo::build_pal_npal(1);
    CHECK(afa::lasvegas_outcome(pal, "1012") == OutcomeTriple{Rational(4, 5), 0, Rational(1, 5)});
    CHECK(afa::lasvegas_outcome(pal, "1201") == OutcomeTriple{0, Rational(4, 5), Rational(1, 5)});

    LasVegasAfaSpec idle;
    idle.base = identity_machine(3, 2, {0});
    idle.rejecting = {1};
    idle.neutral = {2};
    CHECK(afa::lasvegas_outcome(idle, "ab") == OutcomeTriple{0, 0, 1});
}

TEST_CASE("restart analysis")
{
    const RestartAfaSpec pal = zoo::build_pal_npal_restart(1);
    const RestartAnalysis yes = afa::restart_analysis(pal, "1012");
    CHECK(yes.overall_accept == 1);
    CHECK(yes.expected_rounds == Rational(5, 4));
    CHECK(yes.expected_steps == Rational(30, 4));
    CHECK(afa::restart_analysis(pal, "1201").overall_accept == 0);

    CHECK(afa::restart_analysis(OutcomeTriple{1, 0, 0}, 4) == RestartAnalysis{1, 1, 6});
    CHECK(afa::restart_analysis(OutcomeTriple{Rational(1, 4), Rational(1, 4), Rational(1, 2)}, 0) ==
          RestartAnalysis{Rational(1, 2), 2, 4});
    CHECK_THROWS_AS(afa::restart_analysis(OutcomeTriple{0, 0, 1}, 3), NonterminationError);
    CHECK_THROWS_AS(afa::restart_analysis(pal, "101"), NonterminationError);
}

TEST_CASE("validation")
{
    for (std::int64_t k = 1; k <= 10; ++k) {
        CHECK(afa::validate(zoo::build_pal_npal(k)).ok());
        CHECK(afa::validate(zoo::build_pal_npal_restart(k)).ok());
    }

    AfaSpec missing = zoo::build_pal_npal(1).base;
    missing.matrices.erase('$');
    const ValidationReport r = afa::validate(missing);
    REQUIRE_FALSE(r.ok());
    CHECK(r.str().find("missing matrix for symbol '$'") != std::string::npos);

    LasVegasAfaSpec overlap = zoo::build_pal_npal(1);
    overlap.rejecting.insert(0);
    CHECK_FALSE(afa::validate(overlap).ok());

    LasVegasAfaSpec uncovered = zoo::build_pal_npal(1);
    uncovered.neutral.clear();
    CHECK_FALSE(afa::validate(uncovered).ok());

    AfaSpec bad_column = identity_machine(2, 0, {0});
    bad_column.matrices['a'] = AffineMatrix{{1, 0}, {1, 1}};
    const ValidationReport c = afa::validate(bad_column);
    REQUIRE_FALSE(c.ok());
    CHECK(c.str().find("matrix for symbol 'a': column 1 sums to 2") != std::string::npos);

    AfaSpec bad_dim = identity_machine(2, 0, {0});
    bad_dim.matrices['b'] = AffineMatrix::identity(3);
    CHECK_FALSE(afa::validate(bad_dim).ok());

    AfaSpec dup = identity_machine(2, 0, {0});
    dup.states[1] = "q0";
    CHECK_FALSE(afa::validate(dup).ok());
}

TEST_CASE("Las Vegas and restart views share matrices")
{
    const LasVegasAfaSpec lv = zoo::build_pal_npal(3);
    const RestartAfaSpec rs = afa::as_restart(lv);
    CHECK(rs.base == lv.base);
    CHECK(rs.restarting == lv.neutral);
    CHECK(afa::as_lasvegas(rs) == lv);
    CHECK(afa::round_outcome(rs, "21012") == afa::lasvegas_outcome(lv, "21012"));
}

TEST_CASE("random machines: state stays affine and outcomes add up")
{
    testing::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const LasVegasAfaSpec spec = testing::random_lasvegas(rng, 2 + trial % 5, "xy");
        REQUIRE(afa::validate(spec).ok());
        const std::string w = testing::random_word(rng, "xy", trial % 9);
        const auto steps = afa::trace(spec.base, w);
        CHECK(steps.size() == w.size() + 3);
        CHECK(steps.back() == afa::run(spec.base, w));
        const OutcomeTriple o = afa::lasvegas_outcome(spec, w);
        CHECK(o.p_accept + o.p_reject + o.p_neutral == 1);
        CHECK(o.p_accept >= 0);
        CHECK(o.p_reject >= 0);
        CHECK(o.p_neutral >= 0);
    }
}

TEST_CASE("a 0/1 machine behaves like a DFA")
{
    testing::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 4;
        AfaSpec spec = identity_machine(n, 0, {});
        std::map<Symbol, std::vector<std::size_t>> delta;
        for (Symbol s : std::string("^ab$")) {
            std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
            for (std::size_t col = 0; col < n; ++col) {
                const std::size_t to = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                rows[to][col] = 1;
                delta[s].push_back(to);
            }
            spec.matrices[s] = AffineMatrix::from_rows(rows);
        }
        spec.accepting = {n - 1};
        const std::string w = testing::random_word(rng, "ab", trial % 7);

        std::size_t q = delta['^'][spec.initial];
        for (Symbol s : w)
            q = delta[s][q];
        q = delta['$'][q];
        CHECK(afa::run(spec, w) == AffineVector::unit(n, q));
        CHECK(afa::accept_prob(spec, w) == (q == n - 1 ? 1 : 0));
    }
}
