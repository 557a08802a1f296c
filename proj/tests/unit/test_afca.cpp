#include "affine/afca.hpp"
#include "affine/zoo.hpp"
#include "random_specs.hpp"

#include <doctest.h>

using namespace affine;

namespace {

ConfigVector terms(std::initializer_list<std::pair<Configuration, Rational>> list)
{
    ConfigVector v;
    for (const auto &[c, x] : list)
        v.add(c, x);
    return v;
}

Configuration at(std::size_t state, std::int64_t counter)
{
    return {state, {counter}};
}

std::size_t end_s(int c, int p)
{
    return zoo::end_state(c, p);
}

std::size_t twin(std::string_view name)
{
    return zoo::manytwins_state(name);
}

AfcaSpec self_loops(std::size_t n, std::size_t counters)
{
    AfcaSpec spec;
    for (std::size_t i = 0; i < n; ++i)
        spec.states.push_back("q" + std::to_string(i));
    spec.alphabet = "ab";
    spec.counters = counters;
    spec.accepting = {0};
    return spec;
}

} // namespace

TEST_CASE("config vectors drop zero coefficients")
{
    ConfigVector v = ConfigVector::basis(at(0, 0));
    v.add(at(1, 2), Rational(1, 2));
    v.add(at(1, 2), Rational(-1, 2));
    CHECK(v.support_size() == 1);
    CHECK(v.coefficient(at(1, 2)) == 0);
    v.add(at(2, -1), -3);
    v.add(at(3, 1), 3);
    CHECK(v.coefficient_sum() == 1);
    CHECK(v.l1_norm() == 7);
    CHECK(to_string(v, {"a", "b", "c", "d"}) == "a 0 1/1\nc -1 -3/1\nd 1 3/1\n");
}

TEST_CASE("END machine steps")
{
    const AfcaSpec end = zoo::build_end();
    const ConfigVector start = ConfigVector::basis(at(end_s(1, 0), 0));
    CHECK(afca::step(end, start, '^') ==
          terms({{at(end_s(1, 0), 0), 1}, {at(end_s(1, 1), 0), 1}, {at(end_s(1, 2), 0), -1}}));

    for (std::int64_t c : {-2, 0, 3}) {
        const ConfigVector p1 = ConfigVector::basis(at(end_s(1, 1), c));
        CHECK(afca::step(end, p1, '2') == terms({{at(end_s(2, 1), c - 1), 1},
                                                 {at(end_s(2, 3), c), Rational(-1, 2)},
                                                 {at(end_s(2, 4), c), Rational(1, 2)}}));
    }
    CHECK_THROWS_AS(afca::step(end, start, '7'), InputError);
}

TEST_CASE("END final vectors")
{
    const AfcaSpec end = zoo::build_end();
    CHECK(afca::run(end, "21") == ConfigVector::basis(at(end_s(2, 3), 0)));
    CHECK(afca::run(end, "12") == ConfigVector::basis(at(end_s(2, 4), 0)));
    CHECK(afca::accept_prob(end, "21") == 1);
    CHECK(afca::accept_prob(end, "12") == 0);
    CHECK(afca::accept_prob(end, "11") == 0);
}

TEST_CASE("MANYTWINS final vectors")
{
    const AfcaSpec one = zoo::build_manytwins(1);
    CHECK(afca::run(one, "3") == ConfigVector::basis(at(twin("sa"), 0)));
    CHECK(afca::run(one, "132") ==
          terms({{at(twin("sa"), 0), 1}, {at(twin("se"), 0), -1}, {at(twin("se'"), 0), 1}}));
    CHECK(afca::accept_prob(one, "132") == Rational(1, 3));
    for (std::int64_t k : {1, 2, 5}) {
        CHECK(afca::accept_prob(zoo::build_manytwins(k), "131") == 1);
        CHECK(afca::accept_prob(zoo::build_manytwins(k), "11") == 0);
    }
}

TEST_CASE("acceptance modes differ on a nonzero final counter")
{
    AfcaSpec twins = zoo::build_manytwins(1);
    CHECK(afca::run(twins, "0131") == ConfigVector::basis(at(twin("sa"), 1)));
    CHECK(afca::accept_prob(twins, "0131") == 0);
    twins.accept_mode = AcceptMode::StateOnly;
    CHECK(afca::accept_prob(twins, "0131") == 1);
}

TEST_CASE("self-loop completion is the identity")
{
    const AfcaSpec spec = self_loops(3, 2);
    CHECK(afca::validate(spec).ok());
    ConfigVector v;
    v.add({0, {0, 0}}, 2);
    v.add({1, {-1, 4}}, Rational(-3, 2));
    v.add({2, {5, 0}}, Rational(1, 2));
    for (Symbol s : std::string("^ab$"))
        CHECK(afca::step(spec, v, s) == v);
    CHECK(afca::run(spec, "abba") == ConfigVector::basis({0, {0, 0}}));
}

TEST_CASE("blindness")
{
    CHECK(afca::is_blind(zoo::build_manytwins(1)));
    CHECK_FALSE(afca::is_blind(zoo::build_end()));

    AfcaSpec spec = self_loops(2, 1);
    spec.transitions.push_back({0, 'a', {StatusPattern::Zero}, 1, {1}, 1});
    spec.transitions.push_back({0, 'a', {StatusPattern::NonZero}, 1, {1}, 1});
    CHECK(afca::is_blind(spec));
    spec.transitions.back().moves = {0};
    CHECK_FALSE(afca::is_blind(spec));

    spec.accept_mode = AcceptMode::Blind;
    const ValidationReport r = afca::validate(spec);
    REQUIRE_FALSE(r.ok());
    CHECK(r.str().find("status-dependent transition from state 'q0' on symbol 'a'") != std::string::npos);
    CHECK_THROWS_AS(AfcaMachine{spec}, DefinitionError);
}

TEST_CASE("counter bounds")
{
    const AfcaSpec end = zoo::build_end();
    const AfcaSpec twins = zoo::build_manytwins(2);
    testing::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::string w = testing::random_word(rng, "012", trial % 10);
        CHECK(afca::counter_bound_check(end, w));
        const auto n = static_cast<std::int64_t>(w.size());
        for (const auto &[c, x] : afca::run(end, w)) {
            CHECK(c.counters[0] >= -n);
            CHECK(c.counters[0] <= n);
        }
        CHECK(afca::counter_bound_check(twins, testing::random_word(rng, "0123", trial % 10)));
    }

    const AfcaMachine m(end);
    for (const ConfigVector &v : m.trace(""))
        for (const auto &[c, x] : v)
            CHECK(c.counters[0] == 0);
}

TEST_CASE("validation")
{
    CHECK(afca::validate(zoo::build_end()).ok());
    for (std::int64_t k = 1; k <= 10; ++k)
        CHECK(afca::validate(zoo::build_manytwins(k)).ok());

    AfcaSpec twice = self_loops(2, 1);
    twice.transitions.push_back({0, 'b', {StatusPattern::Any}, 1, {0}, 1});
    twice.transitions.push_back({0, 'b', {StatusPattern::NonZero}, 0, {1}, 1});
    const ValidationReport r = afca::validate(twice);
    REQUIRE(r.problems.size() == 1);
    CHECK(r.problems[0] == "transitions for (q0, b, N) sum to 2, not 1");

    AfcaSpec dup = self_loops(2, 1);
    dup.transitions.push_back({0, 'a', {StatusPattern::Any}, 1, {0}, Rational(1, 2)});
    dup.transitions.push_back({0, 'a', {StatusPattern::Zero}, 1, {0}, Rational(1, 2)});
    CHECK_FALSE(afca::validate(dup).ok());

    AfcaSpec bad_move = self_loops(2, 1);
    bad_move.transitions.push_back({0, 'a', {StatusPattern::Any}, 1, {2}, 1});
    CHECK_FALSE(afca::validate(bad_move).ok());

    AfcaSpec bad_arity = self_loops(2, 2);
    bad_arity.transitions.push_back({0, 'a', {StatusPattern::Any}, 1, {0}, 1});
    CHECK_FALSE(afca::validate(bad_arity).ok());

    CHECK(afca::status_string(0b10, 2) == "ZN");
}

TEST_CASE("sparse simulation agrees with a dense reference")
{
    testing::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t counters = 1 + trial % 2;
        const AcceptMode mode = trial % 3 == 0 ? AcceptMode::Blind : AcceptMode::StateOnly;
        const AfcaSpec spec = testing::random_afca(rng, 2 + trial % 3, "ab", counters, mode);
        REQUIRE(afca::validate(spec).ok());
        const std::string w = testing::random_word(rng, "ab", trial % 5);
        const ConfigVector v = afca::run(spec, w);
        CHECK(v == testing::dense_afca_run(spec, w));
        CHECK(v.coefficient_sum() == 1);
    }
    const AfcaSpec end = zoo::build_end();
    for (const std::string w : {"", "2", "021", "1202", "22110"})
        CHECK(afca::run(end, w) == testing::dense_afca_run(end, w));
    const AfcaSpec twins = zoo::build_manytwins(2);
    for (const std::string w : {"3", "1031", "10320", "2132"})
        CHECK(afca::run(twins, w) == testing::dense_afca_run(twins, w));
}

TEST_CASE("0/1 tables stay classical")
{
    testing::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const AfcaSpec spec = testing::random_deterministic_afca(rng, 2 + trial % 4, "ab", 1 + trial % 2);
        const AfcaMachine m(spec);
        for (const ConfigVector &v : m.trace(testing::random_word(rng, "ab", trial % 8))) {
            REQUIRE(v.support_size() == 1);
            CHECK(v.begin()->second == 1);
        }
    }
}
