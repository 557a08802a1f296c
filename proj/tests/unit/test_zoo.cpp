#include "affine/oracles.hpp"
#include "affine/zoo.hpp"

#include <doctest.h>

#include <algorithm>

using namespace affine;

namespace {

ConfigVector terms(std::initializer_list<std::pair<Configuration, Rational>> list)
{
    ConfigVector v;
    for (const auto &[c, x] : list)
        v.add(c, x);
    return v;
}

Configuration end_at(int p, std::int64_t counter)
{
    return {zoo::end_state(2, p), {counter}};
}

Configuration twin_at(std::string_view name, std::int64_t counter)
{
    return {zoo::manytwins_state(name), {counter}};
}

// Digit-by-digit base-3 value, most significant digit first.
Rational base3(const std::string &w)
{
    Rational value;
    Rational place(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        value += place * Rational(*it - '0');
        place *= 3;
    }
    return value;
}

} // namespace

TEST_CASE("base-3 encoding")
{
    CHECK(zoo::encode_base3("") == 0);
    CHECK(zoo::encode_base3("12") == 5);
    CHECK(zoo::encode_base3("21") == 7);
    CHECK(zoo::encode_base3("2222222222222222222222222222222222222222") ==
          BigInt("12157665459056928800"));
    CHECK_THROWS_AS(zoo::encode_base3("102"), InputError);

    std::vector<BigInt> seen;
    for (const std::string &w : oracles::enumerate_words("12", 8)) {
        CHECK(Rational(zoo::encode_base3(w)) == base3(w));
        seen.push_back(zoo::encode_base3(w));
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("END machine shape")
{
    const AfcaSpec end = zoo::build_end();
    CHECK(end.states.size() == 10);
    CHECK(end.counters == 1);
    CHECK(end.states[end.initial] == "s1_p0");
    CHECK(end.accepting == StateSet{zoo::end_state(2, 3)});
    CHECK(end.accept_mode == AcceptMode::StateOnly);
    for (const AfcaTransition &t : end.transitions)
        if (t.symbol != kRightMarker)
            CHECK(t.status[0] == StatusPattern::Any);
}

TEST_CASE("END state before the right marker")
{
    const Rational h(1, 2);
    CHECK(zoo::end_prestate("2") == terms({{end_at(0, 0), 1},
                                           {end_at(1, -1), 1},
                                           {end_at(2, -1), -1},
                                           {end_at(3, 0), -h},
                                           {end_at(4, 0), h}}));
    CHECK(zoo::end_prestate("21") == terms({{end_at(0, 0), 1},
                                            {end_at(1, -1), 1},
                                            {end_at(2, -1), -1},
                                            {end_at(3, 0), h},
                                            {end_at(4, 0), -h},
                                            {end_at(3, 1), -h},
                                            {end_at(4, 1), h}}));
    CHECK_THROWS_AS(zoo::end_prestate("101"), InputError);
    CHECK_THROWS_AS(zoo::end_prestate(""), InputError);

    const AfcaMachine m(zoo::build_end());
    for (const std::string w : {"2", "21", "0212", "22", "1120"})
        CHECK(m.trace(w)[w.size() + 1] == zoo::end_prestate(w));
}

TEST_CASE("PAL-NPAL final vector")
{
    CHECK_THROWS_AS(zoo::build_pal_npal(0), DefinitionError);
    CHECK_THROWS_AS(zoo::build_pal_npal_restart(-1), DefinitionError);
    for (std::int64_t k : {1, 2, 7}) {
        const LasVegasAfaSpec spec = zoo::build_pal_npal(k);
        CHECK(spec.base.states.size() == 5);
        CHECK(spec.base.accepting == StateSet{0, 1});
        CHECK(spec.rejecting == StateSet{2, 3});
        CHECK(spec.neutral == StateSet{4});
        for (const std::string &x : oracles::enumerate_words("12", 3))
            for (const std::string &y : oracles::enumerate_words("12", 3)) {
                const Rational dx = base3(x) - base3(std::string(x.rbegin(), x.rend()));
                const Rational dy = base3(y) - base3(std::string(y.rbegin(), y.rend()));
                CHECK(afa::run(spec.base, x + "0" + y) == AffineVector({k * dy, -k * dy, k * dx, -k * dx, 1}));
            }
    }
    CHECK(zoo::build_pal_npal_restart(2).restarting == StateSet{4});
}

TEST_CASE("MANYTWINS machine shape")
{
    for (std::int64_t k = 1; k <= 10; ++k) {
        const AfcaSpec spec = zoo::build_manytwins(k);
        CHECK(spec.states.size() == 10);
        CHECK(spec.accept_mode == AcceptMode::Blind);
        CHECK(afca::is_blind(spec));
        CHECK(afca::validate(spec).ok());
        CHECK(spec.states[spec.initial] == "s1");
        CHECK(spec.accepting == StateSet{zoo::manytwins_state("sa")});
    }
    CHECK_THROWS_AS(zoo::build_manytwins(0), DefinitionError);
    CHECK_THROWS_AS(zoo::manytwins_state("s4"), std::exception);
}

TEST_CASE("MANYTWINS state after the first 3")
{
    CHECK(zoo::manytwins_midstate("3", 1) == ConfigVector::basis(twin_at("s1'", 0)));
    CHECK(zoo::manytwins_midstate("13", 1) ==
          terms({{twin_at("s1'", 0), 1}, {twin_at("se", 0), 1}, {twin_at("se'", 0), -1}}));
    CHECK(zoo::manytwins_midstate("1023", 1) == terms({{twin_at("s1'", 1), 1},
                                                       {twin_at("se", 0), 1},
                                                       {twin_at("se'", 0), -1},
                                                       {twin_at("se", 1), 2},
                                                       {twin_at("se'", 1), -2}}));
    CHECK(zoo::manytwins_midstate("003", 4) == ConfigVector::basis(twin_at("s1'", 2)));
    for (const char *bad : {"", "1", "31", "133", "2", "1a3"})
        CHECK_THROWS_AS(zoo::manytwins_midstate(bad, 1), InputError);

    for (std::int64_t k : {1, 3}) {
        const AfcaMachine m(zoo::build_manytwins(k));
        for (const std::string u : {"3", "13", "1023", "21102203", "00123"})
            CHECK(m.trace(u)[u.size() + 1] == zoo::manytwins_midstate(u, k));
    }
}
