#include "affine/zoo.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace affine::zoo {

namespace {

constexpr StatusPattern kAny = StatusPattern::Any;
constexpr StatusPattern kZero = StatusPattern::Zero;
constexpr StatusPattern kNonZero = StatusPattern::NonZero;

void require_k(std::int64_t k)
{
    if (k < 1)
        throw DefinitionError("parameter k must be at least 1, got " + std::to_string(k));
}

// Appends single-counter records.
struct OneCounterTable {
    std::vector<AfcaTransition> &out;

    void add(std::size_t from, Symbol sym, StatusPattern status, std::size_t to, int move, Rational value)
    {
        out.push_back({from, sym, {status}, to, {move}, std::move(value)});
    }
};

const std::array<std::string_view, 10> kManyTwinsStates = {
    "s1", "s2", "s3", "s1'", "s2'", "s3'", "se", "se'", "sa", "sr",
};

} // namespace

BigInt encode_base3(std::string_view word)
{
    BigInt e = 0;
    for (Symbol s : word) {
        if (s != '1' && s != '2')
            throw InputError(std::string("base-3 encoding is defined over {1,2}, got '") + s + "'");
        e = e * 3 + (s - '0');
    }
    return e;
}

std::size_t end_state(int classical, int affine)
{
    return static_cast<std::size_t>((classical - 1) * 5 + affine);
}

AfcaSpec build_end()
{
    AfcaSpec spec;
    for (int c = 1; c <= 2; ++c)
        for (int p = 0; p <= 4; ++p)
            spec.states.push_back("s" + std::to_string(c) + "_p" + std::to_string(p));
    spec.alphabet = "012";
    spec.counters = 1;
    spec.initial = end_state(1, 0);
    spec.accepting = {end_state(2, 3)};
    spec.accept_mode = AcceptMode::StateOnly;

    OneCounterTable t{spec.transitions};
    const Rational half(1, 2);
    for (int c = 1; c <= 2; ++c) {
        auto p = [c](int affine) { return end_state(c, affine); };

        t.add(p(0), kLeftMarker, kAny, p(0), 0, 1);
        t.add(p(0), kLeftMarker, kAny, p(1), 0, 1);
        t.add(p(0), kLeftMarker, kAny, p(2), 0, -1);

        // 0 and 1 differ only in the sign of the p3/p4 pair split off p1.
        for (Symbol sym : {'0', '1'}) {
            const Rational to_p3 = sym == '0' ? -half : half;
            t.add(p(0), sym, kAny, p(0), 0, 1);
            t.add(p(1), sym, kAny, p(1), 0, 1);
            t.add(p(1), sym, kAny, p(3), +1, to_p3);
            t.add(p(1), sym, kAny, p(4), +1, -to_p3);
            t.add(p(2), sym, kAny, p(2), 0, 1);
            t.add(p(3), sym, kAny, p(3), +1, 1);
            t.add(p(4), sym, kAny, p(4), +1, 1);
        }

        // Reading 2 also moves the classical component to s2.
        auto q = [](int affine) { return end_state(2, affine); };
        t.add(p(0), '2', kAny, q(0), 0, 1);
        t.add(p(1), '2', kAny, q(1), -1, 1);
        t.add(p(1), '2', kAny, q(3), 0, -half);
        t.add(p(1), '2', kAny, q(4), 0, half);
        t.add(p(2), '2', kAny, q(2), -1, 1);
        t.add(p(3), '2', kAny, q(3), 0, 1);
        t.add(p(4), '2', kAny, q(4), 0, 1);

        t.add(p(1), kRightMarker, kAny, p(1), 0, 1);
        t.add(p(2), kRightMarker, kAny, p(1), 0, 1);
        t.add(p(3), kRightMarker, kNonZero, p(3), 0, 1);
        t.add(p(4), kRightMarker, kNonZero, p(3), 0, 1);
        t.add(p(3), kRightMarker, kZero, p(3), 0, 1);
        t.add(p(4), kRightMarker, kZero, p(4), 0, 1);
        t.add(p(0), kRightMarker, kZero, p(3), 0, half);
        t.add(p(0), kRightMarker, kZero, p(4), 0, half);
        // p0 with a nonzero counter is unreachable and left to completion.
    }
    return spec;
}

ConfigVector end_prestate(std::string_view word)
{
    for (Symbol s : word)
        if (s != '0' && s != '1' && s != '2')
            throw InputError(std::string("END words are over {0,1,2}, got '") + s + "'");
    const auto twos = static_cast<std::int64_t>(std::count(word.begin(), word.end(), '2'));
    if (twos == 0)
        throw InputError("closed form requires at least one symbol 2");

    const std::string reversed(word.rbegin(), word.rend());
    const Rational half(1, 2);
    ConfigVector v;
    v.add({end_state(2, 0), {0}}, 1);
    v.add({end_state(2, 1), {-twos}}, 1);
    v.add({end_state(2, 2), {-twos}}, -1);
    for (std::size_t i = 1; i <= reversed.size(); ++i) {
        const Rational sign = reversed[i - 1] == '1' ? -1 : 1;
        const std::int64_t counter = static_cast<std::int64_t>(i) - twos;
        v.add({end_state(2, 3), {counter}}, sign * -half);
        v.add({end_state(2, 4), {counter}}, sign * half);
    }
    return v;
}

LasVegasAfaSpec build_pal_npal(std::int64_t k)
{
    require_k(k);
    const Rational K(k);
    AfaSpec base;
    base.states = {"s1", "s2", "s3", "s4", "s5"};
    base.alphabet = "012";
    base.initial = 0;
    base.accepting = {0, 1};

    // ^ sends the initial state s1 to (0 0 1 0 0)ᵀ; other columns are identity.
    base.matrices[kLeftMarker] = AffineMatrix{
        {0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0},
        {1, 0, 1, 0, 0},
        {0, 0, 0, 1, 0},
        {0, 0, 0, 0, 1},
    };
    base.matrices['1'] = AffineMatrix{
        {4, 1, 1, 1, 1},
        {0, 1, 1, 0, 0},
        {0, 0, 3, 0, 0},
        {0, 0, 0, 1, 0},
        {-3, -1, -4, -1, 0},
    };
    base.matrices['2'] = AffineMatrix{
        {5, 2, 2, 2, 2},
        {0, 1, 2, 0, 0},
        {0, 0, 3, 0, 0},
        {0, 0, 0, 1, 0},
        {-4, -2, -6, -2, -1},
    };
    base.matrices['0'] = AffineMatrix{
        {0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0},
        {1, 1, 1, 1, 1},
        {1, -1, 0, 0, 0},
        {-1, 1, 0, 0, 0},
    };
    base.matrices[kRightMarker] = AffineMatrix{
        {K, -K, 0, 0, 0},
        {-K, K, 0, 0, 0},
        {0, 0, 0, K, 0},
        {0, 0, 0, -K, 0},
        {1, 1, 1, 1, 1},
    };
    return {std::move(base), {2, 3}, {4}};
}

RestartAfaSpec build_pal_npal_restart(std::int64_t k)
{
    return afa::as_restart(build_pal_npal(k));
}

std::size_t manytwins_state(std::string_view name)
{
    auto it = std::find(kManyTwinsStates.begin(), kManyTwinsStates.end(), name);
    if (it == kManyTwinsStates.end())
        throw DefinitionError("no MANYTWINS state named '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - kManyTwinsStates.begin());
}

AfcaSpec build_manytwins(std::int64_t k)
{
    require_k(k);
    const Rational K(k);
    AfcaSpec spec;
    for (auto name : kManyTwinsStates)
        spec.states.emplace_back(name);
    spec.alphabet = "0123";
    spec.counters = 1;
    spec.initial = manytwins_state("s1");
    spec.accepting = {manytwins_state("sa")};
    spec.accept_mode = AcceptMode::Blind;

    OneCounterTable t{spec.transitions};
    const std::size_t se = manytwins_state("se");
    const std::size_t se_ = manytwins_state("se'");

    // One encoding phase: (lead, acc, aux) = (s1, s2, s3) before the 3 and
    // (s1', s2', s3') after it. `sign` is the sign of the value added to se.
    auto encoding_phase = [&](std::size_t lead, std::size_t acc, std::size_t aux, int sign, int separator_move) {
        for (Symbol sym : {'1', '2'}) {
            const Rational digit(sym - '0');
            t.add(lead, sym, kAny, lead, 0, 1);
            t.add(lead, sym, kAny, acc, 0, digit);
            t.add(lead, sym, kAny, aux, 0, -digit);
            t.add(acc, sym, kAny, acc, 0, 3);
            t.add(acc, sym, kAny, aux, 0, -2);
            t.add(aux, sym, kAny, aux, 0, 1);
        }
        t.add(lead, '0', kAny, lead, separator_move, 1);
        // Flushing the accumulator; also done on the block-ending 3 or $.
        for (Symbol sym : {'0', sign > 0 ? '3' : kRightMarker}) {
            t.add(acc, sym, kAny, se, 0, K * sign);
            t.add(acc, sym, kAny, se_, 0, -K * sign);
            t.add(acc, sym, kAny, aux, 0, 1);
            t.add(aux, sym, kAny, aux, 0, 1);
        }
    };

    const std::size_t s1 = manytwins_state("s1");
    const std::size_t s1_ = manytwins_state("s1'");
    encoding_phase(s1, manytwins_state("s2"), manytwins_state("s3"), +1, +1);
    encoding_phase(s1_, manytwins_state("s2'"), manytwins_state("s3'"), -1, -1);

    t.add(s1, '3', kAny, s1_, 0, 1);
    t.add(s1_, kRightMarker, kAny, manytwins_state("sa"), 0, 1);
    for (auto name : {"s1'", "s2'", "s3'"})
        t.add(manytwins_state(name), '3', kAny, manytwins_state("sr"), 0, 1);
    return spec;
}

ConfigVector manytwins_midstate(std::string_view u1, std::int64_t k)
{
    require_k(k);
    if (u1.empty() || u1.back() != '3')
        throw InputError("prefix must end with its first symbol 3");
    std::vector<std::string_view> blocks;
    std::size_t start = 0;
    const std::string_view body = u1.substr(0, u1.size() - 1);
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] != '0') {
            if (body[i] != '1' && body[i] != '2')
                throw InputError(std::string("unexpected symbol '") + body[i] + "' before the first 3");
            continue;
        }
        blocks.push_back(body.substr(start, i - start));
        start = i + 1;
    }

    const auto t = static_cast<std::int64_t>(blocks.size());
    const Rational K(k);
    ConfigVector v;
    v.add({manytwins_state("s1'"), {t - 1}}, 1);
    for (std::int64_t i = 1; i <= t; ++i) {
        const Rational stored = K * Rational(encode_base3(blocks[static_cast<std::size_t>(i - 1)]));
        v.add({manytwins_state("se"), {i - 1}}, stored);
        v.add({manytwins_state("se'"), {i - 1}}, -stored);
    }
    return v;
}

} // namespace affine::zoo
