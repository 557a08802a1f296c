#include "affine/afa.hpp"

#include <algorithm>
#include <string>

namespace affine {

bool is_valid_input_symbol(Symbol s) noexcept
{
    return s > ' ' && s < 127 && s != kLeftMarker && s != kRightMarker && s != '#';
}

std::size_t AfaSpec::index_of(std::string_view state) const
{
    auto it = std::find(states.begin(), states.end(), state);
    if (it == states.end())
        throw DefinitionError("unknown state '" + std::string(state) + "'");
    return static_cast<std::size_t>(it - states.begin());
}

namespace afa {

namespace {

const AffineMatrix &matrix_for(const AfaSpec &spec, Symbol s)
{
    auto it = spec.matrices.find(s);
    if (it == spec.matrices.end())
        throw DefinitionError(std::string("no matrix for symbol '") + s + "'");
    return it->second;
}

void check_word(const AfaSpec &spec, std::string_view word)
{
    for (Symbol s : word)
        if (spec.alphabet.find(s) == std::string::npos)
            throw InputError(std::string("symbol '") + s + "' is not in the alphabet");
}

OutcomeTriple partition_weights(const AffineVector &v, const StateSet &accept,
                                const StateSet &reject, const StateSet &neutral)
{
    return {weigh(v, accept), weigh(v, reject), weigh(v, neutral)};
}

ValidationReport validate_partition(const AfaSpec &base, const StateSet &reject,
                                    const StateSet &third, const char *third_name)
{
    ValidationReport report;
    const std::size_t n = base.states.size();
    std::vector<int> owners(n, 0);
    auto mark = [&](const StateSet &set, const char *name) {
        for (std::size_t i : set) {
            if (i >= n) {
                report.add(std::string(name) + " state index " + std::to_string(i) + " out of range");
                continue;
            }
            ++owners[i];
        }
    };
    mark(base.accepting, "accepting");
    mark(reject, "rejecting");
    mark(third, third_name);
    for (std::size_t i = 0; i < n; ++i) {
        if (owners[i] == 0)
            report.add("state '" + base.states[i] + "' is in no part of the accepting/rejecting/" +
                       third_name + " partition");
        else if (owners[i] > 1)
            report.add("state '" + base.states[i] + "' is in more than one part of the partition");
    }
    return report;
}

} // namespace

std::vector<AffineVector> trace(const AfaSpec &spec, std::string_view word)
{
    check_word(spec, word);
    if (spec.initial >= spec.states.size())
        throw DefinitionError("initial state out of range");
    std::vector<AffineVector> out;
    out.reserve(word.size() + 3);
    out.push_back(AffineVector::unit(spec.states.size(), spec.initial));
    out.push_back(apply(matrix_for(spec, kLeftMarker), out.back()));
    for (Symbol s : word)
        out.push_back(apply(matrix_for(spec, s), out.back()));
    out.push_back(apply(matrix_for(spec, kRightMarker), out.back()));
    return out;
}

AffineVector run(const AfaSpec &spec, std::string_view word)
{
    check_word(spec, word);
    if (spec.initial >= spec.states.size())
        throw DefinitionError("initial state out of range");
    AffineVector v = apply(matrix_for(spec, kLeftMarker), AffineVector::unit(spec.states.size(), spec.initial));
    for (Symbol s : word)
        v = apply(matrix_for(spec, s), v);
    return apply(matrix_for(spec, kRightMarker), v);
}

Rational accept_prob(const AfaSpec &spec, std::string_view word)
{
    return weigh(run(spec, word), spec.accepting);
}

OutcomeTriple lasvegas_outcome(const LasVegasAfaSpec &spec, std::string_view word)
{
    return partition_weights(run(spec.base, word), spec.base.accepting, spec.rejecting, spec.neutral);
}

OutcomeTriple round_outcome(const RestartAfaSpec &spec, std::string_view word)
{
    return partition_weights(run(spec.base, word), spec.base.accepting, spec.rejecting, spec.restarting);
}

RestartAnalysis restart_analysis(const OutcomeTriple &round, std::size_t word_length)
{
    const Rational halt = round.p_accept + round.p_reject;
    if (halt.is_zero())
        throw NonterminationError("single-round halting probability is 0; the machine never halts");
    const Rational rounds = Rational(1) / halt;
    return {round.p_accept / halt, rounds,
            rounds * Rational(static_cast<std::int64_t>(word_length) + 2)};
}

RestartAnalysis restart_analysis(const RestartAfaSpec &spec, std::string_view word)
{
    return restart_analysis(round_outcome(spec, word), word.size());
}

ValidationReport validate(const AfaSpec &spec)
{
    ValidationReport report;
    const std::size_t n = spec.states.size();
    if (n == 0)
        report.add("machine has no states");
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.states[i].empty())
            report.add("state " + std::to_string(i + 1) + " has an empty name");
        for (std::size_t j = 0; j < i; ++j)
            if (spec.states[i] == spec.states[j])
                report.add("duplicate state '" + spec.states[i] + "'");
    }
    for (std::size_t i = 0; i < spec.alphabet.size(); ++i) {
        Symbol s = spec.alphabet[i];
        if (!is_valid_input_symbol(s))
            report.add(std::string("invalid alphabet symbol '") + s + "'");
        if (spec.alphabet.find(s) != i)
            report.add(std::string("duplicate alphabet symbol '") + s + "'");
    }
    if (spec.initial >= n)
        report.add("initial state out of range");
    for (std::size_t i : spec.accepting)
        if (i >= n)
            report.add("accepting state index " + std::to_string(i) + " out of range");

    std::string needed = std::string(1, kLeftMarker) + spec.alphabet + kRightMarker;
    for (Symbol s : needed) {
        auto it = spec.matrices.find(s);
        if (it == spec.matrices.end()) {
            report.add(std::string("missing matrix for symbol '") + s + "'");
            continue;
        }
        const AffineMatrix &m = it->second;
        if (m.dimension() != n) {
            report.add(std::string("matrix for symbol '") + s + "' has dimension " +
                       std::to_string(m.dimension()) + ", expected " + std::to_string(n));
            continue;
        }
        for (const auto &p : validate_matrix(m).problems)
            report.add(std::string("matrix for symbol '") + s + "': " + p);
    }
    for (const auto &[s, m] : spec.matrices)
        if (needed.find(s) == std::string::npos)
            report.add(std::string("matrix for symbol '") + s + "' which is not in the alphabet");
    return report;
}

ValidationReport validate(const LasVegasAfaSpec &spec)
{
    ValidationReport report = validate(spec.base);
    report.merge(validate_partition(spec.base, spec.rejecting, spec.neutral, "neutral"));
    return report;
}

ValidationReport validate(const RestartAfaSpec &spec)
{
    ValidationReport report = validate(spec.base);
    report.merge(validate_partition(spec.base, spec.rejecting, spec.restarting, "restarting"));
    return report;
}

LasVegasAfaSpec as_lasvegas(const RestartAfaSpec &spec)
{
    return {spec.base, spec.rejecting, spec.restarting};
}

RestartAfaSpec as_restart(const LasVegasAfaSpec &spec)
{
    return {spec.base, spec.rejecting, spec.neutral};
}

} // namespace afa

} // namespace affine
