#pragma once

#include "affine/errors.hpp"
#include "affine/linalg.hpp"
#include "affine/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace affine {

using Symbol = char;

inline constexpr Symbol kLeftMarker = '^';
inline constexpr Symbol kRightMarker = '$';

/// True for characters usable as input symbols: printable, not whitespace,
/// not a marker and not the comment character.
bool is_valid_input_symbol(Symbol s) noexcept;

/// Realtime affine finite automaton. Input words exclude the end-markers;
/// the runner frames them as ^w$.
struct AfaSpec {
    std::vector<std::string> states;
    std::string alphabet;
    std::map<Symbol, AffineMatrix> matrices; ///< one per alphabet symbol and both markers
    std::size_t initial = 0;
    StateSet accepting;

    std::size_t index_of(std::string_view state) const; ///< throws DefinitionError
    friend bool operator==(const AfaSpec &, const AfaSpec &) = default;
};

/// Accepting / rejecting / neutral ("don't know") partition of the states.
struct LasVegasAfaSpec {
    AfaSpec base; ///< base.accepting holds the accepting part
    StateSet rejecting;
    StateSet neutral;

    friend bool operator==(const LasVegasAfaSpec &, const LasVegasAfaSpec &) = default;
};

/// As LasVegasAfaSpec, but ending in a restarting state reruns the whole input.
struct RestartAfaSpec {
    AfaSpec base;
    StateSet rejecting;
    StateSet restarting;

    friend bool operator==(const RestartAfaSpec &, const RestartAfaSpec &) = default;
};

struct OutcomeTriple {
    Rational p_accept;
    Rational p_reject;
    Rational p_neutral;

    friend bool operator==(const OutcomeTriple &, const OutcomeTriple &) = default;
};

struct RestartAnalysis {
    Rational overall_accept;
    Rational expected_rounds;
    Rational expected_steps; ///< expected_rounds · (|w| + 2)

    friend bool operator==(const RestartAnalysis &, const RestartAnalysis &) = default;
};

namespace afa {

/// v_f for ^word$. Throws InputError for a symbol outside the alphabet and
/// DefinitionError if a needed matrix is missing or malformed.
AffineVector run(const AfaSpec &spec, std::string_view word);

/// v_0, v_1, …, v_{|word|+2}.
std::vector<AffineVector> trace(const AfaSpec &spec, std::string_view word);

Rational accept_prob(const AfaSpec &spec, std::string_view word);

OutcomeTriple lasvegas_outcome(const LasVegasAfaSpec &spec, std::string_view word);

/// Single-round outcome of a restart machine (neutral = restarting weight).
OutcomeTriple round_outcome(const RestartAfaSpec &spec, std::string_view word);

/// Closed-form restart analysis from a single-round outcome.
/// Throws NonterminationError if p_accept + p_reject = 0.
RestartAnalysis restart_analysis(const OutcomeTriple &round, std::size_t word_length);
RestartAnalysis restart_analysis(const RestartAfaSpec &spec, std::string_view word);

ValidationReport validate(const AfaSpec &spec);
ValidationReport validate(const LasVegasAfaSpec &spec);
ValidationReport validate(const RestartAfaSpec &spec);

LasVegasAfaSpec as_lasvegas(const RestartAfaSpec &spec);
RestartAfaSpec as_restart(const LasVegasAfaSpec &spec);

} // namespace afa

} // namespace affine
