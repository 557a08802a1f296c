#pragma once

#include "affine/afa.hpp"
#include "affine/errors.hpp"
#include "affine/linalg.hpp"
#include "affine/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace affine {

/// What a transition record requires of one counter.
enum class StatusPattern : std::uint8_t { Zero, NonZero, Any };

enum class AcceptMode : std::uint8_t {
    StateOnly, ///< weight of accepting states over all counter values
    Blind,     ///< weight of accepting states whose counters are all 0
};

/// δ(from, symbol, status, to, moves) = value.
struct AfcaTransition {
    std::size_t from = 0;
    Symbol symbol = 0;
    std::vector<StatusPattern> status; ///< one per counter
    std::size_t to = 0;
    std::vector<int> moves; ///< one per counter, each in {-1, 0, +1}
    Rational value;

    friend bool operator==(const AfcaTransition &, const AfcaTransition &) = default;
};

/*
 * Realtime affine k-counter automaton as declared. Records may use the
 * wildcard status; (state, symbol, status) triples without any record are
 * completed with a value-1 self-loop that leaves the counters unchanged.
 */
struct AfcaSpec {
    std::vector<std::string> states;
    std::string alphabet;
    std::size_t counters = 1;
    std::vector<AfcaTransition> transitions;
    std::size_t initial = 0;
    StateSet accepting;
    AcceptMode accept_mode = AcceptMode::StateOnly;

    std::size_t index_of(std::string_view state) const; ///< throws DefinitionError
    friend bool operator==(const AfcaSpec &, const AfcaSpec &) = default;
};

struct Configuration {
    std::size_t state = 0;
    std::vector<std::int64_t> counters;

    friend auto operator<=>(const Configuration &, const Configuration &) = default;
    friend bool operator==(const Configuration &, const Configuration &) = default;
};

/// Sparse combination Σ α_{s,c} |s,c⟩ with zero coefficients never stored.
class ConfigVector {
public:
    using Terms = std::map<Configuration, Rational>;

    ConfigVector() = default;
    static ConfigVector basis(Configuration c);

    /// Adds `value` to the coefficient of `c`, dropping it if it becomes 0.
    void add(const Configuration &c, const Rational &value);
    Rational coefficient(const Configuration &c) const;

    std::size_t support_size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    Terms::const_iterator begin() const noexcept { return terms_.begin(); }
    Terms::const_iterator end() const noexcept { return terms_.end(); }

    Rational coefficient_sum() const;
    Rational l1_norm() const;

    friend bool operator==(const ConfigVector &, const ConfigVector &) = default;

private:
    Terms terms_;
};

std::string to_string(const ConfigVector &v, const std::vector<std::string> &state_names);

/*
 * Validated AfCA with the transition table fully expanded: one edge list per
 * concrete (state, symbol, status) triple. Construction throws
 * DefinitionError carrying every validation problem.
 */
class AfcaMachine {
public:
    explicit AfcaMachine(AfcaSpec spec);

    const AfcaSpec &spec() const noexcept { return spec_; }

    ConfigVector initial_vector() const;
    /// Throws InputError if `symbol` is neither an alphabet symbol nor a marker.
    ConfigVector step(const ConfigVector &v, Symbol symbol) const;
    ConfigVector run(std::string_view word) const;
    /// v_0, …, v_m for m = |word| + 2.
    std::vector<ConfigVector> trace(std::string_view word) const;
    Rational accept_prob(std::string_view word) const;
    Rational accept_prob(const ConfigVector &final_vector) const;

private:
    struct Edge {
        std::size_t to;
        std::vector<int> moves;
        Rational value;
    };

    const std::vector<Edge> &edges(std::size_t state, std::size_t symbol, unsigned mask) const;
    std::size_t symbol_index(Symbol s) const;
    void check_word(std::string_view word) const;

    AfcaSpec spec_;
    std::string symbols_; ///< markers first, then the alphabet
    std::size_t patterns_ = 0;
    std::vector<std::vector<Edge>> table_;
};

namespace afca {

ConfigVector step(const AfcaSpec &spec, const ConfigVector &v, Symbol symbol);
ConfigVector run(const AfcaSpec &spec, std::string_view word);
Rational accept_prob(const AfcaSpec &spec, std::string_view word);

/// True iff no (state, symbol, target, moves) value depends on counter status.
bool is_blind(const AfcaSpec &spec);

/// True iff every configuration reached on ^word$ has all counters in [-m, m]
/// with m = |word| + 2.
bool counter_bound_check(const AfcaSpec &spec, std::string_view word);

/// Expands wildcards, completes missing triples, and checks that each
/// concrete (state, symbol, status) triple sums to 1. Blind mode additionally
/// requires is_blind().
ValidationReport validate(const AfcaSpec &spec);

std::string status_string(unsigned mask, std::size_t counters);

} // namespace afca

} // namespace affine
