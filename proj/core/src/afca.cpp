#include "affine/afca.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace affine {

namespace {

constexpr std::size_t kMaxCounters = 16;

using EdgeKey = std::pair<std::size_t, std::vector<int>>;
using Cell = std::map<EdgeKey, Rational>;

struct Expansion {
    std::string symbols;
    std::size_t patterns = 0;
    std::vector<Cell> cells;
    std::vector<bool> declared;

    std::size_t index(std::size_t state, std::size_t symbol, unsigned mask) const
    {
        return (state * symbols.size() + symbol) * patterns + mask;
    }
};

std::string symbol_table(const AfcaSpec &spec)
{
    return std::string{kLeftMarker, kRightMarker} + spec.alphabet;
}

bool matches(const std::vector<StatusPattern> &pattern, unsigned mask)
{
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const bool nonzero = (mask >> i) & 1U;
        if (pattern[i] == StatusPattern::Zero && nonzero)
            return false;
        if (pattern[i] == StatusPattern::NonZero && !nonzero)
            return false;
    }
    return true;
}

std::string describe(const AfcaSpec &spec, std::size_t state, Symbol symbol, unsigned mask)
{
    return "(" + spec.states[state] + ", " + std::string(1, symbol) + ", " +
           afca::status_string(mask, spec.counters) + ")";
}

// Structural problems go into `report`; bad records are skipped so the
// remaining table stays usable for is_blind().
Expansion expand(const AfcaSpec &spec, ValidationReport &report)
{
    Expansion ex;
    ex.symbols = symbol_table(spec);
    const std::size_t n = spec.states.size();
    const std::size_t k = spec.counters;
    if (n == 0)
        report.add("machine has no states");
    if (k == 0 || k > kMaxCounters) {
        report.add("counter count must be between 1 and " + std::to_string(kMaxCounters));
        return ex;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (spec.states[i] == spec.states[j])
                report.add("duplicate state '" + spec.states[i] + "'");
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

    ex.patterns = std::size_t{1} << k;
    ex.cells.assign(n * ex.symbols.size() * ex.patterns, {});
    ex.declared.assign(ex.cells.size(), false);

    for (std::size_t r = 0; r < spec.transitions.size(); ++r) {
        const AfcaTransition &t = spec.transitions[r];
        const std::string where = "transition " + std::to_string(r + 1) + ": ";
        bool ok = true;
        if (t.from >= n || t.to >= n) {
            report.add(where + "state index out of range");
            ok = false;
        }
        const std::size_t sym = ex.symbols.find(t.symbol);
        if (sym == std::string::npos) {
            report.add(where + "symbol '" + std::string(1, t.symbol) + "' is not in the alphabet");
            ok = false;
        }
        if (t.status.size() != k || t.moves.size() != k) {
            report.add(where + "expected " + std::to_string(k) + " status flags and counter moves");
            ok = false;
        }
        for (int d : t.moves)
            if (d < -1 || d > 1) {
                report.add(where + "counter move " + std::to_string(d) + " outside {-1, 0, +1}");
                ok = false;
            }
        if (!ok)
            continue;
        for (unsigned mask = 0; mask < ex.patterns; ++mask) {
            if (!matches(t.status, mask))
                continue;
            const std::size_t idx = ex.index(t.from, sym, mask);
            ex.declared[idx] = true;
            auto [it, inserted] = ex.cells[idx].emplace(EdgeKey{t.to, t.moves}, t.value);
            if (!inserted)
                report.add(where + "duplicates an earlier record for " +
                           describe(spec, t.from, t.symbol, mask) + " -> " + spec.states[t.to]);
        }
    }

    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t sym = 0; sym < ex.symbols.size(); ++sym)
            for (unsigned mask = 0; mask < ex.patterns; ++mask) {
                const std::size_t idx = ex.index(s, sym, mask);
                if (!ex.declared[idx]) {
                    ex.cells[idx].emplace(EdgeKey{s, std::vector<int>(k, 0)}, Rational(1));
                    continue;
                }
                Rational total;
                for (const auto &[key, value] : ex.cells[idx])
                    total += value;
                if (total != 1)
                    report.add("transitions for " + describe(spec, s, ex.symbols[sym], mask) +
                               " sum to " + total.compact_str() + ", not 1");
            }
    return ex;
}

Cell without_zeros(const Cell &c)
{
    Cell out;
    for (const auto &[key, value] : c)
        if (!value.is_zero())
            out.emplace(key, value);
    return out;
}

// First (state, symbol) whose edges depend on counter status, if any.
std::optional<std::pair<std::size_t, std::size_t>> status_dependence(const Expansion &ex, std::size_t n)
{
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t sym = 0; sym < ex.symbols.size(); ++sym) {
            const Cell first = without_zeros(ex.cells[ex.index(s, sym, 0)]);
            for (unsigned mask = 1; mask < ex.patterns; ++mask)
                if (without_zeros(ex.cells[ex.index(s, sym, mask)]) != first)
                    return std::pair{s, sym};
        }
    return std::nullopt;
}

void check_blind_mode(const AfcaSpec &spec, const Expansion &ex, ValidationReport &report)
{
    if (spec.accept_mode != AcceptMode::Blind || ex.patterns == 0)
        return;
    if (auto dep = status_dependence(ex, spec.states.size()))
        report.add("status-dependent transition from state '" + spec.states[dep->first] +
                   "' on symbol '" + std::string(1, ex.symbols[dep->second]) + "' in a blind-mode machine");
}

unsigned status_mask(const std::vector<std::int64_t> &counters)
{
    unsigned mask = 0;
    for (std::size_t i = 0; i < counters.size(); ++i)
        if (counters[i] != 0)
            mask |= 1U << i;
    return mask;
}

} // namespace

std::size_t AfcaSpec::index_of(std::string_view state) const
{
    auto it = std::find(states.begin(), states.end(), state);
    if (it == states.end())
        throw DefinitionError("unknown state '" + std::string(state) + "'");
    return static_cast<std::size_t>(it - states.begin());
}

ConfigVector ConfigVector::basis(Configuration c)
{
    ConfigVector v;
    v.terms_.emplace(std::move(c), Rational(1));
    return v;
}

void ConfigVector::add(const Configuration &c, const Rational &value)
{
    if (value.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(c, value);
    if (inserted)
        return;
    it->second += value;
    if (it->second.is_zero())
        terms_.erase(it);
}

Rational ConfigVector::coefficient(const Configuration &c) const
{
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational() : it->second;
}

Rational ConfigVector::coefficient_sum() const
{
    Rational s;
    for (const auto &[c, value] : terms_)
        s += value;
    return s;
}

Rational ConfigVector::l1_norm() const
{
    Rational s;
    for (const auto &[c, value] : terms_)
        s += abs(value);
    return s;
}

std::string to_string(const ConfigVector &v, const std::vector<std::string> &state_names)
{
    std::ostringstream os;
    for (const auto &[c, value] : v) {
        os << (c.state < state_names.size() ? state_names[c.state] : std::to_string(c.state));
        for (auto x : c.counters)
            os << ' ' << x;
        os << ' ' << value << '\n';
    }
    return os.str();
}

AfcaMachine::AfcaMachine(AfcaSpec spec) : spec_(std::move(spec))
{
    ValidationReport report;
    Expansion ex = expand(spec_, report);
    check_blind_mode(spec_, ex, report);
    if (!report.ok())
        throw DefinitionError("invalid affine counter automaton:\n" + report.str());

    symbols_ = std::move(ex.symbols);
    patterns_ = ex.patterns;
    table_.reserve(ex.cells.size());
    for (const Cell &cell : ex.cells) {
        std::vector<Edge> edges;
        for (const auto &[key, value] : cell)
            if (!value.is_zero())
                edges.push_back({key.first, key.second, value});
        table_.push_back(std::move(edges));
    }
}

const std::vector<AfcaMachine::Edge> &AfcaMachine::edges(std::size_t state, std::size_t symbol,
                                                         unsigned mask) const
{
    return table_[(state * symbols_.size() + symbol) * patterns_ + mask];
}

std::size_t AfcaMachine::symbol_index(Symbol s) const
{
    const std::size_t i = symbols_.find(s);
    if (i == std::string::npos)
        throw InputError(std::string("symbol '") + s + "' is not in the alphabet");
    return i;
}

void AfcaMachine::check_word(std::string_view word) const
{
    for (Symbol s : word)
        if (spec_.alphabet.find(s) == std::string::npos)
            throw InputError(std::string("symbol '") + s + "' is not in the alphabet");
}

ConfigVector AfcaMachine::initial_vector() const
{
    return ConfigVector::basis({spec_.initial, std::vector<std::int64_t>(spec_.counters, 0)});
}

ConfigVector AfcaMachine::step(const ConfigVector &v, Symbol symbol) const
{
    const std::size_t sym = symbol_index(symbol);
    ConfigVector out;
    Configuration target;
    for (const auto &[c, coeff] : v) {
        for (const Edge &e : edges(c.state, sym, status_mask(c.counters))) {
            target.state = e.to;
            target.counters = c.counters;
            for (std::size_t i = 0; i < target.counters.size(); ++i)
                target.counters[i] += e.moves[i];
            out.add(target, coeff * e.value);
        }
    }
    return out;
}

ConfigVector AfcaMachine::run(std::string_view word) const
{
    check_word(word);
    ConfigVector v = step(initial_vector(), kLeftMarker);
    for (Symbol s : word)
        v = step(v, s);
    return step(v, kRightMarker);
}

std::vector<ConfigVector> AfcaMachine::trace(std::string_view word) const
{
    check_word(word);
    std::vector<ConfigVector> out;
    out.reserve(word.size() + 3);
    out.push_back(initial_vector());
    out.push_back(step(out.back(), kLeftMarker));
    for (Symbol s : word)
        out.push_back(step(out.back(), s));
    out.push_back(step(out.back(), kRightMarker));
    return out;
}

Rational AfcaMachine::accept_prob(const ConfigVector &final_vector) const
{
    Rational accepted;
    for (const auto &[c, coeff] : final_vector) {
        if (!spec_.accepting.contains(c.state))
            continue;
        if (spec_.accept_mode == AcceptMode::Blind &&
            std::any_of(c.counters.begin(), c.counters.end(), [](auto x) { return x != 0; }))
            continue;
        accepted += abs(coeff);
    }
    return accepted / final_vector.l1_norm();
}

Rational AfcaMachine::accept_prob(std::string_view word) const
{
    return accept_prob(run(word));
}

namespace afca {

ConfigVector step(const AfcaSpec &spec, const ConfigVector &v, Symbol symbol)
{
    return AfcaMachine(spec).step(v, symbol);
}

ConfigVector run(const AfcaSpec &spec, std::string_view word)
{
    return AfcaMachine(spec).run(word);
}

Rational accept_prob(const AfcaSpec &spec, std::string_view word)
{
    return AfcaMachine(spec).accept_prob(word);
}

bool is_blind(const AfcaSpec &spec)
{
    ValidationReport ignored;
    Expansion ex = expand(spec, ignored);
    if (ex.patterns == 0)
        return false;
    return !status_dependence(ex, spec.states.size()).has_value();
}

bool counter_bound_check(const AfcaSpec &spec, std::string_view word)
{
    const auto m = static_cast<std::int64_t>(word.size() + 2);
    for (const ConfigVector &v : AfcaMachine(spec).trace(word))
        for (const auto &[c, coeff] : v)
            for (auto x : c.counters)
                if (x < -m || x > m)
                    return false;
    return true;
}

ValidationReport validate(const AfcaSpec &spec)
{
    ValidationReport report;
    Expansion ex = expand(spec, report);
    check_blind_mode(spec, ex, report);
    return report;
}

std::string status_string(unsigned mask, std::size_t counters)
{
    std::string s;
    for (std::size_t i = 0; i < counters; ++i)
        s += ((mask >> i) & 1U) ? 'N' : 'Z';
    return s;
}

} // namespace afca

} // namespace affine
