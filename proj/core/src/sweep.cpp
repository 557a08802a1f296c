#include "affine/sweep.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace affine {

namespace {

using oracles::PromiseLabel;

enum class ClaimRule {
    Exact,     // YES accepted with 1, NO with 0
    OneSided,  // YES accepted with 1, NO with at most 1/(2k+1)
    LasVegas,  // correct answer with at least 2k/(2k+1), wrong answer never
};

struct Oracle {
    std::string symbols;
    ClaimRule rule;
    std::function<PromiseLabel(std::string_view)> label;
};

PromiseLabel from_bool(bool member)
{
    return member ? PromiseLabel::Yes : PromiseLabel::No;
}

Oracle make_oracle(const std::string &name)
{
    if (name == "end")
        return {"012", ClaimRule::Exact, [](std::string_view w) { return from_bool(oracles::in_end(w)); }};
    if (name == "pal")
        return {"12", ClaimRule::OneSided, [](std::string_view w) { return from_bool(oracles::in_pal(w)); }};
    if (name == "pal-npal")
        return {"012", ClaimRule::LasVegas, [](std::string_view w) { return oracles::classify_pal_npal(w); }};
    if (name == "manytwins")
        return {"0123", ClaimRule::OneSided,
                [](std::string_view w) { return from_bool(oracles::in_manytwins(w)); }};
    if (name.starts_with("twin-t:")) {
        const std::string digits = name.substr(7);
        if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos ||
            std::stoll(digits) < 1)
            throw std::invalid_argument("twin-t needs a positive integer, e.g. twin-t:2");
        const std::int64_t t = std::stoll(digits);
        return {"0123", ClaimRule::OneSided,
                [t](std::string_view w) { return from_bool(oracles::in_twin_t(w, t)); }};
    }
    throw std::invalid_argument("unknown oracle '" + name + "' (expected end, pal, pal-npal, manytwins or twin-t:<t>)");
}

// Returns the verdict and the probability of not giving the correct answer.
std::pair<Verdict, Rational> judge(ClaimRule rule, PromiseLabel label, const OutcomeTriple &o, std::int64_t k)
{
    if (label == PromiseLabel::Unpromised)
        return {Verdict::Info, Rational()};
    const bool yes = label == PromiseLabel::Yes;
    const Rational two_k(2 * k);
    const Rational error_bound = Rational(1) / (two_k + 1);
    bool ok = false;
    Rational error;
    switch (rule) {
    case ClaimRule::Exact:
        error = yes ? 1 - o.p_accept : o.p_accept;
        ok = error.is_zero();
        break;
    case ClaimRule::OneSided:
        error = yes ? 1 - o.p_accept : o.p_accept;
        ok = yes ? error.is_zero() : error <= error_bound;
        break;
    case ClaimRule::LasVegas: {
        const Rational &right = yes ? o.p_accept : o.p_reject;
        const Rational &wrong = yes ? o.p_reject : o.p_accept;
        error = 1 - right;
        ok = wrong.is_zero() && right >= two_k / (two_k + 1);
        break;
    }
    }
    return {ok ? Verdict::Pass : Verdict::Fail, error};
}

// Rows are split into contiguous chunks; each chunk is at least 64 words.
unsigned threads_for(const SweepOptions &options, std::size_t rows)
{
    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, rows / 64)));
}

} // namespace

const char *to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Pass:
        return "pass";
    case Verdict::Fail:
        return "fail";
    case Verdict::Info:
        break;
    }
    return "info";
}

OutcomeEvaluator::OutcomeEvaluator(const Machine &machine) : machine_(machine)
{
    if (const auto *spec = std::get_if<AfcaSpec>(&machine_))
        compiled_.emplace(*spec);
}

const std::string &OutcomeEvaluator::alphabet() const noexcept
{
    return std::visit(
        [](const auto &spec) -> const std::string & {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, AfaSpec> || std::is_same_v<T, AfcaSpec>)
                return spec.alphabet;
            else
                return spec.base.alphabet;
        },
        machine_);
}

OutcomeTriple OutcomeEvaluator::operator()(std::string_view word) const
{
    return std::visit(
        [&](const auto &spec) -> OutcomeTriple {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, AfcaSpec>) {
                Rational p = compiled_->accept_prob(word);
                return {p, 1 - p, 0};
            } else if constexpr (std::is_same_v<T, AfaSpec>) {
                Rational p = afa::accept_prob(spec, word);
                return {p, 1 - p, 0};
            } else if constexpr (std::is_same_v<T, LasVegasAfaSpec>) {
                return afa::lasvegas_outcome(spec, word);
            } else {
                return afa::round_outcome(spec, word);
            }
        },
        machine_);
}

SweepReport sweep(const Machine &machine, const SweepOptions &options)
{
    const Oracle oracle = make_oracle(options.oracle);
    if (options.k < 1)
        throw std::invalid_argument("k must be at least 1");
    const OutcomeEvaluator evaluate(machine);
    const std::string alphabet = options.alphabet.empty() ? evaluate.alphabet() : options.alphabet;
    for (char c : alphabet) {
        if (evaluate.alphabet().find(c) == std::string::npos)
            throw std::invalid_argument(std::string("symbol '") + c + "' is not in the machine's alphabet");
        if (oracle.symbols.find(c) == std::string::npos)
            throw std::invalid_argument(std::string("symbol '") + c + "' is outside the oracle's alphabet {" +
                                        oracle.symbols + "}");
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet.find(alphabet[i]) != i)
            throw std::invalid_argument(std::string("symbol '") + alphabet[i] + "' listed twice");

    oracles::WordEnumerator enumerator(alphabet, options.max_length);
    if (!options.force && enumerator.total() > kSweepWordLimit)
        throw std::invalid_argument("sweep would enumerate " + std::to_string(enumerator.total()) +
                                    " words, more than " + std::to_string(kSweepWordLimit) +
                                    "; pass --force to allow it");

    SweepReport report;
    std::string word;
    while (enumerator.next(word))
        report.rows.push_back({word, PromiseLabel::Unpromised, {}, Verdict::Info});

    std::vector<Rational> errors(report.rows.size());
    std::vector<std::exception_ptr> failures(threads_for(options, report.rows.size()));
    auto work = [&](unsigned slot, std::size_t begin, std::size_t end) {
        try {
            for (std::size_t i = begin; i < end; ++i) {
                SweepRow &row = report.rows[i];
                row.label = oracle.label(row.word);
                row.outcome = evaluate(row.word);
                std::tie(row.verdict, errors[i]) = judge(oracle.rule, row.label, row.outcome, options.k);
            }
        } catch (...) {
            failures[slot] = std::current_exception();
        }
    };

    const auto threads = static_cast<unsigned>(failures.size());
    if (threads == 1) {
        work(0, 0, report.rows.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (report.rows.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(report.rows.size(), t * chunk);
            const std::size_t end = std::min(report.rows.size(), begin + chunk);
            pool.emplace_back(work, t, begin, end);
        }
    }
    for (const auto &e : failures)
        if (e)
            std::rethrow_exception(e);

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const SweepRow &row = report.rows[i];
        switch (row.label) {
        case PromiseLabel::Yes:
            ++report.yes;
            break;
        case PromiseLabel::No:
            ++report.no;
            break;
        case PromiseLabel::Unpromised:
            ++report.unpromised;
            break;
        }
        if (row.verdict == Verdict::Fail)
            ++report.failures;
        if (row.label != PromiseLabel::Unpromised && errors[i] > report.max_error)
            report.max_error = errors[i];
    }
    return report;
}

std::string SweepReport::tsv() const
{
    std::ostringstream os;
    os << "word\toracle\tp_accept\tp_reject\tp_neutral\tverdict\n";
    for (const SweepRow &row : rows)
        os << row.word << '\t' << oracles::to_string(row.label) << '\t' << row.outcome.p_accept.str() << '\t'
           << row.outcome.p_reject.str() << '\t' << row.outcome.p_neutral.str() << '\t' << to_string(row.verdict)
           << '\n';
    os << "# words " << rows.size() << '\n';
    os << "# yes " << yes << '\n';
    os << "# no " << no << '\n';
    os << "# unpromised " << unpromised << '\n';
    os << "# failures " << failures << '\n';
    os << "# max_error " << max_error.str() << '\n';
    return os.str();
}

} // namespace affine
