#pragma once

#include "affine/afa.hpp"
#include "affine/machine_file.hpp"
#include "affine/oracles.hpp"
#include "affine/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace affine {

inline constexpr std::uint64_t kSweepWordLimit = 1'000'000;

struct SweepOptions {
    /// end | pal | pal-npal | manytwins | twin-t:<t>
    std::string oracle;
    /// Enumeration alphabet; empty means the machine's alphabet.
    std::string alphabet;
    std::size_t max_length = 0;
    /// Error parameter the claim is checked against (bound 1/(2k+1)).
    std::int64_t k = 1;
    /// Allows more than kSweepWordLimit words.
    bool force = false;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

enum class Verdict { Pass, Fail, Info };

const char *to_string(Verdict v) noexcept;

struct SweepRow {
    std::string word;
    oracles::PromiseLabel label = oracles::PromiseLabel::Unpromised;
    OutcomeTriple outcome;
    Verdict verdict = Verdict::Info;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::size_t yes = 0;
    std::size_t no = 0;
    std::size_t unpromised = 0;
    std::size_t failures = 0;
    /// Largest 1 − P(correct answer) over promised rows.
    Rational max_error;

    /// Header row, one row per word in enumeration order, then a `#` footer.
    std::string tsv() const;
};

/// Per-word outcome: (p, 1 − p, 0) for plain machines, the partition
/// weights for Las Vegas machines, and the single round for restart ones.
class OutcomeEvaluator {
public:
    explicit OutcomeEvaluator(const Machine &machine);
    OutcomeTriple operator()(std::string_view word) const;
    const std::string &alphabet() const noexcept;

private:
    Machine machine_;
    std::optional<AfcaMachine> compiled_;
};

/// Throws std::invalid_argument for an unknown oracle, an alphabet that the
/// machine or oracle cannot read, or too many words without `force`.
SweepReport sweep(const Machine &machine, const SweepOptions &options);

} // namespace affine
