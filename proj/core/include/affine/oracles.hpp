#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Brute-force deciders for the zoo languages, transcribed directly from
// their definitions. Nothing here shares code with the simulator.
namespace affine::oracles {

enum class PromiseLabel { Yes, No, Unpromised };

const char *to_string(PromiseLabel label) noexcept;

/// w has at least one 2, and the (#2)-th symbol of w reversed (1-based) is 1.
/// Throws InputError outside {0,1,2}.
bool in_end(std::string_view w);

/// Palindrome over {1,2}. Throws InputError outside {1,2}.
bool in_pal(std::string_view w);

/// YES for x0y with x a palindrome and y not; NO for the mirror case;
/// UNPROMISED for everything else, including symbols outside {0,1,2}.
PromiseLabel classify_pal_npal(std::string_view w);

/// w = w_1 0 … 0 w_t 3 w_t 0 … 0 w_1 with every w_i ∈ {1,2}*.
/// Throws std::invalid_argument for t < 1.
bool in_twin_t(std::string_view w, std::int64_t t);

/// Member of TWIN(t) for some t ≥ 1.
bool in_manytwins(std::string_view w);

/*
 * All words over `alphabet` of length at most `max_length`, shortest first
 * and lexicographic (in alphabet order) within a length. A fresh enumerator
 * restarts from the empty word.
 */
class WordEnumerator {
public:
    WordEnumerator(std::string alphabet, std::size_t max_length);

    /// Stores the next word in `word`; false once exhausted.
    bool next(std::string &word);

    /// Σ_{i ≤ max_length} |alphabet|^i.
    std::uint64_t total() const;

private:
    std::string alphabet_;
    std::size_t max_length_;
    std::vector<std::size_t> digits_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<std::string> enumerate_words(const std::string &alphabet, std::size_t max_length);

} // namespace affine::oracles
