#include "affine/oracles.hpp"
#include "affine/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace affine::oracles {

namespace {

void require_symbols(std::string_view w, std::string_view allowed, const char *what)
{
    for (char c : w)
        if (allowed.find(c) == std::string_view::npos)
            throw InputError(std::string(what) + ": unexpected symbol '" + c + "'");
}

bool only_symbols(std::string_view w, std::string_view allowed)
{
    return std::all_of(w.begin(), w.end(), [&](char c) { return allowed.find(c) != std::string_view::npos; });
}

std::vector<std::string> split_on(std::string_view w, char sep)
{
    std::vector<std::string> parts(1);
    for (char c : w) {
        if (c == sep)
            parts.emplace_back();
        else
            parts.back() += c;
    }
    return parts;
}

} // namespace

const char *to_string(PromiseLabel label) noexcept
{
    switch (label) {
    case PromiseLabel::Yes:
        return "YES";
    case PromiseLabel::No:
        return "NO";
    case PromiseLabel::Unpromised:
        return "UNPROMISED";
    }
    return "?";
}

bool in_end(std::string_view w)
{
    require_symbols(w, "012", "END");
    const auto twos = static_cast<std::size_t>(std::count(w.begin(), w.end(), '2'));
    if (twos == 0)
        return false;
    const std::string reversed(w.rbegin(), w.rend());
    return reversed[twos - 1] == '1';
}

bool in_pal(std::string_view w)
{
    require_symbols(w, "12", "PAL");
    return std::equal(w.begin(), w.end(), w.rbegin());
}

PromiseLabel classify_pal_npal(std::string_view w)
{
    if (!only_symbols(w, "012") || std::count(w.begin(), w.end(), '0') != 1)
        return PromiseLabel::Unpromised;
    const auto zero = w.find('0');
    const bool x_pal = in_pal(w.substr(0, zero));
    const bool y_pal = in_pal(w.substr(zero + 1));
    if (x_pal && !y_pal)
        return PromiseLabel::Yes;
    if (!x_pal && y_pal)
        return PromiseLabel::No;
    return PromiseLabel::Unpromised;
}

bool in_twin_t(std::string_view w, std::int64_t t)
{
    if (t < 1)
        throw std::invalid_argument("TWIN(t) needs t >= 1");
    if (!only_symbols(w, "0123") || std::count(w.begin(), w.end(), '3') != 1)
        return false;
    const auto three = w.find('3');
    const auto left = split_on(w.substr(0, three), '0');
    const auto right = split_on(w.substr(three + 1), '0');
    const auto blocks = static_cast<std::size_t>(t);
    if (left.size() != blocks || right.size() != blocks)
        return false;
    for (std::size_t i = 0; i < blocks; ++i)
        if (right[i] != left[blocks - 1 - i])
            return false;
    return true;
}

bool in_manytwins(std::string_view w)
{
    const auto bound = static_cast<std::int64_t>((w.size() + 2) / 2); // ⌈(|w|+1)/2⌉
    for (std::int64_t t = 1; t <= bound; ++t)
        if (in_twin_t(w, t))
            return true;
    return false;
}

WordEnumerator::WordEnumerator(std::string alphabet, std::size_t max_length)
    : alphabet_(std::move(alphabet)), max_length_(max_length)
{
}

bool WordEnumerator::next(std::string &word)
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        word.clear();
        return true;
    }
    if (alphabet_.empty()) {
        done_ = true;
        return false;
    }
    // Odometer increment; a carry out of the top digit means the next length.
    bool carry = true;
    for (auto it = digits_.rbegin(); carry && it != digits_.rend(); ++it) {
        if (++*it < alphabet_.size())
            carry = false;
        else
            *it = 0;
    }
    if (carry) {
        if (digits_.size() == max_length_) {
            done_ = true;
            return false;
        }
        digits_.assign(digits_.size() + 1, 0);
    }
    word.resize(digits_.size());
    for (std::size_t j = 0; j < digits_.size(); ++j)
        word[j] = alphabet_[digits_[j]];
    return true;
}

std::uint64_t WordEnumerator::total() const
{
    // Saturates at UINT64_MAX.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t sum = 0;
    std::uint64_t power = 1;
    for (std::size_t len = 0; len <= max_length_; ++len) {
        if (sum > kMax - power)
            return kMax;
        sum += power;
        if (alphabet_.empty() || len == max_length_)
            break;
        if (power > kMax / alphabet_.size())
            return kMax;
        power *= alphabet_.size();
    }
    return sum;
}

std::vector<std::string> enumerate_words(const std::string &alphabet, std::size_t max_length)
{
    std::vector<std::string> out;
    WordEnumerator e(alphabet, max_length);
    std::string w;
    while (e.next(w))
        out.push_back(w);
    return out;
}

} // namespace affine::oracles
