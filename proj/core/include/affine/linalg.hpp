#pragma once

#include "affine/errors.hpp"
#include "affine/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace affine {

using StateSet = std::set<std::size_t>;

/// Exact vector whose entries sum to 1. Entries may be negative.
class AffineVector {
public:
    /// Throws DefinitionError if `entries` is empty or does not sum to 1.
    explicit AffineVector(std::vector<Rational> entries);

    static AffineVector unit(std::size_t dimension, std::size_t index);

    std::size_t dimension() const noexcept { return entries_.size(); }
    const Rational &operator[](std::size_t i) const { return entries_.at(i); }
    std::span<const Rational> entries() const noexcept { return entries_; }

    friend bool operator==(const AffineVector &, const AffineVector &) = default;

private:
    std::vector<Rational> entries_;
};

/*
 * Square exact matrix, stored row-major. Column sums are not enforced at
 * construction: validate_matrix() reports offending columns, and apply()
 * refuses to produce a vector that is not affine.
 */
class AffineMatrix {
public:
    AffineMatrix() = default;

    /// Rows as printed, i.e. rows.begin() is the first row.
    AffineMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    /// Throws DefinitionError unless `rows` is non-empty and square.
    static AffineMatrix from_rows(const std::vector<std::vector<Rational>> &rows);
    static AffineMatrix identity(std::size_t dimension);

    std::size_t dimension() const noexcept { return n_; }
    const Rational &at(std::size_t row, std::size_t col) const { return cells_.at(row * n_ + col); }
    Rational column_sum(std::size_t col) const;
    std::vector<std::vector<Rational>> rows() const;

    friend AffineMatrix operator*(const AffineMatrix &a, const AffineMatrix &b);
    friend bool operator==(const AffineMatrix &, const AffineMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> cells_;
};

/// Exact product m·v. Throws DefinitionError on dimension mismatch or if the
/// result is not affine (possible only when m has a bad column).
AffineVector apply(const AffineMatrix &m, const AffineVector &v);

/// Σ|v[i]|. At least 1 for every affine vector.
Rational l1_norm(const AffineVector &v);

/// Weighting operator: Σ_{i ∈ indices} |v[i]| / ‖v‖₁.
/// Throws std::out_of_range for an index ≥ v.dimension().
Rational weigh(const AffineVector &v, const StateSet &indices);

/// Passes iff every column sums to exactly 1.
ValidationReport validate_matrix(const AffineMatrix &m);

} // namespace affine
