#include "affine/linalg.hpp"

#include <stdexcept>
#include <string>

namespace affine {

namespace {

Rational sum(std::span<const Rational> xs)
{
    Rational s;
    for (const auto &x : xs)
        s += x;
    return s;
}

} // namespace

AffineVector::AffineVector(std::vector<Rational> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw DefinitionError("affine vector must have positive dimension");
    if (Rational s = sum(entries_); s != 1)
        throw DefinitionError("affine vector entries sum to " + s.str() + ", not 1");
}

AffineVector AffineVector::unit(std::size_t dimension, std::size_t index)
{
    if (index >= dimension)
        throw std::out_of_range("unit vector index out of range");
    std::vector<Rational> e(dimension);
    e[index] = 1;
    return AffineVector(std::move(e));
}

AffineMatrix::AffineMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    std::vector<std::vector<Rational>> r;
    for (const auto &row : rows)
        r.emplace_back(row);
    *this = from_rows(r);
}

AffineMatrix AffineMatrix::from_rows(const std::vector<std::vector<Rational>> &rows)
{
    if (rows.empty())
        throw DefinitionError("matrix must have positive dimension");
    AffineMatrix m;
    m.n_ = rows.size();
    m.cells_.reserve(m.n_ * m.n_);
    for (const auto &row : rows) {
        if (row.size() != m.n_)
            throw DefinitionError("matrix is not square: row of length " + std::to_string(row.size()) +
                                  " in a " + std::to_string(m.n_) + "-row matrix");
        m.cells_.insert(m.cells_.end(), row.begin(), row.end());
    }
    return m;
}

AffineMatrix AffineMatrix::identity(std::size_t dimension)
{
    std::vector<std::vector<Rational>> rows(dimension, std::vector<Rational>(dimension));
    for (std::size_t i = 0; i < dimension; ++i)
        rows[i][i] = 1;
    return from_rows(rows);
}

Rational AffineMatrix::column_sum(std::size_t col) const
{
    Rational s;
    for (std::size_t r = 0; r < n_; ++r)
        s += at(r, col);
    return s;
}

std::vector<std::vector<Rational>> AffineMatrix::rows() const
{
    std::vector<std::vector<Rational>> out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        out[r].assign(cells_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                      cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
    return out;
}

AffineMatrix operator*(const AffineMatrix &a, const AffineMatrix &b)
{
    if (a.n_ != b.n_)
        throw DefinitionError("matrix product dimension mismatch");
    std::vector<std::vector<Rational>> rows(a.n_, std::vector<Rational>(a.n_));
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < a.n_; ++j)
                rows[i][j] += a.at(i, k) * b.at(k, j);
        }
    return AffineMatrix::from_rows(rows);
}

AffineVector apply(const AffineMatrix &m, const AffineVector &v)
{
    const std::size_t n = m.dimension();
    if (n != v.dimension())
        throw DefinitionError("cannot apply a " + std::to_string(n) + "x" + std::to_string(n) +
                              " matrix to a vector of dimension " + std::to_string(v.dimension()));
    std::vector<Rational> out(n);
    for (std::size_t col = 0; col < n; ++col) {
        const Rational &x = v[col];
        if (x.is_zero())
            continue;
        for (std::size_t row = 0; row < n; ++row)
            if (!m.at(row, col).is_zero())
                out[row] += m.at(row, col) * x;
    }
    return AffineVector(std::move(out));
}

Rational l1_norm(const AffineVector &v)
{
    Rational s;
    for (const auto &x : v.entries())
        s += abs(x);
    return s;
}

Rational weigh(const AffineVector &v, const StateSet &indices)
{
    Rational w;
    for (std::size_t i : indices) {
        if (i >= v.dimension())
            throw std::out_of_range("state index " + std::to_string(i) + " out of range");
        w += abs(v[i]);
    }
    return w / l1_norm(v);
}

ValidationReport validate_matrix(const AffineMatrix &m)
{
    ValidationReport report;
    if (m.dimension() == 0)
        report.add("matrix has dimension 0");
    for (std::size_t col = 0; col < m.dimension(); ++col)
        if (Rational s = m.column_sum(col); s != 1)
            report.add("column " + std::to_string(col + 1) + " sums to " + s.compact_str());
    return report;
}

} // namespace affine
