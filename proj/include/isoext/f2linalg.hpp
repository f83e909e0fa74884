#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace isoext {

/// Vector over GF(2), stored as the strictly increasing list of indices
/// with coefficient 1. Addition is symmetric difference.
struct F2Vector
{
    std::vector<int> support;

    F2Vector() = default;
    explicit F2Vector(std::vector<int> s) : support(std::move(s)) {}

    static F2Vector unit(int i)
    {
        return F2Vector{{i}};
    }

    bool empty() const
    {
        return support.empty();
    }
    size_t weight() const
    {
        return support.size();
    }
    /// Smallest support index, or -1 when zero.
    int leading() const
    {
        return support.empty() ? -1 : support.front();
    }
    bool contains(int i) const;

    F2Vector& operator^=(const F2Vector& o);
    friend F2Vector operator^(F2Vector a, const F2Vector& b)
    {
        a ^= b;
        return a;
    }

    /// Parity of the intersection of supports.
    bool dot(const F2Vector& o) const;

    bool operator==(const F2Vector&) const = default;
    bool operator<(const F2Vector& o) const
    {
        return support < o.support;
    }
};

struct RrefOptions
{
    /// Switch to a bit-packed elimination above this fill ratio.
    double dense_threshold = 0.125;
};

/// Matrix over GF(2) with sparse rows; every support index < cols.
struct F2Matrix
{
    int rows = 0;
    int cols = 0;
    std::vector<F2Vector> row;

    F2Matrix() = default;
    F2Matrix(int r, int c) : rows(r), cols(c), row(r) {}
    F2Matrix(int r, int c, std::vector<F2Vector> rs) : rows(r), cols(c), row(std::move(rs)) {}

    static F2Matrix identity(int n);

    bool get(int i, int j) const
    {
        return row[i].contains(j);
    }

    /// y = m x with y_i = <row_i, x>.
    F2Vector apply(const F2Vector& x) const;

    /// Append the rows of o (same number of columns).
    void stack(const F2Matrix& o);

    double fill_ratio() const;

    bool operator==(const F2Matrix&) const = default;
};

struct RrefResult
{
    F2Matrix mat;             // reduced row-echelon form, zero rows dropped
    std::vector<int> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const F2Matrix& m, RrefOptions opt = {});

int rank(const F2Matrix& m, RrefOptions opt = {});

/// Canonical basis of { x : m x = 0 }, the reduced echelon basis of the
/// kernel subspace; rows have strictly increasing leading indices.
std::vector<F2Vector> kernel_basis(const F2Matrix& m, RrefOptions opt = {});

/// Canonical solution of m x = v (free variables set to zero), or absent
/// when v is not in the column space.
std::optional<F2Vector> preimage(const F2Matrix& m, const F2Vector& v, RrefOptions opt = {});

/// Incremental row space with reduction, for image/membership bookkeeping.
class RowSpace
{
public:
    explicit RowSpace(int cols) : cols_(cols) {}

    /// Reduce v against the current basis; returns the residue.
    F2Vector reduce(F2Vector v) const;

    /// Insert v if independent; returns true when the rank grew.
    bool insert(F2Vector v);

    bool member(const F2Vector& v) const
    {
        return reduce(v).empty();
    }
    int rank() const
    {
        return static_cast<int>(rows_.size());
    }
    int cols() const
    {
        return cols_;
    }
    const std::vector<F2Vector>& rows() const
    {
        return rows_;
    }

private:
    int cols_;
    std::vector<F2Vector> rows_;  // echelon: strictly increasing leading indices
};

}  // namespace isoext
