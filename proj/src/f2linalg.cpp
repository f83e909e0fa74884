#include "isoext/f2linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace isoext {

bool F2Vector::contains(int i) const
{
    return std::binary_search(support.begin(), support.end(), i);
}

F2Vector& F2Vector::operator^=(const F2Vector& o)
{
    std::vector<int> out;
    out.reserve(support.size() + o.support.size());
    size_t i = 0, j = 0;
    while (i < support.size() && j < o.support.size()) {
        if (support[i] < o.support[j])
            out.push_back(support[i++]);
        else if (support[i] > o.support[j])
            out.push_back(o.support[j++]);
        else {
            ++i;  // x + x = 0
            ++j;
        }
    }
    out.insert(out.end(), support.begin() + i, support.end());
    out.insert(out.end(), o.support.begin() + j, o.support.end());
    support = std::move(out);
    return *this;
}

bool F2Vector::dot(const F2Vector& o) const
{
    size_t i = 0, j = 0;
    bool parity = false;
    while (i < support.size() && j < o.support.size()) {
        if (support[i] < o.support[j])
            ++i;
        else if (support[i] > o.support[j])
            ++j;
        else {
            parity = !parity;
            ++i;
            ++j;
        }
    }
    return parity;
}

F2Matrix F2Matrix::identity(int n)
{
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.row[i] = F2Vector::unit(i);
    return m;
}

F2Vector F2Matrix::apply(const F2Vector& x) const
{
    F2Vector y;
    for (int i = 0; i < rows; ++i)
        if (row[i].dot(x))
            y.support.push_back(i);
    return y;
}

void F2Matrix::stack(const F2Matrix& o)
{
    row.insert(row.end(), o.row.begin(), o.row.end());
    rows += o.rows;
}

double F2Matrix::fill_ratio() const
{
    if (rows == 0 || cols == 0)
        return 0.0;
    size_t nnz = 0;
    for (const auto& r : row)
        nnz += r.support.size();
    return static_cast<double>(nnz) / (static_cast<double>(rows) * cols);
}

namespace {

    // Bit-packed rows for the dense elimination path.
    struct BitMat
    {
        int rows, cols, words;
        std::vector<uint64_t> a;

        BitMat(int r, int c) : rows(r), cols(c), words((c + 63) / 64), a(static_cast<size_t>(r) * words, 0) {}

        uint64_t* rowp(int i)
        {
            return a.data() + static_cast<size_t>(i) * words;
        }
        bool get(int i, int j) const
        {
            return (a[static_cast<size_t>(i) * words + j / 64] >> (j % 64)) & 1u;
        }
        void set(int i, int j)
        {
            a[static_cast<size_t>(i) * words + j / 64] |= uint64_t(1) << (j % 64);
        }
        void xor_rows(int dst, int src)
        {
            uint64_t* d = rowp(dst);
            uint64_t* s = rowp(src);
            for (int w = 0; w < words; ++w)
                d[w] ^= s[w];
        }
        void swap_rows(int i, int j)
        {
            if (i == j)
                return;
            uint64_t* x = rowp(i);
            uint64_t* y = rowp(j);
            for (int w = 0; w < words; ++w)
                std::swap(x[w], y[w]);
        }
    };

    RrefResult rref_dense(const F2Matrix& m)
    {
        BitMat b(m.rows, m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j : m.row[i].support)
                b.set(i, j);

        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < m.cols && r < m.rows; ++c) {
            int pivot = -1;
            for (int i = r; i < m.rows; ++i)
                if (b.get(i, c)) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                continue;
            b.swap_rows(r, pivot);
            for (int i = 0; i < m.rows; ++i)
                if (i != r && b.get(i, c))
                    b.xor_rows(i, r);
            pivots.push_back(c);
            ++r;
        }

        F2Matrix out(r, m.cols);
        for (int i = 0; i < r; ++i) {
            const uint64_t* w = b.rowp(i);
            for (int j = 0; j < m.cols; ++j)
                if ((w[j / 64] >> (j % 64)) & 1u)
                    out.row[i].support.push_back(j);
        }
        return {std::move(out), std::move(pivots)};
    }

    RrefResult rref_sparse(const F2Matrix& m)
    {
        RowSpace space(m.cols);
        for (const auto& r : m.row)
            space.insert(r);
        F2Matrix out(space.rank(), m.cols, space.rows());
        std::vector<int> pivots;
        pivots.reserve(out.rows);
        for (const auto& r : out.row)
            pivots.push_back(r.leading());
        return {std::move(out), std::move(pivots)};
    }

}  // namespace

RrefResult rref(const F2Matrix& m, RrefOptions opt)
{
    if (m.rows == 0 || m.cols == 0)
        return {F2Matrix(0, m.cols), {}};
    if (m.fill_ratio() > opt.dense_threshold)
        return rref_dense(m);
    return rref_sparse(m);
}

int rank(const F2Matrix& m, RrefOptions opt)
{
    return static_cast<int>(rref(m, opt).pivots.size());
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m, RrefOptions opt)
{
    if (m.cols == 0)
        return {};
    auto [r, pivots] = rref(m, opt);

    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots)
        is_pivot[p] = true;

    // One kernel vector per free column, then re-echelon for canonical output.
    RowSpace canon(m.cols);
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f])
            continue;
        F2Vector v;
        for (size_t i = 0; i < pivots.size(); ++i)
            if (r.row[i].contains(f))
                v.support.push_back(pivots[i]);
        v ^= F2Vector::unit(f);
        canon.insert(std::move(v));
    }
    return canon.rows();
}

std::optional<F2Vector> preimage(const F2Matrix& m, const F2Vector& v, RrefOptions opt)
{
    // Eliminate on [m | v]; the augmented column is index m.cols.
    F2Matrix aug(m.rows, m.cols + 1, m.row);
    for (int i : v.support) {
        if (i >= m.rows)
            return std::nullopt;  // support outside the codomain
        aug.row[i].support.push_back(m.cols);
    }
    auto [r, pivots] = rref(aug, opt);
    if (!pivots.empty() && pivots.back() == m.cols)
        return std::nullopt;

    F2Vector x;
    for (size_t i = 0; i < pivots.size(); ++i)
        if (r.row[i].contains(m.cols))
            x.support.push_back(pivots[i]);
    return x;
}

F2Vector RowSpace::reduce(F2Vector v) const
{
    // Ascending-leading pass; xor with a row never touches indices below
    // that row's leading, so one pass fully reduces.
    for (const auto& r : rows_) {
        if (v.empty())
            break;
        if (v.contains(r.leading()))
            v ^= r;
    }
    return v;
}

bool RowSpace::insert(F2Vector v)
{
    v = reduce(v);
    if (v.empty())
        return false;
    for (auto& r : rows_)
        if (r.contains(v.leading()))
            r ^= v;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), v, [](const F2Vector& a, const F2Vector& b) { return a.leading() < b.leading(); });
    rows_.insert(it, std::move(v));
    return true;
}

}  // namespace isoext
