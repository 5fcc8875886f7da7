#include "arsys/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace arsys {

IntVector vec_add(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vec_add: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVector vec_scaled_add(const IntVector& a, Int k, const IntVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vec_scaled_add: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked_add(a[i], checked_mul(k, b[i]));
    return r;
}

IntVector vec_neg(const IntVector& a)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked_neg(a[i]);
    return r;
}

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix a(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 1;
    return a;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    std::size_t n = a.size();
    std::size_t k = b.size();
    if (k == 0 || a.empty() || a[0].size() != k)
        throw std::invalid_argument("mat_mul: dimension mismatch");
    std::size_t m = b[0].size();
    IntMatrix r(n, IntVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] = checked_add(r[i][j], checked_mul(a[i][l], b[l][j]));
        }
    return r;
}

bool mat_is_identity(const IntMatrix& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0))
                return false;
    return true;
}

Int determinant(IntMatrix a)
{
    std::size_t n = a.size();
    if (n == 0)
        return 1;
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a[i][j], a[k][k]),
                                      checked_mul(a[i][k], a[k][j]));
                a[i][j] = num / prev; // exact by Bareiss
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return checked_mul(sign, a[n - 1][n - 1]);
}

namespace {

Int minor_det(const IntMatrix& a, std::size_t skip_row, std::size_t skip_col)
{
    std::size_t n = a.size();
    IntMatrix m;
    m.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == skip_row)
            continue;
        IntVector row;
        row.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != skip_col)
                row.push_back(a[i][j]);
        m.push_back(std::move(row));
    }
    return determinant(std::move(m));
}

} // namespace

IntMatrix unimodular_inverse(const IntMatrix& a)
{
    std::size_t n = a.size();
    Int det = determinant(a);
    if (det != 1 && det != -1)
        throw std::invalid_argument("unimodular_inverse: determinant not +-1");
    if (n == 1)
        return {{det}};
    IntMatrix inv(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int cof = minor_det(a, j, i);
            if ((i + j) % 2 != 0)
                cof = checked_neg(cof);
            inv[i][j] = checked_mul(cof, det); // divide by det = multiply, det is +-1
        }
    return inv;
}

std::size_t matrix_rank(IntMatrix a)
{
    if (a.empty())
        return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[rank], a[p]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0)
                continue;
            Int pv = a[rank][col];
            Int cv = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = checked_sub(checked_mul(a[i][j], pv), checked_mul(a[rank][j], cv));
        }
        ++rank;
    }
    return rank;
}

OrderedBasis::OrderedBasis(std::vector<IntVector> vectors)
    : vectors_(std::move(vectors))
{
    std::size_t n = vectors_.size();
    if (n == 0)
        throw std::invalid_argument("OrderedBasis: empty");
    for (const auto& v : vectors_)
        if (v.size() != n)
            throw std::invalid_argument("OrderedBasis: vector length != rank");
    Int det = determinant(column_matrix());
    if (det != 1 && det != -1)
        throw std::invalid_argument("OrderedBasis: not a Z-basis (determinant not +-1)");
}

OrderedBasis OrderedBasis::standard(std::size_t n)
{
    std::vector<IntVector> vs(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        vs[i][i] = 1;
    return OrderedBasis(std::move(vs));
}

IntMatrix OrderedBasis::column_matrix() const
{
    std::size_t n = vectors_.size();
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = vectors_[j][i];
    return m;
}

std::vector<Int> OrderedBasis::key() const
{
    std::vector<Int> k;
    k.reserve(vectors_.size() * vectors_.size());
    for (const auto& v : vectors_)
        k.insert(k.end(), v.begin(), v.end());
    return k;
}

OrderedBasis OrderedBasis::transposed() const
{
    if (vectors_.size() != 2)
        throw std::logic_error("OrderedBasis::transposed: rank 2 only");
    return OrderedBasis({vectors_[1], vectors_[0]});
}

} // namespace arsys
