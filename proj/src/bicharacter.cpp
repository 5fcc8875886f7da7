#include "arsys/bicharacter.hpp"

#include <algorithm>
#include <stdexcept>

namespace arsys {

BraidingMatrix::BraidingMatrix(std::size_t rank, std::vector<GroupValue> entries)
    : rank_(rank), entries_(std::move(entries))
{
    if (rank_ == 0)
        throw std::invalid_argument("BraidingMatrix: rank must be >= 1");
    if (entries_.size() != rank_ * rank_)
        throw std::invalid_argument("BraidingMatrix: entry count != rank^2");
    for (const auto& e : entries_)
        if (e.free_rank() != entries_.front().free_rank() ||
            e.modulus() != entries_.front().modulus())
            throw std::invalid_argument("BraidingMatrix: entries from mixed groups");
}

BraidingMatrix BraidingMatrix::rank2(GroupValue q11, GroupValue q12,
                                     GroupValue q21, GroupValue q22)
{
    return BraidingMatrix(2, {std::move(q11), std::move(q12), std::move(q21), std::move(q22)});
}

const GroupValue& BraidingMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= rank_ || j >= rank_)
        throw std::out_of_range("BraidingMatrix::at");
    return entries_[i * rank_ + j];
}

bool BraidingMatrix::operator==(const BraidingMatrix& other) const
{
    return rank_ == other.rank_ && entries_ == other.entries_;
}

GroupValue chi(const BraidingMatrix& q, const IntVector& d, const IntVector& e)
{
    std::size_t n = q.rank();
    if (d.size() != n || e.size() != n)
        throw std::invalid_argument("chi: vector dimension != rank");
    std::vector<Int> free_acc(q.free_rank(), 0);
    Int mod = q.modulus();
    Int tors_acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (e[j] == 0)
                continue;
            Int exp = checked_mul(d[i], e[j]);
            const GroupValue& v = q.at(i, j);
            for (std::size_t k = 0; k < free_acc.size(); ++k)
                free_acc[k] = checked_add(free_acc[k], checked_mul(exp, v.free()[k]));
            Int em = mod_norm(exp, mod);
            tors_acc = static_cast<Int>(
                (static_cast<__int128>(em) * v.tors() + tors_acc) % mod);
        }
    }
    return GroupValue(std::move(free_acc), tors_acc, mod);
}

namespace detail {

std::optional<Int> min_power_solving(const GroupValue& base, const GroupValue& target)
{
    const auto& fb = base.free();
    const auto& ft = target.free();
    std::optional<Int> pinned;
    for (std::size_t k = 0; k < fb.size(); ++k) {
        if (fb[k] == 0) {
            if (ft[k] != 0)
                return std::nullopt;
            continue;
        }
        if (ft[k] % fb[k] != 0)
            return std::nullopt;
        Int m = ft[k] / fb[k];
        if (pinned && *pinned != m)
            return std::nullopt;
        pinned = m;
    }
    Int mod = base.modulus();
    if (pinned) {
        if (*pinned < 0)
            return std::nullopt;
        __int128 residue = static_cast<__int128>(mod_norm(*pinned, mod)) * base.tors() -
                           target.tors();
        if (residue % mod != 0)
            return std::nullopt;
        return pinned;
    }
    return solve_linear_congruence(base.tors(), target.tors(), mod);
}

std::optional<Int> cartan_from_values(const GroupValue& diag, const GroupValue& sym)
{
    std::optional<Int> best = min_power_solving(diag, sym.inverse());
    if (!diag.is_one()) {
        if (auto d = diag.finite_order()) {
            Int from_order = *d - 1;
            if (!best || from_order < *best)
                best = from_order;
        }
    }
    return best;
}

} // namespace detail

std::optional<Int> cartan_entry(const BraidingMatrix& q, const OrderedBasis& basis,
                                std::size_t i, std::size_t j)
{
    if (i == j)
        throw std::invalid_argument("cartan_entry: requires i != j");
    if (basis.rank() != q.rank())
        throw std::invalid_argument("cartan_entry: basis rank != matrix rank");
    GroupValue diag = chi(q, basis[i], basis[i]);
    GroupValue sym = chi(q, basis[i], basis[j]) * chi(q, basis[j], basis[i]);
    return detail::cartan_from_values(diag, sym);
}

BraidingMatrix matrix_at_basis(const BraidingMatrix& q, const OrderedBasis& basis)
{
    if (basis.rank() != q.rank())
        throw std::invalid_argument("matrix_at_basis: basis rank != matrix rank");
    std::size_t n = q.rank();
    std::vector<GroupValue> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries.push_back(chi(q, basis[i], basis[j]));
    return BraidingMatrix(n, std::move(entries));
}

bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("twist_equivalent: rank mismatch");
    std::size_t n = a.rank();
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, i) != b.at(i, i))
            return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.at(i, j) * a.at(j, i) != b.at(i, j) * b.at(j, i))
                return false;
    return true;
}

} // namespace arsys
