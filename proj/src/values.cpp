#include "arsys/values.hpp"

#include <numeric>

namespace arsys {

namespace {

[[noreturn]] void overflow()
{
    throw std::overflow_error("integer overflow in exact arithmetic");
}

} // namespace

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        overflow();
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        overflow();
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        overflow();
    return r;
}

Int checked_neg(Int a)
{
    return checked_sub(0, a);
}

Int mod_norm(Int x, Int n)
{
    if (n < 1)
        throw std::invalid_argument("mod_norm: modulus must be positive");
    Int r = x % n;
    return r < 0 ? r + n : r;
}

std::optional<Int> solve_linear_congruence(Int a, Int b, Int n)
{
    if (n < 1)
        throw std::invalid_argument("solve_linear_congruence: modulus must be positive");
    a = mod_norm(a, n);
    b = mod_norm(b, n);
    if (a == 0)
        return b == 0 ? std::optional<Int>(0) : std::nullopt;

    // Extended Euclid on (a, n).
    Int g = a, x = 1, r = n, x1 = 0;
    while (r != 0) {
        Int q = g / r;
        Int tg = g - q * r;
        g = r;
        r = tg;
        Int tx = x - q * x1;
        x = x1;
        x1 = tx;
    }
    if (b % g != 0)
        return std::nullopt;
    Int step = n / g;
    // x * (a/g) = 1 (mod n/g), so the solutions are b/g * x (mod n/g).
    __int128 sol = static_cast<__int128>(mod_norm(x, step)) * ((b / g) % step) % step;
    return static_cast<Int>((sol + step) % step);
}

GroupValue::GroupValue(std::vector<Int> free_exponents, Int torsion, Int modulus)
    : free_(std::move(free_exponents)), tors_(0), modulus_(modulus)
{
    if (modulus_ < 1)
        throw std::invalid_argument("GroupValue: torsion order must be >= 1");
    tors_ = mod_norm(torsion, modulus_);
}

GroupValue GroupValue::one(std::size_t free_rank, Int modulus)
{
    return GroupValue(std::vector<Int>(free_rank, 0), 0, modulus);
}

GroupValue GroupValue::minus_one(std::size_t free_rank, Int modulus)
{
    if (modulus % 2 != 0)
        throw std::domain_error("GroupValue::minus_one: needs even torsion order");
    return GroupValue(std::vector<Int>(free_rank, 0), modulus / 2, modulus);
}

GroupValue GroupValue::root(Int exponent, Int modulus, std::size_t free_rank)
{
    return GroupValue(std::vector<Int>(free_rank, 0), exponent, modulus);
}

GroupValue GroupValue::generator(std::size_t index, std::size_t free_rank, Int modulus)
{
    if (index >= free_rank)
        throw std::invalid_argument("GroupValue::generator: index out of range");
    std::vector<Int> f(free_rank, 0);
    f[index] = 1;
    return GroupValue(std::move(f), 0, modulus);
}

bool GroupValue::is_one() const noexcept
{
    if (tors_ != 0)
        return false;
    for (Int e : free_)
        if (e != 0)
            return false;
    return true;
}

bool GroupValue::has_free_part() const noexcept
{
    for (Int e : free_)
        if (e != 0)
            return true;
    return false;
}

void GroupValue::require_same_group(const GroupValue& other) const
{
    if (free_.size() != other.free_.size() || modulus_ != other.modulus_)
        throw std::invalid_argument("GroupValue: mixed ambient groups (F, N) differ");
}

GroupValue GroupValue::operator*(const GroupValue& other) const
{
    require_same_group(other);
    std::vector<Int> f(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i)
        f[i] = checked_add(free_[i], other.free_[i]);
    return GroupValue(std::move(f), mod_norm(tors_ + other.tors_, modulus_), modulus_);
}

GroupValue GroupValue::inverse() const
{
    std::vector<Int> f(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i)
        f[i] = checked_neg(free_[i]);
    return GroupValue(std::move(f), mod_norm(-tors_, modulus_), modulus_);
}

GroupValue GroupValue::pow(Int k) const
{
    std::vector<Int> f(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i)
        f[i] = checked_mul(free_[i], k);
    Int km = mod_norm(k, modulus_);
    Int t = static_cast<Int>(static_cast<__int128>(tors_) * km % modulus_);
    return GroupValue(std::move(f), t, modulus_);
}

std::optional<Int> GroupValue::finite_order() const
{
    if (has_free_part())
        return std::nullopt;
    return modulus_ / std::gcd(modulus_, tors_);
}

bool GroupValue::is_primitive_root(Int n) const
{
    auto d = finite_order();
    return d.has_value() && *d == n;
}

bool GroupValue::operator==(const GroupValue& other) const
{
    require_same_group(other);
    return tors_ == other.tors_ && free_ == other.free_;
}

bool GroupValue::operator<(const GroupValue& other) const
{
    require_same_group(other);
    if (free_ != other.free_)
        return free_ < other.free_;
    return tors_ < other.tors_;
}

} // namespace arsys
