#include "arsys/rank2.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <map>
#include <stdexcept>

namespace arsys {

Mat2Z Mat2Z::inverse() const
{
    Int dt = det();
    if (dt == 1)
        return {d, checked_neg(b), checked_neg(c), a};
    if (dt == -1)
        return {checked_neg(d), b, c, checked_neg(a)};
    throw std::domain_error("Mat2Z::inverse: determinant not +-1");
}

bool sl2_has_finite_order(const Mat2Z& m)
{
    Int dt = m.det();
    if (dt != 1 && dt != -1)
        throw std::domain_error("sl2_has_finite_order: determinant not +-1");
    if (m == Mat2Z::identity() || m == Mat2Z{-1, 0, 0, -1})
        return true;
    Int tr = m.trace();
    if (dt == 1)
        return tr >= -1 && tr <= 1;
    return tr == 0;
}

bool semigroup_excludes_identity(std::span<const Mat2Z> generators, Int bound)
{
    if (bound < 1)
        throw std::invalid_argument("semigroup_excludes_identity: bound must be >= 1");
    for (const Mat2Z& g : generators) {
        Int a = g.a, b = checked_neg(g.b), d = checked_neg(g.d);
        if (g.det() != 1)
            return false;
        if (!(0 < d && d < checked_mul(bound, b) && checked_mul(bound, b) < a))
            return false;
    }
    return true;
}

namespace {

struct Constants {
    GroupValue q11;
    GroupValue q12q21;
    GroupValue q22;
};

Constants start_constants(const BraidingMatrix& q, ChainStart start)
{
    GroupValue s = q.at(0, 1) * q.at(1, 0);
    if (start == ChainStart::Origin)
        return {q.at(0, 0), std::move(s), q.at(1, 1)};
    return {q.at(1, 1), std::move(s), q.at(0, 0)};
}

std::vector<Int> constants_key(const Constants& c)
{
    std::vector<Int> key;
    auto push = [&key](const GroupValue& v) {
        key.insert(key.end(), v.free().begin(), v.free().end());
        key.push_back(v.tors());
    };
    push(c.q11);
    push(c.q12q21);
    push(c.q22);
    return key;
}

void cross_check(const BraidingMatrix& q, ChainStart start, const Mat2Z& cumulative,
                 const Constants& c)
{
    OrderedBasis basis = chain_basis(start, cumulative);
    GroupValue d1 = chi(q, basis[0], basis[0]);
    GroupValue sym = chi(q, basis[0], basis[1]) * chi(q, basis[1], basis[0]);
    GroupValue d2 = chi(q, basis[1], basis[1]);
    if (d1 != c.q11 || sym != c.q12q21 || d2 != c.q22)
        throw std::logic_error(
            "reflection_chain: recursion drifted from direct evaluation");
}

} // namespace

OrderedBasis chain_basis(ChainStart start, const Mat2Z& cumulative)
{
    Mat2Z b = (start == ChainStart::Origin ? Mat2Z::identity() : Mat2Z::swap()) * cumulative;
    return OrderedBasis({{b.a, b.c}, {b.b, b.d}});
}

ChainResult reflection_chain(const BraidingMatrix& q, ChainStart start, std::size_t cap)
{
    if (q.rank() != 2)
        throw std::invalid_argument("reflection_chain: rank 2 only");

    ChainResult result;
    result.start = start;
    GroupValue one = q.one();

    Constants c = start_constants(q, start);
    Mat2Z cumulative = Mat2Z::identity();
    std::map<std::array<Int, 4>, Int> seen_bases;
    seen_bases.emplace(cumulative.to_array(), 0);

    try {
        for (Int step = 0; static_cast<std::size_t>(step) < cap; ++step) {
            cross_check(q, start, cumulative, c);

            auto m = detail::cartan_from_values(c.q11, c.q12q21);
            if (!m) {
                result.kind = ChainResult::Kind::UndefinedAt;
                result.undefined_step = step;
                return result;
            }

            GroupValue p = (c.q11.pow(*m) * c.q12q21).is_one()
                               ? one
                               : c.q11.inverse() * c.q12q21;

            result.states.push_back(ChainState{step, *m, p, c.q11, c.q12q21, c.q22, cumulative});

            c = Constants{p.pow(*m) * c.q22,
                          p.pow(-2) * c.q12q21,
                          result.states.back().q11};
            cumulative = cumulative * Mat2Z{*m, -1, 1, 0};

            auto [it, inserted] = seen_bases.emplace(cumulative.to_array(), step + 1);
            if (!inserted) {
                result.kind = ChainResult::Kind::Periodic;
                result.period = step + 1 - it->second;
                return result;
            }
        }
    } catch (const std::overflow_error&) {
        // 64-bit range exhausted before a repeat; report as inconclusive.
    }
    result.kind = ChainResult::Kind::NotPeriodicWithinCap;
    return result;
}

bool necessary_condition(const BraidingMatrix& q)
{
    if (q.rank() != 2)
        throw std::invalid_argument("necessary_condition: rank 2 only");
    const GroupValue& q11 = q.at(0, 0);
    const GroupValue& q22 = q.at(1, 1);
    GroupValue s = q.at(0, 1) * q.at(1, 0);

    auto is_minus_one = [](const GroupValue& v) { return v.is_primitive_root(2); };

    if (s.is_one() || (q11 * s).is_one() || (s * q22).is_one() ||
        is_minus_one(q11) || is_minus_one(q22))
        return true;

    GroupValue w = q11 * s.pow(2) * q22;
    if (!is_minus_one(w))
        return false;
    return q11.is_primitive_root(3) || q11.is_primitive_root(4) ||
           (q11.pow(2) * s).is_one() || (q11.pow(3) * s).is_one();
}

namespace {

/**
 * The constants recursion alone, free of the cumulative matrix whose
 * entries outrun 64-bit range long before slow-repeating tails close.
 * Finds the first repeated constants triple; from that step on the whole
 * chain is forced, so the window's Cartan integers describe the tail
 * exactly.
 */
struct TailScan {
    enum class Kind { NoRepeat, Undefined, Repeat };
    Kind kind = Kind::NoRepeat;
    std::size_t undefined_step = 0;
    std::size_t window_begin = 0;
    std::vector<Int> window_ms;
};

TailScan scan_constants(const BraidingMatrix& q, ChainStart start, std::size_t budget)
{
    TailScan out;
    GroupValue one = q.one();
    Constants c = start_constants(q, start);
    std::map<std::vector<Int>, std::size_t> seen;
    std::vector<Int> ms;
    try {
        for (std::size_t step = 0; step <= budget; ++step) {
            auto [it, inserted] = seen.emplace(constants_key(c), step);
            if (!inserted) {
                out.kind = TailScan::Kind::Repeat;
                out.window_begin = it->second;
                out.window_ms.assign(ms.begin() + static_cast<std::ptrdiff_t>(it->second),
                                     ms.begin() + static_cast<std::ptrdiff_t>(step));
                return out;
            }
            auto m = detail::cartan_from_values(c.q11, c.q12q21);
            if (!m) {
                out.kind = TailScan::Kind::Undefined;
                out.undefined_step = step;
                return out;
            }
            ms.push_back(*m);
            GroupValue p = (c.q11.pow(*m) * c.q12q21).is_one()
                               ? one
                               : c.q11.inverse() * c.q12q21;
            c = Constants{p.pow(*m) * c.q22, p.pow(-2) * c.q12q21, c.q11};
        }
    } catch (const std::overflow_error&) {
        out.kind = TailScan::Kind::NoRepeat;
    }
    return out;
}

/// Certificate from a repeating tail, when one exists: either the window
/// decomposes into identity-free semigroup generators, or its product has
/// infinite order in SL(2,Z); both rule out a chain period forever. The
/// product is taken over big integers since long windows outgrow 64 bits.
std::optional<CertifiedInfinite> certify_from_window(const TailScan& scan)
{
    using Big = boost::multiprecision::cpp_int;
    Big a = 1, b = 0, c = 0, d = 1;
    for (Int m : scan.window_ms) {
        // right-multiply by [[m, -1], [1, 0]]
        Big na = a * m + b, nb = -a;
        Big nc = c * m + d, nd = -c;
        a = std::move(na);
        b = std::move(nb);
        c = std::move(nc);
        d = std::move(nd);
    }

    CertifiedInfinite cert;
    cert.window_cartan = scan.window_ms;
    cert.window_begin = static_cast<Int>(scan.window_begin);
    using Limits = std::numeric_limits<Int>;
    if (a >= Limits::min() && a <= Limits::max() && b >= Limits::min() &&
        b <= Limits::max() && c >= Limits::min() && c <= Limits::max() &&
        d >= Limits::min() && d <= Limits::max()) {
        cert.period_product = {static_cast<Int>(a), static_cast<Int>(b),
                               static_cast<Int>(c), static_cast<Int>(d)};
    } else {
        cert.product_representable = false;
    }

    if (scan.window_ms.size() % 2 == 0 && !scan.window_ms.empty()) {
        bool all_large = true;
        std::vector<Mat2Z> pairs;
        for (std::size_t i = 0; i + 1 < scan.window_ms.size(); i += 2) {
            if (scan.window_ms[i] < 2 || scan.window_ms[i + 1] < 2) {
                all_large = false;
                break;
            }
            pairs.push_back(Mat2Z{scan.window_ms[i], -1, 1, 0} *
                            Mat2Z{scan.window_ms[i + 1], -1, 1, 0});
        }
        if (all_large && semigroup_excludes_identity(pairs, 1)) {
            cert.via_semigroup = true;
            return cert;
        }
    }

    // finite order in SL(2,Z): +-id or trace in {-1,0,1}
    bool is_id = a == 1 && b == 0 && c == 0 && d == 1;
    bool is_neg_id = a == -1 && b == 0 && c == 0 && d == -1;
    Big trace = a + d;
    if (is_id || is_neg_id || (trace >= -1 && trace <= 1))
        return std::nullopt;
    return cert;
}

} // namespace

GenerationOutcome decide(const BraidingMatrix& q, std::size_t cap)
{
    if (q.rank() != 2)
        return generate(q, OrderedBasis::standard(q.rank()), cap);

    for (ChainStart start : {ChainStart::Origin, ChainStart::Transposed}) {
        ChainResult chain = reflection_chain(q, start, cap);
        if (chain.kind == ChainResult::Kind::Periodic)
            continue;
        if (chain.kind == ChainResult::Kind::UndefinedAt) {
            // The chain basis at the failing step has no Cartan integer for
            // the pivot pair.
            Mat2Z at = chain.states.empty() ? Mat2Z::identity()
                                            : chain.states.back().cumulative *
                                                  Mat2Z{chain.states.back().m, -1, 1, 0};
            return NotArithmetic{chain_basis(start, at), 0, 1};
        }

        // Inconclusive within the cap: rerun the constants recursion alone,
        // which reaches much further than the basis matrices do.
        TailScan scan = scan_constants(q, start, cap);
        if (scan.kind == TailScan::Kind::Repeat) {
            try {
                if (auto cert = certify_from_window(scan))
                    return *cert;
                // The window product has finite order, so the chain does
                // close up; the closure below realizes the finite groupoid.
                continue;
            } catch (const std::overflow_error&) {
            }
        }
        // Undefined beyond 64-bit basis range, or no repeat: the closure
        // below reports honestly.
        break;
    }

    return generate(q, OrderedBasis::standard(2), cap);
}

} // namespace arsys
