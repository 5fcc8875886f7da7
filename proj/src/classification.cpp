#include "arsys/classification.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arsys {

namespace {

constexpr EntryPattern kAny{true, false, -1, 0};
constexpr EntryPattern kOne{false, false, -1, 0};
constexpr EntryPattern kMinusOne{false, true, -1, 0};

constexpr EntryPattern p(Int e) { return {false, false, 0, e}; }
constexpr EntryPattern mp(Int e) { return {false, true, 0, e}; }
constexpr EntryPattern sec(Int e) { return {false, false, 1, e}; }

ParamDomain generic(std::vector<Int> excluded_orders)
{
    return {ParamDomain::Kind::Generic, std::move(excluded_orders)};
}

ParamDomain root(std::vector<Int> orders)
{
    return {ParamDomain::Kind::Root, std::move(orders)};
}

ParamDomain none() { return {}; }

std::vector<ClassificationRow> build_table()
{
    std::vector<ClassificationRow> t;
    t.push_back({1, {{{kAny, kOne, kAny}, "T1"}}, none(), none(), {}});
    t.push_back({2, {{{p(1), p(-1), p(1)}, "T2"}}, generic({1}), none(), {}});
    t.push_back({3,
                 {{{p(1), p(-1), kMinusOne}, "T2"}, {{kMinusOne, p(1), kMinusOne}, "T2"}},
                 generic({1, 2}), none(), {}});
    t.push_back({4, {{{p(1), p(-2), p(2)}, "T3"}}, generic({1, 2}), none(), {}});
    t.push_back({5, {{{p(1), p(-2), kMinusOne}, "T3"}}, generic({1, 2}), none(),
                 {{0, true, 0, -1}}});
    t.push_back({6, {{{p(1), sec(-1), sec(1)}, "T3"}}, root({3}), generic({1, 3}),
                 {{1, false, 1, -1}}});
    t.push_back({7, {{{p(1), mp(1), kMinusOne}, "T3"}}, root({3}), none(), {}});
    t.push_back({8,
                 {{{p(4), p(-3), mp(2)}, "T4"},
                  {{p(4), p(-1), kMinusOne}, "T5"},
                  {{p(-3), p(1), kMinusOne}, "T7"}},
                 root({12}), none(), {{0, true, 0, -1}}});
    t.push_back({9,
                 {{{mp(2), p(1), mp(2)}, "T4"},
                  {{mp(2), p(3), kMinusOne}, "T5"},
                  {{mp(-1), p(-3), kMinusOne}, "T7"}},
                 root({12}), none(), {}});
    t.push_back({10,
                 {{{p(1), p(-2), mp(3)}, "T6"},
                  {{mp(2), mp(1), kMinusOne}, "T14"},
                  {{mp(3), mp(-1), kMinusOne}, "T9"}},
                 root({18}), none(), {}});
    t.push_back({11, {{{p(1), p(-3), p(3)}, "T8"}}, generic({1, 2, 3}), none(), {}});
    t.push_back({12,
                 {{{p(2), p(1), p(-1)}, "T8"},
                  {{p(2), mp(-1), kMinusOne}, "T8"},
                  {{p(1), mp(1), kMinusOne}, "T8"}},
                 root({8}), none(), {}});
    t.push_back({13,
                 {{{p(6), mp(-1), p(8)}, "T10"},
                  {{p(6), p(1), p(-1)}, "T13"},
                  {{p(8), p(5), kMinusOne}, "T17"},
                  {{p(1), p(-5), kMinusOne}, "T21"}},
                 root({24}), none(), {}});
    t.push_back({14,
                 {{{p(1), p(-3), kMinusOne}, "T11"}, {{mp(-2), p(3), kMinusOne}, "T16"}},
                 root({5, 20}), none(), {{0, false, 0, 11}}});
    t.push_back({15,
                 {{{p(1), p(-3), mp(5)}, "T12"},
                  {{mp(3), mp(4), mp(-4)}, "T15"},
                  {{mp(5), mp(-2), kMinusOne}, "T18"},
                  {{mp(3), mp(2), kMinusOne}, "T20"}},
                 root({30}), none(), {}});
    t.push_back({16,
                 {{{p(1), p(-3), kMinusOne}, "T19"}, {{mp(-2), p(3), kMinusOne}, "T22"}},
                 root({14}), none(), {}});
    return t;
}

/// Pattern value at a parameter assignment; nullopt when -1 is not
/// representable (odd torsion order).
std::optional<GroupValue> eval_pattern(const EntryPattern& pattern,
                                       const std::vector<GroupValue>& params,
                                       std::size_t free_rank, Int modulus)
{
    GroupValue v = GroupValue::one(free_rank, modulus);
    if (pattern.neg) {
        if (modulus % 2 != 0)
            return std::nullopt;
        v = GroupValue::minus_one(free_rank, modulus);
    }
    if (pattern.param >= 0)
        v = v * params.at(static_cast<std::size_t>(pattern.param)).pow(pattern.exp);
    return v;
}

/// All group elements of exact order k: pure torsion, (N/k)*u with gcd(u,k)=1.
std::vector<GroupValue> primitive_roots(Int k, std::size_t free_rank, Int modulus)
{
    std::vector<GroupValue> out;
    if (k < 1 || modulus % k != 0)
        return out;
    Int step = modulus / k;
    for (Int u = 1; u <= k; ++u)
        if (std::gcd(u, k) == 1)
            out.push_back(GroupValue::root(step * (u % k), modulus, free_rank));
    return out;
}

bool order_excluded(const GroupValue& v, const std::vector<Int>& excluded)
{
    auto d = v.finite_order();
    if (!d)
        return false;
    return std::find(excluded.begin(), excluded.end(), *d) != excluded.end();
}

/// Solve for a parameter from a slot where it appears with exponent +-1.
std::optional<GroupValue> pin_param(const EntryPattern& pattern, const GroupValue& target)
{
    GroupValue v = target;
    if (pattern.neg) {
        if (v.modulus() % 2 != 0)
            return std::nullopt;
        v = v * GroupValue::minus_one(v.free_rank(), v.modulus());
    }
    return pattern.exp == 1 ? v : v.inverse();
}

bool verify(const VariantPattern& variant, const std::array<GroupValue, 3>& targets,
            const std::vector<GroupValue>& params, std::size_t free_rank, Int modulus)
{
    for (std::size_t slot = 0; slot < 3; ++slot) {
        const EntryPattern& pat = variant.entries[slot];
        if (pat.any)
            continue;
        auto v = eval_pattern(pat, params, free_rank, modulus);
        if (!v || *v != targets[slot])
            return false;
    }
    return true;
}

const EntryPattern* find_pin_slot(const VariantPattern& variant, int param)
{
    for (std::size_t slot = 0; slot < 3; ++slot) {
        const EntryPattern& pat = variant.entries[slot];
        if (!pat.any && pat.param == param && (pat.exp == 1 || pat.exp == -1))
            return &pat;
    }
    return nullptr;
}

std::size_t slot_of(const EntryPattern* pat, const VariantPattern& variant)
{
    return static_cast<std::size_t>(pat - variant.entries.data());
}

bool match_variant(const ClassificationRow& row, const VariantPattern& variant,
                   const std::array<GroupValue, 3>& targets, std::size_t free_rank,
                   Int modulus)
{
    auto finish = [&](std::vector<GroupValue> params) {
        if (row.secondary.kind == ParamDomain::Kind::Generic) {
            const EntryPattern* pin = find_pin_slot(variant, 1);
            if (!pin)
                return false;
            auto c = pin_param(*pin, targets[slot_of(pin, variant)]);
            if (!c || order_excluded(*c, row.secondary.orders))
                return false;
            params.push_back(*c);
        }
        return verify(variant, targets, params, free_rank, modulus);
    };

    switch (row.primary.kind) {
    case ParamDomain::Kind::None:
        return finish({});
    case ParamDomain::Kind::Generic: {
        const EntryPattern* pin = find_pin_slot(variant, 0);
        if (!pin)
            return false;
        auto c = pin_param(*pin, targets[slot_of(pin, variant)]);
        if (!c || order_excluded(*c, row.primary.orders))
            return false;
        return finish({*c});
    }
    case ParamDomain::Kind::Root:
        for (Int k : row.primary.orders)
            for (const GroupValue& c : primitive_roots(k, free_rank, modulus))
                if (finish({c}))
                    return true;
        return false;
    }
    return false;
}

} // namespace

const std::vector<ClassificationRow>& classification_table()
{
    static const std::vector<ClassificationRow> table = build_table();
    return table;
}

std::optional<RowMatch> classify_rank2(const BraidingMatrix& q)
{
    if (q.rank() != 2)
        throw std::invalid_argument("classify_rank2: rank 2 only");
    GroupValue d1 = q.at(0, 0);
    GroupValue d2 = q.at(1, 1);
    GroupValue s = q.at(0, 1) * q.at(1, 0);
    std::size_t fr = q.free_rank();
    Int mod = q.modulus();

    for (const ClassificationRow& row : classification_table()) {
        for (std::size_t v = 0; v < row.variants.size(); ++v) {
            for (bool transposed : {false, true}) {
                std::array<GroupValue, 3> targets{transposed ? d2 : d1, s,
                                                  transposed ? d1 : d2};
                if (match_variant(row, row.variants[v], targets, fr, mod))
                    return RowMatch{row.id, static_cast<int>(v + 1), transposed,
                                    row.variants[v].tree};
            }
        }
    }
    return std::nullopt;
}

namespace {

BraidingMatrix instantiate(const VariantPattern& variant,
                           const std::vector<GroupValue>& params,
                           std::size_t free_rank, Int modulus)
{
    std::array<GroupValue, 3> vals{GroupValue::one(free_rank, modulus),
                                   GroupValue::one(free_rank, modulus),
                                   GroupValue::one(free_rank, modulus)};
    for (std::size_t slot = 0; slot < 3; ++slot) {
        auto v = eval_pattern(variant.entries[slot], params, free_rank, modulus);
        if (!v)
            throw std::logic_error("instantiate: pattern not representable");
        vals[slot] = *v;
    }
    return BraidingMatrix::rank2(vals[0], GroupValue::one(free_rank, modulus), vals[1],
                                 vals[2]);
}

GroupValue apply_substitution(const Substitution& sub, const GroupValue& value,
                              const GroupValue& other)
{
    GroupValue v = value.pow(sub.self_exp) * other.pow(sub.other_exp);
    if (sub.neg)
        v = v * GroupValue::minus_one(v.free_rank(), v.modulus());
    return v;
}

} // namespace

std::vector<RowInstance> standard_instances()
{
    std::vector<RowInstance> out;
    const auto& table = classification_table();

    auto add = [&out](const ClassificationRow& row, std::size_t variant,
                      const std::vector<GroupValue>& params, std::size_t free_rank,
                      Int modulus, const std::string& label) {
        out.push_back(RowInstance{row.id, static_cast<int>(variant + 1), label,
                                  instantiate(row.variants[variant], params, free_rank,
                                              modulus)});
    };

    for (const ClassificationRow& row : table) {
        if (row.id == 1) {
            // Two unconstrained nonzero entries: two independent parameters.
            GroupValue u = GroupValue::generator(0, 2, 1);
            GroupValue w = GroupValue::generator(1, 2, 1);
            GroupValue one = GroupValue::one(2, 1);
            out.push_back(RowInstance{1, 1, "q11=u, q22=w generic",
                                      BraidingMatrix::rank2(u, one, one, w)});
            continue;
        }
        if (row.primary.kind == ParamDomain::Kind::Generic) {
            // Needs -1 whenever some pattern carries a sign.
            bool needs_minus = false;
            for (const auto& var : row.variants)
                for (const auto& e : var.entries)
                    needs_minus = needs_minus || e.neg;
            Int mod = needs_minus ? 2 : 1;
            GroupValue base = GroupValue::generator(0, 1, mod);
            std::vector<std::pair<std::string, GroupValue>> choices{{"q generic", base}};
            for (const Substitution& sub : row.substitutions)
                choices.emplace_back("q substituted",
                                     apply_substitution(sub, base, base));
            for (std::size_t v = 0; v < row.variants.size(); ++v)
                for (const auto& [label, value] : choices)
                    add(row, v, {value}, 1, mod, label);
            continue;
        }
        if (row.id == 6) {
            // Primitive cube root plus an independent generic parameter.
            Int mod = 3;
            GroupValue zeta = GroupValue::root(1, mod, 1);
            GroupValue qv = GroupValue::generator(0, 1, mod);
            add(row, 0, {zeta, qv}, 1, mod, "zeta in R3, q generic");
            add(row, 0, {zeta, apply_substitution(row.substitutions.at(0), qv, zeta)}, 1,
                mod, "zeta in R3, q substituted");
            continue;
        }
        // Fixed primitive-root rows; torsion order lcm(2, k) hosts -1.
        for (Int k : row.primary.orders) {
            Int mod = std::lcm<Int>(2, k);
            GroupValue zeta = GroupValue::root(mod / k, mod, 0);
            std::vector<std::pair<std::string, GroupValue>> choices{
                {"zeta in R" + std::to_string(k), zeta}};
            for (const Substitution& sub : row.substitutions) {
                GroupValue alt = apply_substitution(sub, zeta, zeta);
                if (alt != zeta)
                    choices.emplace_back("zeta in R" + std::to_string(k) + " substituted",
                                         alt);
            }
            for (std::size_t v = 0; v < row.variants.size(); ++v)
                for (const auto& [label, value] : choices)
                    add(row, v, {value}, 0, mod, label);
        }
    }
    return out;
}

} // namespace arsys
