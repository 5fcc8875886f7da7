#include "arsys/groupoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arsys {

std::optional<Reflection> reflect(const BraidingMatrix& q, const OrderedBasis& basis,
                                  std::size_t pivot, std::size_t* undefined_j)
{
    std::size_t n = basis.rank();
    if (q.rank() != n)
        throw std::invalid_argument("reflect: basis rank != matrix rank");
    if (pivot >= n)
        throw std::out_of_range("reflect: pivot out of range");

    GroupValue diag = chi(q, basis[pivot], basis[pivot]);
    std::vector<Int> row(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot)
            continue;
        GroupValue sym = chi(q, basis[pivot], basis[j]) * chi(q, basis[j], basis[pivot]);
        auto m = detail::cartan_from_values(diag, sym);
        if (!m) {
            if (undefined_j)
                *undefined_j = j;
            return std::nullopt;
        }
        row[j] = *m;
    }

    std::vector<IntVector> image;
    image.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot)
            image.push_back(vec_neg(basis[pivot]));
        else
            image.push_back(vec_scaled_add(basis[j], row[j], basis[pivot]));
    }
    OrderedBasis image_basis(std::move(image));

    // T in standard coordinates maps the old columns onto the new ones.
    IntMatrix t = mat_mul(image_basis.column_matrix(),
                          unimodular_inverse(basis.column_matrix()));
    return Reflection{ReflectionMap{std::move(t), pivot}, std::move(image_basis),
                      std::move(row)};
}

WeylGroupoid::WeylGroupoid(BraidingMatrix braiding, std::vector<OrderedBasis> nodes,
                           std::vector<GroupoidEdge> edges, std::size_t origin_index)
    : braiding_(std::move(braiding)), nodes_(std::move(nodes)),
      edges_(std::move(edges)), origin_(origin_index)
{
    if (nodes_.empty() || origin_ >= nodes_.size())
        throw std::invalid_argument("WeylGroupoid: bad origin");
}

namespace {

bool all_nonneg(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

bool all_nonpos(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](Int x) { return x <= 0; });
}

} // namespace

ArithmeticRootSystem::ArithmeticRootSystem(BraidingMatrix braiding, OrderedBasis base,
                                           std::set<IntVector> roots)
    : braiding_(std::move(braiding)), base_(std::move(base)), roots_(std::move(roots))
{
    for (const auto& r : roots_) {
        if (all_nonneg(r))
            positive_.insert(r);
        else if (!all_nonpos(r))
            throw std::logic_error("ArithmeticRootSystem: root with mixed-sign coordinates");
    }
}

OutcomeKind kind_of(const GenerationOutcome& outcome)
{
    switch (outcome.index()) {
    case 0: return OutcomeKind::Finite;
    case 1: return OutcomeKind::NotArithmetic;
    case 2: return OutcomeKind::CertifiedInfinite;
    default: return OutcomeKind::CapExceeded;
    }
}

const char* to_string(OutcomeKind kind)
{
    switch (kind) {
    case OutcomeKind::Finite: return "finite";
    case OutcomeKind::NotArithmetic: return "not_arithmetic";
    case OutcomeKind::CertifiedInfinite: return "certified_infinite";
    case OutcomeKind::CapExceeded: return "cap_exceeded";
    }
    return "unknown";
}

GenerationOutcome generate(const BraidingMatrix& q, const OrderedBasis& origin,
                           std::size_t cap)
{
    if (cap < 1)
        throw std::invalid_argument("generate: cap must be >= 1");
    std::size_t n = q.rank();

    std::vector<OrderedBasis> nodes;
    std::vector<GroupoidEdge> edges;
    std::map<std::vector<Int>, std::size_t> seen;

    nodes.push_back(origin);
    seen.emplace(origin.key(), 0);

    try {
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            // Copy: nodes may reallocate while we append discoveries.
            OrderedBasis current = nodes[head];
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t bad_j = 0;
                auto refl = reflect(q, current, i, &bad_j);
                if (!refl)
                    return NotArithmetic{current, i, bad_j};
                auto key = refl->image.key();
                auto it = seen.find(key);
                std::size_t target;
                if (it == seen.end()) {
                    if (nodes.size() >= cap)
                        return CapExceeded{nodes.size() + 1};
                    target = nodes.size();
                    nodes.push_back(refl->image);
                    seen.emplace(std::move(key), target);
                } else {
                    target = it->second;
                }
                edges.push_back(GroupoidEdge{head, i, target});
            }
        }
    } catch (const std::overflow_error&) {
        // Coordinates outran 64-bit range before the closure finished;
        // report the enumeration as inconclusive rather than guessing.
        return CapExceeded{nodes.size()};
    }

    WeylGroupoid groupoid(q, std::move(nodes), std::move(edges), 0);
    ArithmeticRootSystem system = roots_of(groupoid);
    return FiniteOutcome{std::move(groupoid), std::move(system)};
}

ArithmeticRootSystem roots_of(const WeylGroupoid& groupoid)
{
    std::set<IntVector> roots;
    for (const auto& node : groupoid.nodes())
        for (const auto& v : node.vectors())
            roots.insert(v);
    return ArithmeticRootSystem(groupoid.braiding(), groupoid.origin(), std::move(roots));
}

std::pair<std::set<IntVector>, std::set<IntVector>>
positive_split(const ArithmeticRootSystem& system)
{
    std::set<IntVector> pos = system.positive();
    std::set<IntVector> neg;
    for (const auto& r : system.roots())
        if (!pos.count(r))
            neg.insert(r);
    if (pos.size() + neg.size() != system.roots().size())
        throw std::logic_error("positive_split: partition not exact");
    for (const auto& r : pos)
        if (!neg.count(vec_neg(r)))
            throw std::logic_error("positive_split: negatives are not the mirrored positives");
    if (neg.size() != pos.size())
        throw std::logic_error("positive_split: halves differ in size");
    return {std::move(pos), std::move(neg)};
}

} // namespace arsys
