#include "radon_nets/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace radon_nets {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxGroundSize)
        throw PreconditionError("ground set has " + std::to_string(labels_.size()) +
                                " points; the ceiling is " + std::to_string(kMaxGroundSize));
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw PreconditionError("duplicate ground label '" + *dup + "'");
}

std::optional<std::size_t> GroundSet::find(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

SetFamily::SetFamily(std::vector<PointSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    sorted_bits_.reserve(sets_.size());
    for (PointSet s : sets_)
        sorted_bits_.push_back(s.bits());
    std::sort(sorted_bits_.begin(), sorted_bits_.end());
}

bool SetFamily::contains(PointSet s) const {
    return std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), s.bits());
}

namespace {

std::string axiom_message(SpaceAxiom axiom, PointSet a, PointSet b) {
    switch (axiom) {
    case SpaceAxiom::MissingEmptySet:
        return "family is missing the empty set";
    case SpaceAxiom::MissingFullSet:
        return "family is missing the full ground set";
    case SpaceAxiom::NotIntersectionClosed:
        return "family is not closed under intersection: " + to_string(a) + " & " + to_string(b);
    case SpaceAxiom::OutsideGround:
        return "set " + to_string(a) + " is not a subset of the ground set";
    }
    return "invalid family";
}

} // namespace

SpaceAxiomError::SpaceAxiomError(SpaceAxiom axiom, PointSet a, PointSet b)
    : PreconditionError(axiom_message(axiom, a, b)), axiom_(axiom), a_(a), b_(b) {}

ConvexitySpace validate_space(GroundSet ground, std::vector<PointSet> family) {
    const PointSet all = ground.all();
    for (PointSet s : family)
        if (!s.subset_of(all))
            throw SpaceAxiomError(SpaceAxiom::OutsideGround, s);
    SetFamily convex(std::move(family));
    if (!convex.contains(PointSet{}))
        throw SpaceAxiomError(SpaceAxiom::MissingEmptySet);
    if (!convex.contains(all))
        throw SpaceAxiomError(SpaceAxiom::MissingFullSet);
    const auto& sets = convex.sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!convex.contains(sets[i] & sets[j]))
                throw SpaceAxiomError(SpaceAxiom::NotIntersectionClosed, sets[i], sets[j]);
    return ConvexitySpace(std::move(ground), std::move(convex));
}

ConvexitySpace intersection_closure(GroundSet ground, std::span<const PointSet> basis, std::size_t max_family) {
    const PointSet all = ground.all();
    std::unordered_set<PointSet, PointSetHash> seen;
    std::vector<PointSet> family;
    auto add = [&](PointSet s) {
        if (seen.insert(s).second) {
            family.push_back(s);
            if (family.size() > max_family)
                throw TooLargeError("intersection closure", family.size(), max_family);
        }
    };
    add(all);
    add(PointSet{});
    for (PointSet b : basis) {
        if (!b.subset_of(all))
            throw SpaceAxiomError(SpaceAxiom::OutsideGround, b);
        add(b);
    }
    // Worklist: every set is intersected with every set discovered before it.
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            add(family[i] & family[j]);
    return validate_space(std::move(ground), std::move(family));
}

PointSet convex_hull(const ConvexitySpace& space, PointSet y) {
    PointSet hull = space.all();
    for (PointSet c : space.convex())
        if (y.subset_of(c))
            hull = hull & c;
    return hull;
}

SetFamily halfspaces(const ConvexitySpace& space, bool proper) {
    const PointSet all = space.all();
    std::vector<PointSet> out;
    for (PointSet c : space.convex()) {
        if (proper && (c.empty() || c == all))
            continue;
        if (space.is_convex(all.minus(c)))
            out.push_back(c);
    }
    return SetFamily(std::move(out));
}

PointSet halfspace_hull(const SetFamily& halfspaces, PointSet c, PointSet all) {
    PointSet hull = all;
    for (PointSet b : halfspaces)
        if (c.subset_of(b))
            hull = hull & b;
    return hull;
}

SeparabilityResult is_separable(const ConvexitySpace& space) {
    const SetFamily half = halfspaces(space, false);
    const PointSet all = space.all();
    for (PointSet c : space.convex()) {
        const PointSet outside = all.minus(c);
        for (std::size_t x : outside.indices()) {
            const bool separated = std::any_of(half.begin(), half.end(), [&](PointSet b) {
                return c.subset_of(b) && !b.contains(x);
            });
            if (!separated)
                return {false, c, x};
        }
    }
    return {};
}

ConvexitySpace restrict_space(const ConvexitySpace& space, PointSet c) {
    if (!space.is_convex(c))
        throw NotConvexError(c);
    std::vector<std::string> labels;
    c.for_each([&](std::size_t i) { labels.push_back(space.ground().label(i)); });
    std::vector<PointSet> family;
    family.reserve(space.convex().size());
    for (PointSet other : space.convex())
        family.push_back(compress(other & c, c));
    return validate_space(GroundSet(std::move(labels)), std::move(family));
}

} // namespace radon_nets
