#pragma once

#include "radon_nets/errors.hpp"
#include "radon_nets/point_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radon_nets {

/// Ordered list of distinct point labels. Position i in the list is point i.
class GroundSet {
public:
    GroundSet() = default;
    /// Throws PreconditionError on duplicate labels or more than 64 points.
    explicit GroundSet(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    PointSet all() const { return PointSet::full(labels_.size()); }
    std::optional<std::size_t> find(const std::string& label) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> labels_;
};

/// Duplicate-free list of point sets kept in canonical order.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(std::vector<PointSet> sets);

    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    const std::vector<PointSet>& sets() const { return sets_; }
    const PointSet& operator[](std::size_t i) const { return sets_[i]; }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    bool contains(PointSet s) const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) { return a.sets_ == b.sets_; }

private:
    std::vector<PointSet> sets_;
    std::vector<std::uint64_t> sorted_bits_;
};

/// Which convexity-space axiom a candidate family violates.
enum class SpaceAxiom { MissingEmptySet, MissingFullSet, NotIntersectionClosed, OutsideGround };

class SpaceAxiomError : public PreconditionError {
public:
    SpaceAxiomError(SpaceAxiom axiom, PointSet a = {}, PointSet b = {});

    SpaceAxiom axiom() const noexcept { return axiom_; }
    /// The offending pair for NotIntersectionClosed, the stray set for OutsideGround.
    PointSet first() const noexcept { return a_; }
    PointSet second() const noexcept { return b_; }

private:
    SpaceAxiom axiom_;
    PointSet a_;
    PointSet b_;
};

class NotConvexError : public PreconditionError {
public:
    explicit NotConvexError(PointSet s) : PreconditionError("set " + to_string(s) + " is not convex"), set_(s) {}
    PointSet set() const noexcept { return set_; }

private:
    PointSet set_;
};

/// A finite ground set with an intersection-closed family containing the
/// empty set and the whole ground set. Instances are always valid: the only
/// ways to obtain one are validate_space and the operations below.
class ConvexitySpace {
public:
    const GroundSet& ground() const { return ground_; }
    const SetFamily& convex() const { return convex_; }
    std::size_t size() const { return ground_.size(); }
    PointSet all() const { return ground_.all(); }
    bool is_convex(PointSet s) const { return convex_.contains(s); }

    friend bool operator==(const ConvexitySpace&, const ConvexitySpace&) = default;

private:
    friend ConvexitySpace validate_space(GroundSet ground, std::vector<PointSet> family);
    ConvexitySpace(GroundSet ground, SetFamily convex) : ground_(std::move(ground)), convex_(std::move(convex)) {}

    GroundSet ground_;
    SetFamily convex_;
};

/// Checks the axioms and returns the space; throws SpaceAxiomError naming the
/// first violation (empty set, then full set, then the canonically first
/// non-closed pair).
ConvexitySpace validate_space(GroundSet ground, std::vector<PointSet> family);

/// Default cap on the number of sets produced by intersection_closure.
inline constexpr std::size_t kMaxFamilySize = std::size_t{1} << 22;

/// Smallest intersection-closed family containing `basis`, the ground set
/// (empty intersection) and the empty set.
ConvexitySpace intersection_closure(GroundSet ground, std::span<const PointSet> basis,
                                    std::size_t max_family = kMaxFamilySize);

/// Intersection of every convex set containing `y`.
PointSet convex_hull(const ConvexitySpace& space, PointSet y);

/// Convex sets whose complement is convex. `proper` drops the empty set and
/// the ground set.
SetFamily halfspaces(const ConvexitySpace& space, bool proper);

struct SeparabilityResult {
    bool separable = true;
    /// Canonically first convex set not separated from some outside point.
    std::optional<PointSet> convex_set;
    std::optional<std::size_t> point;
};

SeparabilityResult is_separable(const ConvexitySpace& space);

/// Intersection of all half-spaces containing `c` (the half-space hull).
PointSet halfspace_hull(const SetFamily& halfspaces, PointSet c, PointSet all);

/// The subspace on convex set `c`, reindexed so c's members are 0..|c|-1.
/// Throws NotConvexError when c is not convex.
ConvexitySpace restrict_space(const ConvexitySpace& space, PointSet c);

} // namespace radon_nets
