#pragma once

#include "radon_nets/distribution.hpp"
#include "radon_nets/graph.hpp"
#include "radon_nets/space.hpp"

#include <vector>

namespace radon_nets {

/// Minimum hitting set over a candidate universe.
struct HittingSetInstance {
    PointSet universe;
    std::vector<PointSet> targets;
};

struct HittingSetSolution {
    std::size_t size = 0;
    PointSet witness;  ///< canonically least optimum
};

class InfeasibleError : public PreconditionError {
public:
    explicit InfeasibleError(PointSet target)
        : PreconditionError("target " + to_string(target) + " has no candidate point"), target_(target) {}
    PointSet target() const noexcept { return target_; }

private:
    PointSet target_;
};

/// Keeps only the inclusion-minimal targets, in canonical order.
std::vector<PointSet> minimal_targets(std::vector<PointSet> targets);

/// Exact minimum hitting set by branch and bound: branch on the target with
/// the fewest candidates, prune with a greedy packing of pairwise disjoint
/// targets. Throws InfeasibleError when a target misses the universe.
HittingSetSolution solve_hitting_set(const HittingSetInstance& instance);

enum class NetCandidates {
    Weak,    ///< any ground point may pierce
    Strong,  ///< only points in the support of mu
};

/// The convex sets of measure >= eps as a hitting-set instance. With
/// `reduce`, non-minimal targets are dropped (the optimum is unchanged).
HittingSetInstance weak_net_instance(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                     NetCandidates candidates = NetCandidates::Weak, bool reduce = true);

/// Smallest S meeting every convex c with mu(c) >= eps. Requires eps > 0.
HittingSetSolution minimal_weak_net(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                    NetCandidates candidates = NetCandidates::Weak);

struct ColoringResult {
    std::size_t chromatic = 0;
    std::vector<std::size_t> colors;  ///< an optimal proper coloring
};

/// Exact chromatic number: iterative deepening on k from a greedy clique
/// bound, each k decided by DSATUR-ordered backtracking. Throws
/// TooLargeError above `cap` vertices.
ColoringResult exact_chromatic_number(const Graph& graph, std::size_t cap = kDefaultVertexCap);

/// True iff `colors` is a proper coloring of `graph`.
bool is_proper_coloring(const Graph& graph, const std::vector<std::size_t>& colors);

} // namespace radon_nets
