#pragma once

#include "radon_nets/distribution.hpp"
#include "radon_nets/space.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace radon_nets {

/// Per-level parameters of the recursive construction.
struct NetParams {
    Rational eps;
    std::size_t helly = 1;
    std::size_t vc = 0;
    Rational delta;     ///< eps / (2h)^2
    Rational eps_next;  ///< (1 + 1/(2h)) eps
    std::size_t depth = 0;
};

/// Minimum n >= 0 with eps (1 + 1/(2h))^n > 1 - 1/h, in exact arithmetic.
std::size_t n_of_eps(const Rational& eps, std::size_t helly);

NetParams make_net_params(const Rational& eps, std::size_t helly, std::size_t vc);

class EmptyIntersectionError : public ConsistencyError {
public:
    EmptyIntersectionError() : ConsistencyError("dense half-spaces have empty intersection") {}
};

/// Least-index point of the intersection of `dense` (the ground set when
/// `dense` is empty). Throws EmptyIntersectionError if there is none.
std::size_t helly_point(const ConvexitySpace& space, const SetFamily& dense);

/// Half-spaces b with mu(b) > 1 - 1/h.
SetFamily dense_halfspaces(const SetFamily& halfspaces, const Distribution& mu, std::size_t helly);

/// Maximal delta-separated subfamily of `family`, chosen greedily in
/// canonical order: a set joins when mu(a ^ b) > delta for every set already
/// chosen. Maximality makes it a delta-cover, which is checked before
/// returning (ConsistencyError otherwise).
SetFamily greedy_packing(const SetFamily& family, const Distribution& mu, const Rational& delta);

/// One node of the construction. Nodes for equal (distribution, level) pairs
/// are shared, so a trace is a DAG whose unfolding is the recursion tree.
struct NetNode {
    Distribution mu;
    Rational eps{};
    std::size_t level = 0;         ///< recursion depth of this node
    std::size_t helly_point = 0;   ///< x0
    std::size_t dense_count = 0;   ///< |B0|
    bool base_case = false;
    SetFamily packing{};           ///< A (empty in the base case)
    std::vector<PointSet> children_sets{};                ///< the a in A with mu(a) > 0
    std::vector<std::shared_ptr<const NetNode>> children{}; ///< S_a, parallel to children_sets
    PointSet points{};             ///< S at this node
};

struct WeakNet {
    PointSet points;
    std::shared_ptr<const NetNode> trace;
    NetParams params;
    /// log10 of (120 h^2/eps)^(4 h v ln(1/eps)); reporting only.
    double log10_size_bound = 0;
    /// Distinct nodes in the trace and nodes in its unfolded recursion tree.
    std::size_t distinct_nodes = 0;
    double tree_nodes = 0;
    /// Packings larger than (4e^2/delta)^v. Expected to stay empty.
    std::vector<std::string> warnings;
};

/// Weak eps-net for the space generated by `halfspaces`: a point x0 piercing
/// every half-space of measure > 1 - 1/h, plus recursively built nets for
/// mu conditioned on each positive-mass member of a greedy
/// eps/(2h)^2-packing, at eps (1 + 1/(2h)). The result is verified to pierce
/// every convex set of measure >= eps before it is returned.
WeakNet build_weak_net(const ConvexitySpace& space, const SetFamily& halfspaces, const Distribution& mu,
                       const Rational& eps);

/// Convenience overload using all half-spaces of the space.
WeakNet build_weak_net(const ConvexitySpace& space, const Distribution& mu, const Rational& eps);

struct NetVerification {
    bool ok = true;
    /// Unpierced convex set of maximum measure (canonically first on ties).
    std::optional<PointSet> counterexample;
};

NetVerification verify_weak_net(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                PointSet net);

} // namespace radon_nets
