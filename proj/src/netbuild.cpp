#include "radon_nets/netbuild.hpp"

#include "radon_nets/params.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

namespace radon_nets {

std::size_t n_of_eps(const Rational& eps, std::size_t helly) {
    if (eps <= 0 || eps > 1)
        throw PreconditionError("eps must lie in (0, 1]");
    if (helly == 0)
        throw PreconditionError("Helly number must be positive");
    const Rational h(static_cast<long long>(helly));
    const Rational target = 1 - 1 / h;
    const Rational growth = 1 + 1 / (2 * h);
    Rational value = eps;
    std::size_t n = 0;
    while (!(value > target)) {
        value *= growth;
        ++n;
    }
    return n;
}

NetParams make_net_params(const Rational& eps, std::size_t helly, std::size_t vc) {
    NetParams p;
    p.eps = eps;
    p.helly = helly;
    p.vc = vc;
    p.depth = n_of_eps(eps, helly);
    const Rational two_h(2 * static_cast<long long>(helly));
    p.delta = eps / (two_h * two_h);
    p.eps_next = (1 + 1 / two_h) * eps;
    return p;
}

std::size_t helly_point(const ConvexitySpace& space, const SetFamily& dense) {
    PointSet common = space.all();
    for (PointSet b : dense)
        common = common & b;
    if (common.empty())
        throw EmptyIntersectionError();
    return common.first();
}

namespace {

/// mass/total > 1 - 1/h, i.e. mass * h > total * (h - 1).
bool dense(std::int64_t mass, std::int64_t total, std::size_t helly) {
    const auto h = static_cast<__int128>(helly);
    return static_cast<__int128>(mass) * h > static_cast<__int128>(total) * (h - 1);
}

} // namespace

SetFamily dense_halfspaces(const SetFamily& halfspaces, const Distribution& mu, std::size_t helly) {
    std::vector<PointSet> out;
    for (PointSet b : halfspaces)
        if (dense(mu.mass(b), mu.total(), helly))
            out.push_back(b);
    return SetFamily(std::move(out));
}

SetFamily greedy_packing(const SetFamily& family, const Distribution& mu, const Rational& delta) {
    if (delta < 0)
        throw PreconditionError("packing radius must be non-negative");
    const std::int64_t within = mu.at_most(delta);
    std::vector<PointSet> chosen;
    for (PointSet b : family) {
        const bool separated =
            std::all_of(chosen.begin(), chosen.end(), [&](PointSet a) { return mu.mass(a ^ b) > within; });
        if (separated)
            chosen.push_back(b);
    }
    for (PointSet b : family) {
        const bool covered =
            std::any_of(chosen.begin(), chosen.end(), [&](PointSet a) { return mu.mass(a ^ b) <= within; });
        if (!covered)
            throw ConsistencyError("greedy packing is not a cover of " + to_string(b));
    }
    return SetFamily(std::move(chosen));
}

namespace {

class NetBuilder {
public:
    NetBuilder(const ConvexitySpace& space, const SetFamily& halfspaces, const NetParams& params)
        : space_(space), halfspaces_(halfspaces), params_(params) {
        Rational eps = params.eps;
        const Rational growth = 1 + Rational(1, 2 * static_cast<long long>(params.helly));
        for (std::size_t level = 0; level <= params.depth; ++level) {
            level_eps_.push_back(eps);
            eps *= growth;
        }
    }

    std::shared_ptr<const NetNode> build(const Distribution& mu, std::size_t level) {
        auto key = std::make_pair(level, mu.masses());
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        auto node = std::make_shared<NetNode>(NetNode{.mu = mu});
        node->level = level;
        node->eps = level_eps_.at(level);
        const SetFamily dense = dense_halfspaces(halfspaces_, mu, params_.helly);
        node->dense_count = dense.size();
        node->helly_point = helly_point(space_, dense);
        node->points = PointSet::singleton(node->helly_point);

        const std::size_t h = params_.helly;
        node->base_case = node->eps > 1 - Rational(1, static_cast<long long>(h));
        if (!node->base_case) {
            if (level >= params_.depth)
                throw ConsistencyError("recursion exceeded the precomputed depth");
            const Rational two_h(2 * static_cast<long long>(h));
            const Rational delta = node->eps / (two_h * two_h);
            node->packing = greedy_packing(halfspaces_, mu, delta);
            check_packing_size(node->packing.size(), delta);
            for (PointSet a : node->packing) {
                if (mu.mass(a) == 0)
                    continue;
                auto child = build(conditional(mu, a), level + 1);
                node->points = node->points | child->points;
                node->children_sets.push_back(a);
                node->children.push_back(std::move(child));
            }
        }
        memo_.emplace(std::move(key), node);
        return node;
    }

    std::size_t distinct_nodes() const { return memo_.size(); }
    std::vector<std::string> take_warnings() { return std::move(warnings_); }

private:
    void check_packing_size(std::size_t size, const Rational& delta) {
        const double v = static_cast<double>(params_.vc);
        const double log_bound = v * std::log(4.0 * std::exp(2.0) / to_double(delta));
        if (std::log(static_cast<double>(size)) > log_bound + 1e-9)
            warnings_.push_back("packing of size " + std::to_string(size) + " exceeds (4e^2/delta)^v for delta " +
                                format_rational(delta));
    }

    const ConvexitySpace& space_;
    const SetFamily& halfspaces_;
    NetParams params_;
    std::vector<Rational> level_eps_;
    std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::shared_ptr<const NetNode>> memo_;
    std::vector<std::string> warnings_;
};

double unfolded_size(const NetNode& node, std::unordered_map<const NetNode*, double>& memo) {
    if (auto it = memo.find(&node); it != memo.end())
        return it->second;
    double total = 1;
    for (const auto& child : node.children)
        total += unfolded_size(*child, memo);
    memo.emplace(&node, total);
    return total;
}

} // namespace

WeakNet build_weak_net(const ConvexitySpace& space, const SetFamily& halfspaces, const Distribution& mu,
                       const Rational& eps) {
    if (eps <= 0 || eps > 1)
        throw PreconditionError("eps must lie in (0, 1]");
    if (mu.size() != space.size())
        throw PreconditionError("distribution size does not match the ground set");
    if (space.size() == 0)
        throw PreconditionError("cannot build a net over an empty ground set");
    const ConvexitySpace generated = intersection_closure(space.ground(), halfspaces.sets());
    if (!(generated.convex() == space.convex()))
        throw PreconditionError("the given half-spaces do not generate the convex family");

    const HellyResult helly = helly_number(halfspaces, space.all());
    const VcResult vc = vc_dimension(halfspaces, space.all());

    WeakNet net;
    net.params = make_net_params(eps, helly.helly, vc.vc);
    NetBuilder builder(space, halfspaces, net.params);
    net.trace = builder.build(mu, 0);
    net.points = net.trace->points;
    net.distinct_nodes = builder.distinct_nodes();
    std::unordered_map<const NetNode*, double> memo;
    net.tree_nodes = unfolded_size(*net.trace, memo);
    net.warnings = builder.take_warnings();

    const double h = static_cast<double>(helly.helly);
    const double e = to_double(eps);
    net.log10_size_bound = 4.0 * h * static_cast<double>(vc.vc) * std::log(1.0 / e) * std::log10(120.0 * h * h / e);

    const NetVerification check = verify_weak_net(space, mu, eps, net.points);
    if (!check.ok)
        throw ConsistencyError("constructed net misses convex set " + to_string(*check.counterexample));
    if (std::log10(static_cast<double>(net.points.size())) > net.log10_size_bound + 1e-9)
        throw ConsistencyError("constructed net exceeds the size bound");
    return net;
}

WeakNet build_weak_net(const ConvexitySpace& space, const Distribution& mu, const Rational& eps) {
    return build_weak_net(space, halfspaces(space, false), mu, eps);
}

NetVerification verify_weak_net(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                PointSet net) {
    const std::int64_t threshold = mu.at_least(eps);
    NetVerification out;
    std::int64_t worst = -1;
    for (PointSet c : space.convex()) {
        const std::int64_t m = mu.mass(c);
        if (m >= threshold && !c.intersects(net) && m > worst) {
            worst = m;
            out.ok = false;
            out.counterexample = c;
        }
    }
    return out;
}

} // namespace radon_nets
