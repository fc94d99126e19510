#include "radon_nets/oracle.hpp"

#include <algorithm>

namespace radon_nets {

std::vector<PointSet> minimal_targets(std::vector<PointSet> targets) {
    // Sorting by size puts every proper subset before its supersets.
    std::sort(targets.begin(), targets.end(), [](PointSet a, PointSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::vector<PointSet> kept;
    for (PointSet t : targets) {
        const bool dominated = std::any_of(kept.begin(), kept.end(), [&](PointSet k) { return k.subset_of(t); });
        if (!dominated)
            kept.push_back(t);
    }
    std::sort(kept.begin(), kept.end(), CanonicalLess{});
    return kept;
}

namespace {

std::vector<PointSet> unhit(const std::vector<PointSet>& targets, std::size_t point) {
    std::vector<PointSet> out;
    out.reserve(targets.size());
    for (PointSet t : targets)
        if (!t.contains(point))
            out.push_back(t);
    return out;
}

/// Pairwise disjoint targets (within `allowed`) each need their own point.
std::size_t disjoint_packing_bound(const std::vector<PointSet>& targets, PointSet allowed) {
    std::vector<PointSet> restricted;
    restricted.reserve(targets.size());
    for (PointSet t : targets)
        restricted.push_back(t & allowed);
    std::sort(restricted.begin(), restricted.end(), [](PointSet a, PointSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    PointSet used;
    std::size_t count = 0;
    for (PointSet t : restricted) {
        if (!t.intersects(used)) {
            used = used | t;
            ++count;
        }
    }
    return count;
}

bool hittable(const std::vector<PointSet>& targets, PointSet allowed, std::size_t budget) {
    if (targets.empty())
        return true;
    if (budget == 0)
        return false;
    std::size_t branch = 0;
    std::size_t fewest = 65;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const std::size_t options = (targets[i] & allowed).size();
        if (options == 0)
            return false;
        if (options < fewest) {
            fewest = options;
            branch = i;
        }
    }
    if (disjoint_packing_bound(targets, allowed) > budget)
        return false;
    // Once a point has been tried, later branches may assume it is unused.
    PointSet remaining = allowed;
    bool found = false;
    (targets[branch] & allowed).for_each([&](std::size_t p) {
        if (found)
            return;
        if (hittable(unhit(targets, p), remaining.without(p), budget - 1))
            found = true;
        remaining = remaining.without(p);
    });
    return found;
}

} // namespace

HittingSetSolution solve_hitting_set(const HittingSetInstance& instance) {
    for (PointSet t : instance.targets)
        if (!t.intersects(instance.universe))
            throw InfeasibleError(t);
    const std::vector<PointSet>& targets = instance.targets;
    std::size_t k = targets.empty() ? 0 : std::max<std::size_t>(1, disjoint_packing_bound(targets, instance.universe));
    while (!hittable(targets, instance.universe, k))
        ++k;

    // Canonically least optimum: fix members one at a time, each the smallest
    // point that still admits a completion using only larger points.
    HittingSetSolution out{k, {}};
    std::vector<PointSet> rest = targets;
    PointSet allowed = instance.universe;
    for (std::size_t slot = 0; slot < k && !rest.empty(); ++slot) {
        bool placed = false;
        for (std::size_t p : allowed.indices()) {
            const PointSet above = PointSet(allowed.bits() & ~((std::uint64_t{2} << p) - 1));
            std::vector<PointSet> after = unhit(rest, p);
            if (hittable(after, above, k - slot - 1)) {
                out.witness = out.witness.with(p);
                rest = std::move(after);
                allowed = above;
                placed = true;
                break;
            }
        }
        if (!placed)
            throw ConsistencyError("hitting set reconstruction failed");
    }
    return out;
}

HittingSetInstance weak_net_instance(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                     NetCandidates candidates, bool reduce) {
    if (eps <= 0)
        throw PreconditionError("eps must be positive");
    if (mu.size() != space.size())
        throw PreconditionError("distribution size does not match the ground set");
    const std::int64_t threshold = mu.at_least(eps);
    std::vector<PointSet> targets;
    for (PointSet c : space.convex())
        if (mu.mass(c) >= threshold)
            targets.push_back(c);
    HittingSetInstance out;
    out.universe = candidates == NetCandidates::Weak ? space.all() : mu.support();
    out.targets = reduce ? minimal_targets(std::move(targets)) : std::move(targets);
    return out;
}

HittingSetSolution minimal_weak_net(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                    NetCandidates candidates) {
    return solve_hitting_set(weak_net_instance(space, mu, eps, candidates));
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, std::size_t k)
        : g_(g), k_(k), n_(g.vertex_count()), colors_(n_, kNone), counts_(n_ * k, 0), saturation_(n_, 0) {}

    bool run() { return extend(0, 0); }
    const std::vector<std::size_t>& colors() const { return colors_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t pick() const {
        std::size_t best = kNone;
        std::size_t best_sat = 0;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colors_[v] != kNone)
                continue;
            const std::size_t deg = g_.degree(v);
            if (best == kNone || saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = saturation_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(std::size_t v, std::size_t c, bool on) {
        colors_[v] = on ? c : kNone;
        const VertexSet& nb = g_.neighbours(v);
        for (std::size_t u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
            std::size_t& count = counts_[u * k_ + c];
            if (on) {
                if (count++ == 0)
                    ++saturation_[u];
            } else if (--count == 0) {
                --saturation_[u];
            }
        }
    }

    bool extend(std::size_t coloured, std::size_t used) {
        if (coloured == n_)
            return true;
        const std::size_t v = pick();
        if (saturation_[v] >= k_)
            return false;
        // Colours are interchangeable: a fresh colour is only ever tried once.
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (counts_[v * k_ + c] != 0)
                continue;
            assign(v, c, true);
            if (extend(coloured + 1, std::max(used, c + 1)))
                return true;
            assign(v, c, false);
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::size_t n_;
    std::vector<std::size_t> colors_;
    std::vector<std::size_t> counts_;
    std::vector<std::size_t> saturation_;
};

std::size_t greedy_clique_size(const Graph& g) {
    std::size_t best = g.vertex_count() == 0 ? 0 : 1;
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        VertexSet candidates = g.neighbours(start);
        std::size_t size = 1;
        while (candidates.any()) {
            std::size_t pick = VertexSet::npos;
            std::size_t pick_deg = 0;
            for (std::size_t u = candidates.find_first(); u != VertexSet::npos; u = candidates.find_next(u)) {
                const std::size_t deg = (g.neighbours(u) & candidates).count();
                if (pick == VertexSet::npos || deg > pick_deg) {
                    pick = u;
                    pick_deg = deg;
                }
            }
            candidates &= g.neighbours(pick);
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace

ColoringResult exact_chromatic_number(const Graph& graph, std::size_t cap) {
    if (graph.vertex_count() > cap)
        throw TooLargeError("exact coloring", graph.vertex_count(), cap);
    if (graph.vertex_count() == 0)
        return {0, {}};
    for (std::size_t k = greedy_clique_size(graph);; ++k) {
        ColoringSearch search(graph, k);
        if (search.run())
            return {k, search.colors()};
    }
}

bool is_proper_coloring(const Graph& graph, const std::vector<std::size_t>& colors) {
    if (colors.size() != graph.vertex_count())
        return false;
    for (auto [u, v] : graph.edges())
        if (colors[u] == colors[v])
            return false;
    return true;
}

} // namespace radon_nets
