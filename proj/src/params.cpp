#include "radon_nets/params.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace radon_nets {

namespace {

class HullCache {
public:
    explicit HullCache(const ConvexitySpace& space) : space_(space) {}

    PointSet operator()(PointSet y) {
        if (y.empty())
            return y;
        auto [it, inserted] = cache_.try_emplace(y, PointSet{});
        if (inserted)
            it->second = convex_hull(space_, y);
        return it->second;
    }

private:
    const ConvexitySpace& space_;
    std::unordered_map<PointSet, PointSet, PointSetHash> cache_;
};

bool shattered_with(HullCache& hull, PointSet y) {
    if (y.size() < 2)
        return true;
    // Enumerate bipartitions with the lowest member fixed on the first side.
    const std::size_t anchor = y.first();
    const PointSet rest = y.without(anchor);
    const std::uint64_t r = rest.bits();
    for (std::uint64_t sub = r;; sub = (sub - 1) & r) {
        const PointSet first = PointSet(sub).with(anchor);
        const PointSet second = y.minus(first);
        if (!second.empty() && hull(first).intersects(hull(second)))
            return false;
        if (sub == 0)
            break;
    }
    return true;
}

/// Level-wise search for the largest member of a downward-closed set system
/// over `all`; `test` decides membership. Returns the canonically least set
/// of maximum size.
template <typename Test>
PointSet largest_downward_closed(PointSet all, Test&& test) {
    std::vector<PointSet> level{PointSet{}};
    while (true) {
        std::unordered_set<PointSet, PointSetHash> members(level.begin(), level.end());
        std::vector<PointSet> next;
        for (PointSet s : level) {
            const std::size_t start = s.empty() ? 0 : s.last() + 1;
            for (std::size_t x = start; x < 64 && all.contains(x) ; ++x) {
                const PointSet candidate = s.with(x);
                bool subsets_ok = true;
                candidate.for_each([&](std::size_t y) {
                    if (subsets_ok && y != x && !members.contains(candidate.without(y)))
                        subsets_ok = false;
                });
                if (subsets_ok && test(candidate))
                    next.push_back(candidate);
            }
        }
        if (next.empty())
            return *std::min_element(level.begin(), level.end(), CanonicalLess{});
        level = std::move(next);
    }
}

} // namespace

bool is_radon_shattered(const ConvexitySpace& space, PointSet y) {
    HullCache hull(space);
    return shattered_with(hull, y);
}

RadonResult radon_number(const ConvexitySpace& space) {
    HullCache hull(space);
    const PointSet witness =
        largest_downward_closed(space.all(), [&](PointSet y) { return shattered_with(hull, y); });
    return {witness.size() + 1, witness};
}

namespace {

struct HellySearch {
    const std::vector<PointSet>& sets;
    PointSet all;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;

    PointSet intersection_without(std::size_t skip, std::size_t extra) const {
        PointSet out = all;
        for (std::size_t k = 0; k < chosen.size(); ++k)
            if (k != skip)
                out = out & sets[chosen[k]];
        return out & sets[extra];
    }

    void run(std::size_t start, PointSet current) {
        // Each further member must shrink the intersection, so at most
        // |current| more members fit before it becomes empty.
        if (chosen.size() + current.size() <= best.size())
            return;
        for (std::size_t i = start; i < sets.size(); ++i) {
            const PointSet next = current & sets[i];
            if (next == current)
                continue;
            bool essential = true;
            for (std::size_t k = 0; k < chosen.size() && essential; ++k)
                essential = intersection_without(k, i) != next;
            if (!essential)
                continue;
            chosen.push_back(i);
            if (next.empty()) {
                if (chosen.size() > best.size())
                    best = chosen;
            } else {
                run(i + 1, next);
            }
            chosen.pop_back();
            if (chosen.size() + current.size() <= best.size())
                return;
        }
    }
};

} // namespace

HellyResult helly_number(const SetFamily& family, PointSet all) {
    PointSet total = all;
    for (PointSet b : family)
        total = total & b;
    // An empty ground set makes the empty subfamily the only witness.
    if (!total.empty() || all.empty())
        return {1, {}, true};
    HellySearch search{family.sets(), all, {}, {}};
    search.run(0, all);
    HellyResult out;
    out.helly = search.best.size();
    for (std::size_t i : search.best)
        out.witness.push_back(family[i]);
    return out;
}

VcResult vc_dimension(const SetFamily& family, PointSet all) {
    if (family.empty())
        return {0, {}};
    const PointSet witness = largest_downward_closed(all, [&](PointSet y) {
        std::unordered_set<PointSet, PointSetHash> traces;
        for (PointSet b : family)
            traces.insert(b & y);
        return traces.size() == (std::size_t{1} << y.size());
    });
    return {witness.size(), witness};
}

ParamsReport analyze(const ConvexitySpace& space) {
    const SetFamily half = halfspaces(space, false);
    const RadonResult radon = radon_number(space);
    const HellyResult helly = helly_number(half, space.all());
    const VcResult vc = vc_dimension(half, space.all());
    const SeparabilityResult sep = is_separable(space);

    ParamsReport report;
    report.radon = radon.radon;
    report.radon_witness = radon.witness;
    report.helly = helly.helly;
    report.helly_witness = helly.witness;
    report.helly_vacuous = helly.vacuous;
    report.vc = vc.vc;
    report.vc_witness = vc.witness;
    report.separable = sep.separable;
    report.separation_witness_set = sep.convex_set;
    report.separation_witness_point = sep.point;

    if (report.separable && (report.helly > report.radon - 1 || report.vc > report.radon - 1))
        throw ConsistencyError("separable space violates helly <= radon-1 or vc <= radon-1 (radon " +
                               std::to_string(report.radon) + ", helly " + std::to_string(report.helly) +
                               ", vc " + std::to_string(report.vc) + ")");
    return report;
}

} // namespace radon_nets
