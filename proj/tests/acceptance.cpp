// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "corpus.hpp"

#include "radon_nets/lowerbound.hpp"
#include "radon_nets/netbuild.hpp"
#include "radon_nets/oracle.hpp"
#include "radon_nets/params.hpp"
#include "radon_nets/spaces.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace radon_nets;
using namespace radon_nets::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = -1;  ///< measured elsewhere when set
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 10)
            failures.push_back(what);
    }
};

std::string eps_str(const Rational& eps) { return format_rational(eps); }

const std::vector<CorpusSpace>& corpus() {
    static const std::vector<CorpusSpace> spaces = standard_corpus(200);
    return spaces;
}

std::vector<Distribution> distributions_for(std::size_t points, std::size_t space_index) {
    std::vector<Distribution> out{Distribution::uniform(points)};
    for (std::uint64_t i = 0; i < 25; ++i)
        out.push_back(random_distribution(points, 7919 * space_index + i));
    return out;
}

Outcome invariant_inequalities() {
    Outcome o;
    const auto start = Clock::now();
    std::size_t checked = 0;
    for (const auto& entry : corpus()) {
        const SetFamily half(halfspaces(entry.space, false));
        const std::size_t r = radon_number(entry.space).radon;
        const std::size_t h = helly_number(half, entry.space.all()).helly;
        const std::size_t v = vc_dimension(half, entry.space.all()).vc;
        if (h > r - 1 || v > r - 1)
            o.fail(entry.name + ": radon " + std::to_string(r) + " helly " + std::to_string(h) + " vc " +
                   std::to_string(v));
        ++checked;
    }
    const double elapsed = seconds_since(start);
    if (elapsed > 60)
        o.fail("runtime " + std::to_string(elapsed) + " s exceeds 60 s");
    o.detail = std::to_string(checked) + " spaces, helly <= radon-1 and vc <= radon-1";
    return o;
}

Outcome reference_values() {
    Outcome o;
    for (std::size_t m = 1; m <= 5; ++m) {
        const std::size_t r = radon_number(power_set_space(m)).radon;
        if (r != m + 1)
            o.fail("radon(power " + std::to_string(m) + ") = " + std::to_string(r));
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto cyl = cylinder_space(n);
        const std::size_t h = helly_number(SetFamily(halfspaces(cyl, false)), cyl.all()).helly;
        if (h != 2)
            o.fail("helly(cylinders " + std::to_string(n) + ") = " + std::to_string(h));
    }
    std::size_t trees = 0;
    for (std::size_t v = 1; v <= 8; ++v)
        for (const auto& tree : all_free_trees(v)) {
            const std::size_t r = radon_number(subtree_space(tree)).radon;
            if (r > 4)
                o.fail("tree on " + std::to_string(v) + " vertices has radon " + std::to_string(r));
            ++trees;
        }
    for (std::size_t m = 3; m <= 6; ++m) {
        std::vector<PointSet> family{PointSet::full(m)};
        for (std::size_t x = 0; x < m; ++x)
            family.push_back(PointSet::full(m).without(x));
        const std::size_t v = vc_dimension(SetFamily(family), PointSet::full(m)).vc;
        if (v != 1)
            o.fail("vc({X} u {X-x}) at m=" + std::to_string(m) + " is " + std::to_string(v));
    }
    o.detail = "radon(power m)=m+1 for m<=5, helly(cylinders 2,3)=2, radon<=4 on " + std::to_string(trees) +
               " trees, vc=1 for m=3..6";
    return o;
}

struct SandwichStats {
    std::size_t instances = 0;
    std::size_t base_cases = 0;
    std::size_t helly_two = 0;
    std::size_t fallback = 0;
    double net_seconds = 0;
    double sandwich_seconds = 0;
};

/// Criteria 3 and 4 share their instances, so one pass fills both outcomes.
void nets_and_sandwich(Outcome& nets, Outcome& sandwich, SandwichStats& stats) {
    const auto& spaces = corpus();
    for (std::size_t si = 0; si < spaces.size(); ++si) {
        const auto& entry = spaces[si];
        const auto helly_convex = helly_number(entry.space.convex(), entry.space.all()).helly;
        for (const Distribution& mu : distributions_for(entry.space.size(), si)) {
            for (const Rational& eps : standard_eps()) {
                const std::string tag = entry.name + " eps " + eps_str(eps);
                ++stats.instances;

                auto start = Clock::now();
                const WeakNet net = build_weak_net(entry.space, mu, eps);
                const NetVerification check = verify_weak_net(entry.space, mu, eps, net.points);
                if (!check.ok)
                    nets.fail(tag + ": built net misses " + to_string(*check.counterexample));
                const Rational limit = 1 - Rational(1, static_cast<long long>(net.params.helly));
                if (eps > limit) {
                    ++stats.base_cases;
                    if (net.points.size() != 1)
                        nets.fail(tag + ": base case net has size " + std::to_string(net.points.size()));
                }
                stats.net_seconds += seconds_since(start);

                start = Clock::now();
                const std::size_t best = minimal_weak_net(entry.space, mu, eps).size;
                std::size_t chi = 0;
                try {
                    chi = chromatic_lower_bound(entry.space, mu, eps, 256).bound;
                } catch (const TooLargeForExactError&) {
                    ++stats.fallback;
                    sandwich.fail(tag + ": disjointness graph too large for exact colouring");
                    continue;
                }
                if (chi > best || best > net.points.size())
                    sandwich.fail(tag + ": chi " + std::to_string(chi) + " oracle " + std::to_string(best) +
                                  " net " + std::to_string(net.points.size()));
                if (helly_convex == 2) {
                    ++stats.helly_two;
                    if (chi != best)
                        sandwich.fail(tag + ": Helly number 2 but chi " + std::to_string(chi) + " < oracle " +
                                      std::to_string(best));
                }
                stats.sandwich_seconds += seconds_since(start);
            }
        }
    }
    if (stats.net_seconds > 300)
        nets.fail("runtime " + std::to_string(stats.net_seconds) + " s exceeds 300 s");
    nets.detail = std::to_string(stats.instances) + " instances verified, " + std::to_string(stats.base_cases) +
                  " base cases of size 1";
    sandwich.detail = std::to_string(stats.instances) + " instances chi <= oracle <= net, equality on " +
                      std::to_string(stats.helly_two) + " Helly-2 instances";
}

Outcome kneser_exactness() {
    Outcome o;
    const auto start = Clock::now();
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            const KneserGraph g = kneser_graph(n, k, 128);
            const std::size_t chi = exact_chromatic_number(g.graph, 128).chromatic;
            const std::size_t expect = 2 * k <= n ? n - 2 * k + 2 : 1;
            if (chi != expect)
                o.fail("chi(KG(" + std::to_string(n) + "," + std::to_string(k) + ")) = " + std::to_string(chi));
            ++graphs;
        }
    const AlonCheck a4 = alon_bound_check(4);
    const AlonCheck a8 = alon_bound_check(8);
    if (a4.chromatic != 4 || !a4.holds)
        o.fail("chi(KG(4,1)) = " + std::to_string(a4.chromatic));
    if (a8.chromatic != 6 || !a8.holds)
        o.fail("chi(KG(8,2)) = " + std::to_string(a8.chromatic));
    const double elapsed = seconds_since(start);
    if (elapsed > 60)
        o.fail("runtime " + std::to_string(elapsed) + " s exceeds 60 s");
    o.detail = std::to_string(graphs) + " Kneser graphs match n-2k+2 (or 1), chi(KG(4,1))=4 > 0.4, chi(KG(8,2))=6 > 0.8";
    return o;
}

Outcome cylinder_instance() {
    Outcome o;
    const auto space = cylinder_space(4);
    const auto best = minimal_weak_net(space, Distribution::uniform(16), Rational(1, 4));
    if (best.size < 2)
        o.fail("oracle size " + std::to_string(best.size) + " < 2");
    std::vector<std::string> labels;
    best.witness.for_each([&](std::size_t i) { labels.push_back(space.ground().label(i)); });
    std::string witness;
    for (const auto& l : labels)
        witness += (witness.empty() ? "" : ",") + l;
    o.detail = "cylinders n=4, uniform, eps 1/4: minimum weak net size " + std::to_string(best.size) +
               " >= 2, witness {" + witness + "}";
    return o;
}

Outcome radon_instances() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& entry : corpus()) {
        const LowerBoundCertificate cert = radon_lower_bound(entry.space, Rational(1, 4));
        const std::size_t r0 = cert.shattered_size + 1;
        if (r0 < 3)
            continue;
        const std::size_t best = minimal_weak_net(entry.space, cert.mu, Rational(1, 4)).size;
        const std::size_t s = r0 - 1;
        const std::size_t linear = (s + 1) / 2;
        if (best < linear)
            o.fail(entry.name + ": oracle " + std::to_string(best) + " < " + std::to_string(linear));
        const std::size_t k = (s + 3) / 4;
        if (s >= 2 * k && best < s - 2 * k + 2)
            o.fail(entry.name + ": oracle " + std::to_string(best) + " < Kneser value " +
                   std::to_string(s - 2 * k + 2));
        ++checked;
    }
    o.detail = std::to_string(checked) + " spaces with radon >= 3 meet both lower bounds at eps 1/4";
    return o;
}

std::size_t union_size(const std::vector<std::vector<PointSet>>& families) {
    std::set<std::uint64_t> all;
    for (const auto& f : families)
        for (PointSet s : f)
            all.insert(s.bits());
    return all.size();
}

Outcome kleitman() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::size_t checked = 0;
    while (checked < 100) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t s = 1 + rng() % 4;
        std::vector<std::vector<PointSet>> families;
        for (std::size_t f = 0; f < s; ++f) {
            std::vector<PointSet> fam;
            for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
                const PointSet c(b);
                if (rng() % 2 && std::all_of(fam.begin(), fam.end(), [&](PointSet x) { return x.intersects(c); }))
                    fam.push_back(c);
            }
            families.push_back(fam);
        }
        const long long bound = (1LL << n) - (s >= n ? 1LL : (1LL << (n - s)));
        const bool holds = kleitman_check(n, families);
        if (!holds || static_cast<long long>(union_size(families)) > bound)
            o.fail("random case " + std::to_string(checked));
        ++checked;
    }
    const std::vector<PointSet> f1{PointSet::of({0}), PointSet::of({0, 1})};
    const std::vector<PointSet> f2{PointSet::of({1}), PointSet::of({0, 1})};
    if (!kleitman_check(2, {f1}) || union_size({f1}) != 2)
        o.fail("tight case n=2 s=1");
    if (!kleitman_check(2, {f1, f2}) || union_size({f1, f2}) != 3)
        o.fail("tight case n=2 s=2");
    o.detail = "100 random tuples within 2^n - 2^(n-s), tight cases |union| = 2 and 3";
    return o;
}

Outcome embedding() {
    Outcome o;
    const auto space = power_set_space(4);
    const LowerBoundCertificate cert = radon_lower_bound(space, Rational(1, 4));
    try {
        const KneserEmbedding emb = kneser_embedding(space, cert);
        std::ostringstream map;
        for (std::size_t i = 0; i < emb.vertex_map.size(); ++i)
            map << (i ? " " : "") << to_string(emb.kneser.subsets[i]) << "->"
                << to_string(emb.graph.vertices[emb.vertex_map[i]]);
        if (emb.kneser.n != 4 || emb.kneser.k != 1)
            o.fail("unexpected parameters");
        o.detail = "KG(4,1) ~ induced subgraph of G(mu,1/4): " + map.str();
    } catch (const ConsistencyError& e) {
        o.fail(e.what());
    }
    return o;
}

bool report(int number, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d (%s): %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", number, title.c_str(),
                o.detail.c_str(), o.seconds >= 0 ? o.seconds : seconds_since(start));
    for (const auto& f : o.failures)
        std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    return o.pass;
}

} // namespace

int main() {
    bool ok = true;
    ok &= report(1, "invariant inequalities", invariant_inequalities);
    ok &= report(2, "reference values", reference_values);

    Outcome nets, sandwich;
    SandwichStats stats;
    try {
        nets_and_sandwich(nets, sandwich, stats);
    } catch (const std::exception& e) {
        nets.fail(std::string("exception: ") + e.what());
        sandwich.fail(std::string("exception: ") + e.what());
    }
    nets.seconds = stats.net_seconds;
    sandwich.seconds = stats.sandwich_seconds;
    ok &= report(3, "net correctness", [&] { return nets; });
    ok &= report(4, "soundness sandwich", [&] { return sandwich; });

    ok &= report(5, "Kneser chromatic numbers", kneser_exactness);
    ok &= report(6, "cylinder instance", cylinder_instance);
    ok &= report(7, "Radon lower bounds", radon_instances);
    ok &= report(8, "Kleitman bound", kleitman);
    ok &= report(9, "Kneser embedding", embedding);
    std::printf("%s\n", ok ? "all criteria passed" : "some criteria FAILED");
    return ok ? 0 : 1;
}
