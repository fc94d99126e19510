#include "brute.hpp"
#include "corpus.hpp"

#include "radon_nets/io.hpp"
#include "radon_nets/params.hpp"
#include "radon_nets/spaces.hpp"

#include <doctest.h>

using namespace radon_nets;
using namespace radon_nets::testing;

namespace {

long cross(std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// q lies in the convex hull of pts iff it lies in some point, segment or
/// triangle spanned by them.
bool in_hull_caratheodory(const std::vector<std::pair<long, long>>& pts, std::pair<long, long> q) {
    auto on_segment = [&](auto a, auto b) {
        return cross(a, b, q) == 0 && std::min(a.first, b.first) <= q.first && q.first <= std::max(a.first, b.first) &&
               std::min(a.second, b.second) <= q.second && q.second <= std::max(a.second, b.second);
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == q)
            return true;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (on_segment(pts[i], pts[j]))
                return true;
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                if (cross(pts[i], pts[j], pts[k]) == 0)
                    continue;
                const long d1 = cross(pts[i], pts[j], q);
                const long d2 = cross(pts[j], pts[k], q);
                const long d3 = cross(pts[k], pts[i], q);
                const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
                const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
                if (!(neg && pos))
                    return true;
            }
        }
    }
    return false;
}

std::vector<PointSet> brute_lattice_family(std::size_t w, std::size_t h) {
    std::vector<std::pair<long, long>> grid;
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x)
            grid.emplace_back(static_cast<long>(x), static_cast<long>(y));
    std::vector<PointSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << grid.size()); ++bits) {
        std::vector<std::pair<long, long>> pts;
        PointSet(bits).for_each([&](std::size_t i) { pts.push_back(grid[i]); });
        bool closed = true;
        for (std::size_t i = 0; i < grid.size() && closed; ++i)
            if (!((bits >> i) & 1u) && in_hull_caratheodory(pts, grid[i]))
                closed = false;
        if (closed)
            out.emplace_back(bits);
    }
    return out;
}

} // namespace

TEST_CASE("power_set_space") {
    CHECK(radon_number(power_set_space(1)).radon == 2);
    CHECK(radon_number(power_set_space(5)).radon == 6);
    const auto p3 = power_set_space(3);
    CHECK(halfspaces(p3, false) == p3.convex());
    CHECK(is_separable(p3).separable);
    CHECK_THROWS_AS(power_set_space(0), PreconditionError);
    CHECK_THROWS_AS(power_set_space(17), PreconditionError);
}

TEST_CASE("cylinder_space") {
    const std::size_t expected[] = {0, 4, 10, 28, 82};
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(cylinder_space(n).convex().size() == expected[n]);
    const auto c2 = cylinder_space(2);
    CHECK(c2.ground().labels() == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(helly_number(halfspaces(c2, false), c2.all()).helly == 2);
    CHECK(radon_number(c2).radon == 3);
    CHECK(halfspaces(cylinder_space(4), true).size() == 8);
    CHECK_THROWS_AS(cylinder_space(7), PreconditionError);
}

TEST_CASE("subtree_space") {
    CHECK(radon_number(subtree_space(path_tree(3))).radon == 3);
    const auto star = radon_number(subtree_space(star_tree(5)));
    CHECK(star.radon <= 4);
    CHECK(star.radon == brute_radon(subtree_space(star_tree(5))));
    for (std::size_t k = 1; k <= 10; ++k)
        CHECK(subtree_space(path_tree(k)).convex().size() == k * (k + 1) / 2 + 1);
    CHECK_THROWS_AS(subtree_space(parse_tree("a-b,b-c,c-a")), PreconditionError);
    CHECK_THROWS_AS(subtree_space(parse_tree("a-b,c-d")), PreconditionError);
    CHECK(subtree_space(parse_tree("solo")).convex().size() == 2);
}

TEST_CASE("free tree enumeration counts") {
    const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(all_free_trees(n).size() == expected[n]);
}

TEST_CASE("poset enumeration counts") {
    const std::size_t expected[] = {0, 1, 2, 5, 16};
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(all_posets(n).size() == expected[n]);
}

TEST_CASE("lattice_convex_space") {
    SUBCASE("2x2 grid is the power set") {
        CHECK(lattice_convex_space(2, 2).convex() == power_set_space(4).convex());
    }
    SUBCASE("3x3 grid excludes the long diagonal pair") {
        const auto g = lattice_convex_space(3, 3);
        CHECK_FALSE(g.is_convex(PointSet::of({0, 8})));
        CHECK(g.is_convex(PointSet::of({0, 4, 8})));
        CHECK(g.ground().label(4) == "(1,1)");
    }
    SUBCASE("matches subset-by-subset hull test") {
        for (auto [w, h] : {std::pair{1, 4}, {2, 3}, {3, 3}, {3, 4}}) {
            const auto space = lattice_convex_space(w, h);
            CHECK(space.convex() == SetFamily(brute_lattice_family(w, h)));
        }
    }
    SUBCASE("separable") {
        for (std::size_t w = 1; w <= 3; ++w)
            for (std::size_t h = 1; h <= 3; ++h)
                CHECK(is_separable(lattice_convex_space(w, h)).separable);
    }
    CHECK_THROWS_AS(lattice_convex_space(5, 6), PreconditionError);
}

TEST_CASE("linear_extension_space") {
    const auto antichain = linear_extension_space(parse_poset("abc", ""));
    CHECK(antichain.size() == 6);
    const auto chain = linear_extension_space(parse_poset("abc", "a<b,b<c"));
    CHECK(chain.size() == 1);
    CHECK(chain.convex().sets() == std::vector<PointSet>{PointSet{}, PointSet::of({0})});
    CHECK(chain.ground().label(0) == "abc");
    CHECK_THROWS_AS(parse_poset("ab", "a<b,b<a"), PreconditionError);
    CHECK_THROWS_AS(linear_extension_space(parse_poset("abcde", "")), PreconditionError);
}

TEST_CASE("linear extension half-spaces are single added relations") {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const Poset& base : all_posets(n)) {
            const auto space = linear_extension_space(base);
            // Recompute the extensions in the same order the generator uses.
            std::vector<std::string> labels = space.ground().labels();
            std::vector<PointSet> relation_sets;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    if (x == y || base.comparable(x, y))
                        continue;
                    PointSet before;
                    for (std::size_t e = 0; e < labels.size(); ++e)
                        if (labels[e].find(base.elements[x]) < labels[e].find(base.elements[y]))
                            before = before.with(e);
                    relation_sets.push_back(before);
                }
            CHECK(halfspaces(space, true) == SetFamily(relation_sets));
        }
    }
}

TEST_CASE("every generator yields valid separable spaces") {
    for (const auto& entry : standard_corpus(40)) {
        CHECK_MESSAGE(is_separable(entry.space).separable, entry.name);
        CHECK_NOTHROW(validate_space(entry.space.ground(), entry.space.convex().sets()));
    }
}

TEST_CASE("random_separable_space is deterministic") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = random_separable_space(6, seed);
        const auto b = random_separable_space(6, seed);
        CHECK(serialize_space("r", a) == serialize_space("r", b));
        CHECK(is_separable(a).separable);
    }
}

TEST_CASE("generate dispatches on kind") {
    GeneratorSpec spec;
    spec.kind = parse_generator_kind("cylinders");
    spec.n = 3;
    const auto named = generate(spec);
    CHECK(named.space.size() == 8);
    CHECK(named.space.convex().size() == 28);
    CHECK_THROWS_AS(parse_generator_kind("subgroups"), ParseError);
}
