#include "brute.hpp"
#include "corpus.hpp"

#include "radon_nets/lowerbound.hpp"
#include "radon_nets/oracle.hpp"
#include "radon_nets/params.hpp"
#include "radon_nets/spaces.hpp"

#include <doctest.h>

#include <random>

using namespace radon_nets;
using namespace radon_nets::testing;

TEST_CASE("disjointness graph examples") {
    const auto p4 = power_set_space(4);
    const auto g = disjointness_graph(p4, Distribution::uniform(4), Rational(1, 4));
    CHECK(g.vertices.size() == 15);
    std::vector<std::size_t> singles;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (g.vertices[i].size() == 1)
            singles.push_back(i);
    REQUIRE(singles.size() == 4);
    for (std::size_t a : singles)
        for (std::size_t b : singles)
            if (a != b)
                CHECK(g.graph.adjacent(a, b));

    const auto path = subtree_space(parse_tree("a-b,b-c"));
    const auto pg = disjointness_graph(path, Distribution::uniform(3), Rational(1, 3));
    CHECK(pg.vertices.size() == 6);
    CHECK(disjointness_graph(path, Distribution::uniform(3), Rational(3, 2)).vertices.empty());
}

TEST_CASE("disjointness graph edges are exactly the disjoint pairs") {
    std::mt19937_64 rng(3);
    for (const auto& entry : standard_corpus(20)) {
        const auto mu = random_distribution(entry.space.size(), rng());
        const auto g = disjointness_graph(entry.space, mu, Rational(1, 3));
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            CHECK(measure(mu, g.vertices[i]) >= Rational(1, 3));
            for (std::size_t j = 0; j < g.vertices.size(); ++j)
                if (i != j)
                    CHECK(g.graph.adjacent(i, j) == !g.vertices[i].intersects(g.vertices[j]));
        }
    }
}

TEST_CASE("chromatic lower bound examples") {
    CHECK(chromatic_lower_bound(power_set_space(4), Distribution::uniform(4), Rational(1, 4)).bound == 4);
    CHECK(chromatic_lower_bound(power_set_space(4), Distribution::uniform(4), Rational(2)).bound == 0);
    const auto cert = chromatic_lower_bound(cylinder_space(2), Distribution::uniform(4), Rational(1, 4));
    CHECK(cert.bound == 4);
    CHECK(cert.method == BoundMethod::ExactChromatic);
    CHECK(to_string(cert.method) == "exact-chromatic");
}

TEST_CASE("chromatic bound equals the chromatic number of the full graph") {
    std::mt19937_64 rng(5);
    std::size_t checked = 0;
    for (const auto& entry : standard_corpus(40)) {
        const auto mu = random_distribution(entry.space.size(), rng());
        for (const Rational& eps : standard_eps()) {
            const auto g = disjointness_graph(entry.space, mu, eps);
            if (g.vertices.size() > 9)
                continue;
            CHECK(chromatic_lower_bound(entry.space, mu, eps).bound == brute_chromatic(g.graph));
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("chromatic bound never exceeds the minimum weak net") {
    std::mt19937_64 rng(9);
    for (const auto& entry : standard_corpus(40)) {
        const auto mu = random_distribution(entry.space.size(), rng());
        for (const Rational& eps : standard_eps()) {
            try {
                const auto cert = chromatic_lower_bound(entry.space, mu, eps);
                CHECK(cert.bound <= minimal_weak_net(entry.space, mu, eps).size);
            } catch (const TooLargeForExactError&) {
            }
        }
    }
}

TEST_CASE("radon lower bound examples") {
    const auto cert = radon_lower_bound(power_set_space(4), Rational(1, 4));
    CHECK(cert.shattered_size == 4);
    CHECK(cert.kneser_k == 1);
    CHECK(cert.bound == 4);
    CHECK(cert.linear_value == 2);
    CHECK(cert.method == BoundMethod::KneserFormula);
    CHECK(radon_lower_bound(power_set_space(1), Rational(1, 4)).bound == 1);
    const auto half = radon_lower_bound(power_set_space(4), Rational(1, 2));
    CHECK(half.kneser_k == 2);
    CHECK(half.bound == 2);
}

TEST_CASE("radon bound is sound against the oracle") {
    for (const auto& entry : standard_corpus(30)) {
        for (const Rational& eps : standard_eps()) {
            const auto cert = radon_lower_bound(entry.space, eps);
            CHECK(cert.bound >= 1);
            CHECK(cert.bound <= minimal_weak_net(entry.space, cert.mu, eps).size);
        }
    }
}

TEST_CASE("kneser graphs") {
    const auto k52 = kneser_graph(5, 2);
    CHECK(k52.subsets.size() == 10);
    CHECK(k52.graph.edge_count() == 15);
    CHECK(exact_chromatic_number(k52.graph).chromatic == 3);
    const auto k42 = kneser_graph(4, 2);
    CHECK(k42.graph.edge_count() == 3);
    const auto k32 = kneser_graph(3, 2);
    CHECK(k32.graph.edge_count() == 0);
    CHECK(kneser_chromatic_formula(3, 2) == 1);
    CHECK(kneser_chromatic_formula(5, 2) == 3);
    CHECK_THROWS_AS(kneser_graph(8, 4), TooLargeError);
    CHECK(kneser_graph(8, 4, 70).subsets.size() == 70);
}

TEST_CASE("chromatic numbers of small kneser graphs") {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t k = 1; 2 * k <= n; ++k) {
            const auto g = kneser_graph(n, k, 70);
            CHECK_MESSAGE(exact_chromatic_number(g.graph, 70).chromatic == kneser_chromatic_formula(n, k),
                          "n=" << n << " k=" << k);
        }
}

TEST_CASE("kneser embedding in the power set") {
    const auto space = power_set_space(4);
    const auto cert = radon_lower_bound(space, Rational(1, 4));
    const auto emb = kneser_embedding(space, cert);
    CHECK(emb.kneser.n == 4);
    CHECK(emb.kneser.k == 1);
    CHECK(emb.vertex_map.size() == 4);
    const auto cert2 = radon_lower_bound(cylinder_space(3), Rational(1, 3));
    CHECK_NOTHROW(kneser_embedding(cylinder_space(3), cert2));
}

TEST_CASE("kleitman") {
    const std::size_t n = 3;
    // One star: all sets containing 0, exactly 2^(n-1).
    std::vector<PointSet> star;
    for (std::uint64_t b = 1; b < 8; ++b)
        if (b & 1)
            star.push_back(PointSet(b));
    CHECK(kleitman_check(n, {star}));
    // Two stars reach 2^n - 2^(n-2).
    std::vector<PointSet> star1;
    for (std::uint64_t b = 1; b < 8; ++b)
        if (b & 2)
            star1.push_back(PointSet(b));
    CHECK(kleitman_check(n, {star, star1}));
    CHECK_THROWS_AS(kleitman_check(n, {{PointSet::of({0}), PointSet::of({1})}}), NotIntersectingError);
    CHECK_THROWS_AS(kleitman_check(n, {{PointSet{}}}), NotIntersectingError);

    std::mt19937_64 rng(23);
    for (int round = 0; round < 100; ++round) {
        const std::size_t m = 1 + rng() % 5;
        const std::size_t s = 1 + rng() % 4;
        std::vector<std::vector<PointSet>> families;
        for (std::size_t f = 0; f < s; ++f) {
            std::vector<PointSet> fam;
            for (std::uint64_t b = 1; b < (std::uint64_t{1} << m); ++b) {
                if (rng() % 3 != 0)
                    continue;
                const PointSet c(b);
                if (std::all_of(fam.begin(), fam.end(), [&](PointSet o) { return o.intersects(c); }))
                    fam.push_back(c);
            }
            families.push_back(fam);
        }
        CHECK(kleitman_check(m, families));
    }
}

TEST_CASE("alon bound") {
    const auto a4 = alon_bound_check(4);
    CHECK(a4.chromatic == 4);
    CHECK(a4.holds);
    const auto a8 = alon_bound_check(8);
    CHECK(a8.chromatic == 6);
    CHECK(a8.holds);
    CHECK_THROWS_AS(alon_bound_check(6), PreconditionError);
}
