#include "radon_nets/lowerbound.hpp"

#include "radon_nets/oracle.hpp"
#include "radon_nets/params.hpp"

#include <algorithm>

namespace radon_nets {

DisjointnessGraph disjointness_graph(const ConvexitySpace& space, const Distribution& mu, const Rational& eps) {
    if (mu.size() != space.size())
        throw PreconditionError("distribution size does not match the ground set");
    DisjointnessGraph out;
    if (eps > 1) {
        out.graph = Graph(0);
        return out;
    }
    const std::int64_t threshold = mu.at_least(eps);
    for (PointSet c : space.convex())
        if (mu.mass(c) >= threshold)
            out.vertices.push_back(c);
    out.graph = Graph(out.vertices.size());
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
            if (!out.vertices[i].intersects(out.vertices[j]))
                out.graph.add_edge(i, j);
    return out;
}

std::string to_string(BoundMethod method) {
    switch (method) {
    case BoundMethod::ExactChromatic:
        return "exact-chromatic";
    case BoundMethod::KneserFormula:
        return "kneser-formula";
    case BoundMethod::LovaszClosedForm:
        return "lovasz-closed-form";
    }
    return "unknown";
}

LowerBoundCertificate chromatic_lower_bound(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                            std::size_t cap) {
    if (eps <= 0)
        throw PreconditionError("eps must be positive");
    DisjointnessGraph g = disjointness_graph(space, mu, eps);

    // A vertex containing another vertex has a subset of its neighbours and
    // is not adjacent to it, so it can always reuse that vertex's colour.
    std::vector<std::size_t> minimal;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const bool dominated = std::any_of(g.vertices.begin(), g.vertices.end(), [&](PointSet other) {
            return other != g.vertices[i] && other.subset_of(g.vertices[i]);
        });
        if (!dominated)
            minimal.push_back(i);
    }
    if (minimal.size() > cap)
        throw TooLargeForExactError("disjointness graph", minimal.size(), cap);
    const Graph reduced = g.graph.induced(minimal);
    const ColoringResult coloring = exact_chromatic_number(reduced, cap);

    LowerBoundCertificate cert{mu, eps};
    cert.bound = coloring.chromatic;
    cert.method = BoundMethod::ExactChromatic;
    cert.support = mu.support();
    cert.colored_vertices = minimal;
    cert.coloring = coloring.colors;
    cert.graph = std::move(g);
    return cert;
}

std::size_t kneser_chromatic_formula(std::size_t n, std::size_t k) {
    return n >= 2 * k ? n - 2 * k + 2 : 1;
}

LowerBoundCertificate radon_lower_bound(const ConvexitySpace& space, const Rational& eps) {
    if (eps <= 0)
        throw PreconditionError("eps must be positive");
    if (space.size() == 0)
        throw PreconditionError("empty ground set");
    const RadonResult radon = radon_number(space);
    const std::size_t r = radon.witness.size();

    LowerBoundCertificate cert{Distribution::uniform_on(space.size(), radon.witness), eps};
    cert.support = radon.witness;
    cert.shattered_size = r;
    const Rational r_rat(static_cast<long long>(r));
    cert.kneser_k = static_cast<std::size_t>(ceil_rational(eps * r_rat));
    cert.kneser_value = kneser_chromatic_formula(r, cert.kneser_k);
    const BigInt linear = ceil_rational((1 - 2 * eps) * r_rat);
    cert.linear_value = linear > 0 ? static_cast<std::size_t>(linear) : 0;

    cert.bound = std::max<std::size_t>(1, cert.kneser_value);
    cert.method = BoundMethod::KneserFormula;
    if (cert.linear_value > cert.bound) {
        cert.bound = cert.linear_value;
        cert.method = BoundMethod::LovaszClosedForm;
    }
    return cert;
}

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
    BigInt out = 1;
    for (std::size_t i = 0; i < k; ++i)
        out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

KneserGraph kneser_graph(std::size_t n, std::size_t k, std::size_t cap) {
    if (n < 1 || k < 1 || k > n)
        throw PreconditionError("Kneser graph needs n >= 1 and 1 <= k <= n");
    if (n > kMaxGroundSize)
        throw PreconditionError("Kneser graph needs n <= 64");
    const BigInt count = binomial(n, k);
    if (count > cap)
        throw TooLargeError("Kneser graph", count > BigInt(1u << 30) ? (1u << 30) : static_cast<std::size_t>(count),
                            cap);
    KneserGraph out{n, k, {}, {}};
    // k-subsets in canonical order are the lexicographic combinations.
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i)
        combo[i] = i;
    while (true) {
        out.subsets.push_back(PointSet::from_indices(combo));
        std::size_t i = k;
        while (i > 0 && combo[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++combo[i - 1];
        for (std::size_t j = i; j < k; ++j)
            combo[j] = combo[j - 1] + 1;
    }
    out.graph = Graph(out.subsets.size());
    for (std::size_t i = 0; i < out.subsets.size(); ++i)
        for (std::size_t j = i + 1; j < out.subsets.size(); ++j)
            if (!out.subsets[i].intersects(out.subsets[j]))
                out.graph.add_edge(i, j);
    return out;
}

KneserEmbedding kneser_embedding(const ConvexitySpace& space, const LowerBoundCertificate& radon, std::size_t cap) {
    const std::vector<std::size_t> members = radon.support.indices();
    if (members.empty() || radon.kneser_k == 0 || radon.kneser_k > members.size())
        throw PreconditionError("certificate has no Kneser subgraph");
    KneserEmbedding out{kneser_graph(members.size(), radon.kneser_k, cap),
                        disjointness_graph(space, radon.mu, radon.eps), {}};
    for (PointSet z : out.kneser.subsets) {
        PointSet image;
        z.for_each([&](std::size_t i) { image = image.with(members[i]); });
        const PointSet hull = convex_hull(space, image);
        const auto it = std::find(out.graph.vertices.begin(), out.graph.vertices.end(), hull);
        if (it == out.graph.vertices.end())
            throw ConsistencyError("hull " + to_string(hull) + " is not a vertex of the disjointness graph");
        out.vertex_map.push_back(static_cast<std::size_t>(it - out.graph.vertices.begin()));
    }
    std::vector<std::size_t> sorted = out.vertex_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConsistencyError("Kneser vertex map is not injective");
    if (!(out.graph.graph.induced(out.vertex_map) == out.kneser.graph))
        throw ConsistencyError("Kneser vertex map does not preserve adjacency");
    return out;
}

bool kleitman_check(std::size_t n, const std::vector<std::vector<PointSet>>& families) {
    if (n > 62)
        throw PreconditionError("Kleitman check supports n <= 62");
    const PointSet all = PointSet::full(n);
    std::vector<PointSet> all_sets;
    for (std::size_t i = 0; i < families.size(); ++i) {
        const auto& family = families[i];
        for (std::size_t a = 0; a < family.size(); ++a) {
            if (!family[a].subset_of(all))
                throw PreconditionError("family " + std::to_string(i) + " has a set outside [n]");
            for (std::size_t b = a; b < family.size(); ++b)
                if (!family[a].intersects(family[b]))
                    throw NotIntersectingError(i);
        }
        all_sets.insert(all_sets.end(), family.begin(), family.end());
    }
    std::sort(all_sets.begin(), all_sets.end(), CanonicalLess{});
    all_sets.erase(std::unique(all_sets.begin(), all_sets.end()), all_sets.end());
    // |U| <= 2^n - 2^(n-s)  <=>  |U| 2^s <= 2^(n+s) - 2^n
    const BigInt s_pow = BigInt(1) << families.size();
    const BigInt n_pow = BigInt(1) << n;
    return BigInt(all_sets.size()) * s_pow <= n_pow * s_pow - n_pow;
}

AlonCheck alon_bound_check(std::size_t n, std::size_t cap) {
    if (n == 0 || n % 4 != 0)
        throw PreconditionError("n must be a positive multiple of 4");
    const KneserGraph kg = kneser_graph(n, n / 4, cap);
    const std::size_t chi = exact_chromatic_number(kg.graph, cap).chromatic;
    return {n, chi, chi * 10 > n};
}

} // namespace radon_nets
