#pragma once

#include "radon_nets/distribution.hpp"
#include "radon_nets/graph.hpp"
#include "radon_nets/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radon_nets {

/// G(mu, eps): convex sets of measure >= eps, adjacent when disjoint.
struct DisjointnessGraph {
    std::vector<PointSet> vertices;  ///< canonical order
    Graph graph;
};

DisjointnessGraph disjointness_graph(const ConvexitySpace& space, const Distribution& mu, const Rational& eps);

enum class BoundMethod { ExactChromatic, KneserFormula, LovaszClosedForm };

std::string to_string(BoundMethod method);

/// A lower bound on the size of every weak eps-net over `mu`.
struct LowerBoundCertificate {
    Distribution mu;
    Rational eps;
    std::size_t bound = 0;
    BoundMethod method = BoundMethod::ExactChromatic;
    PointSet support{};  ///< the shattered set for Radon certificates
    std::optional<DisjointnessGraph> graph{};
    /// Exact chromatic certificates: vertices kept for coloring (inclusion-
    /// minimal sets; supersets share a colour with any subset) and the colouring.
    std::vector<std::size_t> colored_vertices{};
    std::vector<std::size_t> coloring{};
    /// Radon certificates: r, the Kneser parameter ceil(eps r), the Kneser
    /// value r - 2k + 2 (or 1) and ceil((1 - 2 eps) r).
    std::size_t shattered_size = 0;
    std::size_t kneser_k = 0;
    std::size_t kneser_value = 0;
    std::size_t linear_value = 0;
};

class TooLargeForExactError : public TooLargeError {
public:
    using TooLargeError::TooLargeError;
};

/// chi(G(mu, eps)), computed exactly on the inclusion-minimal vertices (which
/// have the same chromatic number). Throws TooLargeForExactError when more
/// than `cap` vertices remain.
LowerBoundCertificate chromatic_lower_bound(const ConvexitySpace& space, const Distribution& mu, const Rational& eps,
                                            std::size_t cap = kDefaultVertexCap);

/// Uniform distribution on a maximum Radon-shattered set Y (|Y| = r); the
/// hulls of the ceil(eps r)-subsets of Y induce KG(r, ceil(eps r)), giving
/// the bound max(1, r - 2 ceil(eps r) + 2).
LowerBoundCertificate radon_lower_bound(const ConvexitySpace& space, const Rational& eps);

/// A Kneser graph with its vertex sets (k-subsets of [n], canonical order).
struct KneserGraph {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PointSet> subsets;
    Graph graph;
};

/// KG(n, k). Throws TooLargeError when C(n, k) exceeds `cap`.
KneserGraph kneser_graph(std::size_t n, std::size_t k, std::size_t cap = kDefaultVertexCap);

/// n - 2k + 2 when n >= 2k, else 1.
std::size_t kneser_chromatic_formula(std::size_t n, std::size_t k);

/// Explicit isomorphism from KG(r, k) onto the subgraph of G(mu, eps) induced
/// by {conv(Z) : Z a k-subset of the shattered set}.
struct KneserEmbedding {
    KneserGraph kneser;
    DisjointnessGraph graph;
    std::vector<std::size_t> vertex_map;  ///< Kneser vertex -> graph vertex
};

/// Builds and checks the embedding for a Radon certificate. Throws
/// ConsistencyError if the map is not an induced isomorphism.
KneserEmbedding kneser_embedding(const ConvexitySpace& space, const LowerBoundCertificate& radon,
                                 std::size_t cap = kDefaultVertexCap);

class NotIntersectingError : public PreconditionError {
public:
    explicit NotIntersectingError(std::size_t family)
        : PreconditionError("family " + std::to_string(family) + " is not intersecting"), family_(family) {}
    std::size_t family() const noexcept { return family_; }

private:
    std::size_t family_;
};

/// |F_1 u ... u F_s| <= 2^n - 2^(n-s) for intersecting families of subsets
/// of [n]. Throws NotIntersectingError for a family with a disjoint pair (or
/// the empty set).
bool kleitman_check(std::size_t n, const std::vector<std::vector<PointSet>>& families);

struct AlonCheck {
    std::size_t n = 0;
    std::size_t chromatic = 0;
    bool holds = false;  ///< chi(KG(n, n/4)) > n/10
};

AlonCheck alon_bound_check(std::size_t n, std::size_t cap = kDefaultVertexCap);

} // namespace radon_nets
