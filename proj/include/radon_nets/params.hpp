#pragma once

#include "radon_nets/space.hpp"

#include <vector>

namespace radon_nets {

/// True iff every bipartition of `y` has disjoint convex hulls.
bool is_radon_shattered(const ConvexitySpace& space, PointSet y);

struct RadonResult {
    std::size_t radon = 1;  ///< largest shattered size + 1
    PointSet witness;       ///< canonically least shattered set of maximum size
};

RadonResult radon_number(const ConvexitySpace& space);

struct HellyResult {
    std::size_t helly = 1;
    /// Canonically first inclusion-minimal subfamily with empty intersection
    /// of maximum size. Empty when the family has no such subfamily.
    std::vector<PointSet> witness;
    /// The family's total intersection is non-empty, so h = 1 holds vacuously.
    bool vacuous = false;
};

/// Maximum size of an inclusion-minimal subfamily of `family` whose
/// intersection is empty. `all` is the ground set (the empty intersection).
HellyResult helly_number(const SetFamily& family, PointSet all);

struct VcResult {
    std::size_t vc = 0;
    PointSet witness;
};

/// Size of the largest Y with {b & Y : b in family} = 2^Y.
VcResult vc_dimension(const SetFamily& family, PointSet all);

struct ParamsReport {
    std::size_t radon = 1;
    std::size_t helly = 1;
    std::size_t vc = 0;
    bool separable = true;
    bool helly_vacuous = false;
    PointSet radon_witness;
    std::vector<PointSet> helly_witness;
    PointSet vc_witness;
    /// Set when not separable.
    std::optional<PointSet> separation_witness_set;
    std::optional<std::size_t> separation_witness_point;
};

/// Radon number of the space plus Helly number and VC dimension of all its
/// half-spaces (empty set and ground set included). Throws ConsistencyError
/// if a separable space breaks helly <= radon - 1 or vc <= radon - 1.
ParamsReport analyze(const ConvexitySpace& space);

} // namespace radon_nets
