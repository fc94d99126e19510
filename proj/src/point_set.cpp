#include "radon_nets/point_set.hpp"

#include "radon_nets/errors.hpp"

namespace radon_nets {

PointSet PointSet::of(std::initializer_list<std::size_t> indices) {
    return from_indices(std::vector<std::size_t>(indices));
}

PointSet PointSet::from_indices(const std::vector<std::size_t>& indices) {
    std::uint64_t bits = 0;
    for (std::size_t i : indices) {
        if (i >= kMaxGroundSize)
            throw PreconditionError("point index " + std::to_string(i) + " out of range");
        bits |= std::uint64_t{1} << i;
    }
    return PointSet(bits);
}

std::vector<std::size_t> PointSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::string to_string(PointSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first)
            out += ',';
        out += std::to_string(i);
        first = false;
    });
    return out + "}";
}

PointSet compress(PointSet s, PointSet within) {
    std::uint64_t out = 0;
    std::size_t k = 0;
    within.for_each([&](std::size_t i) {
        if (s.contains(i))
            out |= std::uint64_t{1} << k;
        ++k;
    });
    return PointSet(out);
}

} // namespace radon_nets
