#include "radon_nets/distribution.hpp"

#include "radon_nets/errors.hpp"

#include <limits>
#include <numeric>

namespace radon_nets {

Distribution Distribution::from_weights(std::span<const Rational> weights) {
    if (weights.size() > kMaxGroundSize)
        throw PreconditionError("distribution has more than 64 weights");
    BigInt common = 1;
    for (const Rational& w : weights) {
        if (w < 0)
            throw PreconditionError("negative weight " + format_rational(w));
        common = boost::multiprecision::lcm(common, denominator(w));
    }
    Rational sum = 0;
    for (const Rational& w : weights)
        sum += w;
    if (sum != 1)
        throw PreconditionError("weights sum to " + format_rational(sum) + ", not 1");
    const BigInt limit = std::numeric_limits<std::int64_t>::max() / 2;
    if (common > limit)
        throw PreconditionError("weight denominators too large for exact mass arithmetic");
    std::vector<std::int64_t> masses;
    masses.reserve(weights.size());
    for (const Rational& w : weights)
        masses.push_back(static_cast<std::int64_t>(numerator(w) * (common / denominator(w))));
    return Distribution(std::move(masses), static_cast<std::int64_t>(common));
}

Distribution Distribution::from_masses(std::vector<std::int64_t> masses) {
    if (masses.size() > kMaxGroundSize)
        throw PreconditionError("distribution has more than 64 weights");
    std::int64_t total = 0;
    for (std::int64_t m : masses) {
        if (m < 0)
            throw PreconditionError("negative mass");
        if (m > std::numeric_limits<std::int64_t>::max() / 2 - total)
            throw PreconditionError("masses too large for exact arithmetic");
        total += m;
    }
    if (total == 0)
        throw PreconditionError("distribution has no mass");
    return Distribution(std::move(masses), total);
}

Distribution Distribution::uniform(std::size_t points) {
    return from_masses(std::vector<std::int64_t>(points, 1));
}

Distribution Distribution::uniform_on(std::size_t points, PointSet support) {
    std::vector<std::int64_t> masses(points, 0);
    support.for_each([&](std::size_t i) { masses.at(i) = 1; });
    return from_masses(std::move(masses));
}

std::int64_t Distribution::mass(PointSet s) const {
    std::int64_t m = 0;
    s.for_each([&](std::size_t i) {
        if (i < masses_.size())
            m += masses_[i];
    });
    return m;
}

std::vector<Rational> Distribution::weights() const {
    std::vector<Rational> out;
    out.reserve(masses_.size());
    for (std::int64_t m : masses_)
        out.emplace_back(m, total_);
    return out;
}

PointSet Distribution::support() const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < masses_.size(); ++i)
        if (masses_[i] > 0)
            bits |= std::uint64_t{1} << i;
    return PointSet(bits);
}

namespace {

std::int64_t clamp_mass(const BigInt& v, std::int64_t total) {
    if (v < 0)
        return v < -1 ? -1 : static_cast<std::int64_t>(v);
    if (v > total)
        return total + 1;
    return static_cast<std::int64_t>(v);
}

} // namespace

std::int64_t Distribution::at_least(const Rational& eps) const {
    return clamp_mass(ceil_rational(eps * total_), total_);
}

std::int64_t Distribution::at_most(const Rational& delta) const {
    return clamp_mass(floor_rational(delta * total_), total_);
}

Rational measure(const Distribution& mu, PointSet s) {
    return Rational(mu.mass(s), mu.total());
}

Distribution conditional(const Distribution& mu, PointSet a) {
    std::vector<std::int64_t> masses(mu.size(), 0);
    a.for_each([&](std::size_t i) {
        if (i < masses.size())
            masses[i] = mu.masses()[i];
    });
    if (mu.mass(a) == 0)
        throw ZeroMassConditionError(a);
    return Distribution::from_masses(std::move(masses));
}

} // namespace radon_nets
