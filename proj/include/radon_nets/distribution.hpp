#pragma once

#include "radon_nets/errors.hpp"
#include "radon_nets/point_set.hpp"
#include "radon_nets/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace radon_nets {

/// Exact probability distribution over ground positions.
///
/// Stored as integer masses over a common denominator equal to their sum, so
/// every measure is mass(s)/total() and threshold tests reduce to integer
/// comparisons. Two distributions with proportional masses are equal as
/// measures but compare unequal as values.
class Distribution {
public:
    /// Throws PreconditionError unless the weights are non-negative and sum
    /// to exactly 1.
    static Distribution from_weights(std::span<const Rational> weights);
    /// Normalizes non-negative integer masses; at least one must be positive.
    static Distribution from_masses(std::vector<std::int64_t> masses);
    static Distribution uniform(std::size_t points);
    /// Uniform on `support`, zero elsewhere, over a ground set of `points`.
    static Distribution uniform_on(std::size_t points, PointSet support);

    std::size_t size() const { return masses_.size(); }
    std::int64_t total() const { return total_; }
    const std::vector<std::int64_t>& masses() const { return masses_; }
    std::int64_t mass(PointSet s) const;
    Rational weight(std::size_t i) const { return Rational(masses_.at(i), total_); }
    std::vector<Rational> weights() const;
    PointSet support() const;

    /// Least integer mass m with m/total() >= eps.
    std::int64_t at_least(const Rational& eps) const;
    /// Largest integer mass m with m/total() <= delta.
    std::int64_t at_most(const Rational& delta) const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    Distribution(std::vector<std::int64_t> masses, std::int64_t total)
        : masses_(std::move(masses)), total_(total) {}

    std::vector<std::int64_t> masses_;
    std::int64_t total_ = 1;
};

/// Exact mu(s).
Rational measure(const Distribution& mu, PointSet s);

class ZeroMassConditionError : public PreconditionError {
public:
    explicit ZeroMassConditionError(PointSet a)
        : PreconditionError("cannot condition on zero-mass set " + to_string(a)) {}
};

/// mu conditioned on `a`: weight mu(x)/mu(a) on a, zero elsewhere.
Distribution conditional(const Distribution& mu, PointSet a);

} // namespace radon_nets
