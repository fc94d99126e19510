#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace radon_nets {

/// Hard ceiling on ground-set size: a point set is one machine word.
inline constexpr std::size_t kMaxGroundSize = 64;

/// A subset of ground-set positions [0, 64).
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

    static PointSet of(std::initializer_list<std::size_t> indices);
    static PointSet from_indices(const std::vector<std::size_t>& indices);
    static constexpr PointSet full(std::size_t n) {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr PointSet singleton(std::size_t i) { return PointSet(std::uint64_t{1} << i); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1u) != 0; }

    /// Lowest index in the set. Undefined on the empty set.
    constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
    /// Highest index in the set. Undefined on the empty set.
    constexpr std::size_t last() const { return 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }

    constexpr PointSet with(std::size_t i) const { return PointSet(bits_ | (std::uint64_t{1} << i)); }
    constexpr PointSet without(std::size_t i) const { return PointSet(bits_ & ~(std::uint64_t{1} << i)); }
    constexpr PointSet minus(PointSet o) const { return PointSet(bits_ & ~o.bits_); }

    constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

    std::vector<std::size_t> indices() const;

    friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
    friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
    friend constexpr PointSet operator^(PointSet a, PointSet b) { return PointSet(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(PointSet, PointSet) = default;

    /// Calls f(i) for each member in ascending order.
    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
            f(static_cast<std::size_t>(std::countr_zero(rest)));
    }

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order: lexicographic comparison of the ascending index lists,
/// a proper prefix ordering first ({} < {0} < {0,1} < {0,2} < {1}).
constexpr bool canonical_less(PointSet a, PointSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    const int d = std::countr_zero(diff);
    const std::uint64_t above = d == 63 ? 0 : (~std::uint64_t{0} << (d + 1));
    if (a.contains(static_cast<std::size_t>(d)))
        return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

struct CanonicalLess {
    constexpr bool operator()(PointSet a, PointSet b) const { return canonical_less(a, b); }
};

struct PointSetHash {
    std::size_t operator()(PointSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// Renders as "{0,2,5}".
std::string to_string(PointSet s);

/// Reindexes the members of `s` that lie in `within` to consecutive positions
/// (the k-th member of `within` becomes position k).
PointSet compress(PointSet s, PointSet within);

} // namespace radon_nets
