#pragma once

#include "radon_nets/distribution.hpp"
#include "radon_nets/space.hpp"

#include <string>
#include <string_view>

namespace radon_nets {

/// A convexity space with the display name carried by its file.
struct NamedSpace {
    std::string name;
    ConvexitySpace space;
};

/// Space file: a JSON object
///
///     {"name": "...", "ground": ["a", "b", ...], "convex": [[], [0], [0, 1], ...]}
///
/// with 0-based ascending index lists. Parsing validates the space axioms.
NamedSpace parse_space(std::string_view text);

/// Canonical serialization: fixed key order, convex sets in canonical order,
/// one set per line. Byte-identical for identical spaces.
std::string serialize_space(const std::string& name, const ConvexitySpace& space);

/// Distribution file: {"weights": ["1/2", "1/3", "1/6"]}, one exact fraction
/// per ground point in ground order. `expected_size` is the ground size.
Distribution parse_distribution(std::string_view text, std::size_t expected_size);
std::string serialize_distribution(const Distribution& mu);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

} // namespace radon_nets
