#pragma once

#include "radon_nets/io.hpp"
#include "radon_nets/space.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace radon_nets {

/// Labelled tree. Vertices are 0..labels.size()-1.
struct Tree {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Parses "a-b,b-c"; vertices are numbered in order of first appearance.
/// A single bare label ("a") is a one-vertex tree.
Tree parse_tree(const std::string& text);
Tree path_tree(std::size_t vertices);
Tree star_tree(std::size_t vertices);
/// One representative per isomorphism class of trees on `vertices` vertices.
std::vector<Tree> all_free_trees(std::size_t vertices);

/// Strict partial order, stored transitively closed: less[i][j] means i < j.
struct Poset {
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> less;

    bool comparable(std::size_t i, std::size_t j) const { return less[i][j] || less[j][i]; }
};

/// Transitive closure of `relations`; throws PreconditionError on a cycle.
Poset make_poset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& relations);
/// Elements are the characters of `elements`; relations "a<b,b<c" (may be empty).
Poset parse_poset(const std::string& elements, const std::string& relations);
/// One representative per isomorphism class of posets on `size` elements.
std::vector<Poset> all_posets(std::size_t size);

/// (X, 2^X) on m points labelled "1".."m". 1 <= m <= 16.
ConvexitySpace power_set_space(std::size_t m);

/// X = {0,1}^n (labels are bit strings, coordinate 1 first); convex sets are
/// the 3^n cylinders plus the empty set. 1 <= n <= 6.
ConvexitySpace cylinder_space(std::size_t n);

/// Connected vertex subsets of a tree plus the empty set. At most 16 vertices.
ConvexitySpace subtree_space(const Tree& tree);

/// Sets K & Z^2 on a width x height grid, K convex; labels "(x,y)", point
/// index y*width + x. width*height <= 25.
ConvexitySpace lattice_convex_space(std::size_t width, std::size_t height);

/// X = linear extensions of `base` (labels list the elements in order), convex
/// sets are the extension sets of the orders extending base, plus the empty
/// set. At most 5 elements and 64 extensions.
ConvexitySpace linear_extension_space(const Poset& base);

/// The closure of random complementary pairs {b, X \ b}; always separable.
ConvexitySpace random_separable_space(std::size_t points, std::uint64_t seed);

enum class GeneratorKind { Power, Cylinders, Subtree, Lattice, Poset, Random };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Power;
    std::size_t m = 0;           ///< power: point count
    std::size_t n = 0;           ///< cylinders: dimension
    std::string edges;           ///< subtree: "a-b,b-c"
    std::size_t width = 0;       ///< lattice
    std::size_t height = 0;
    std::string elements;        ///< poset: element characters
    std::string order;           ///< poset: "a<b,..."
    std::size_t points = 0;      ///< random
    std::uint64_t seed = 0;
};

GeneratorKind parse_generator_kind(const std::string& name);
NamedSpace generate(const GeneratorSpec& spec);

} // namespace radon_nets
