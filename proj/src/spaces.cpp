#include "radon_nets/spaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace radon_nets {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

} // namespace

Tree parse_tree(const std::string& text) {
    Tree tree;
    std::map<std::string, std::size_t> index;
    auto vertex = [&](const std::string& label) {
        if (label.empty())
            throw ParseError("empty vertex label in '" + text + "'");
        auto [it, inserted] = index.try_emplace(label, tree.labels.size());
        if (inserted)
            tree.labels.push_back(label);
        return it->second;
    };
    for (const std::string& item : split(text, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            vertex(item);
            continue;
        }
        const std::size_t u = vertex(item.substr(0, dash));
        const std::size_t v = vertex(item.substr(dash + 1));
        tree.edges.emplace_back(u, v);
    }
    if (tree.labels.empty())
        throw ParseError("tree has no vertices");
    return tree;
}

Tree path_tree(std::size_t vertices) {
    Tree tree;
    for (std::size_t i = 0; i < vertices; ++i) {
        tree.labels.push_back("v" + std::to_string(i));
        if (i > 0)
            tree.edges.emplace_back(i - 1, i);
    }
    return tree;
}

Tree star_tree(std::size_t vertices) {
    Tree tree;
    for (std::size_t i = 0; i < vertices; ++i) {
        tree.labels.push_back("v" + std::to_string(i));
        if (i > 0)
            tree.edges.emplace_back(0, i);
    }
    return tree;
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency adjacency_of(const Tree& tree) {
    Adjacency adj(tree.labels.size());
    for (auto [u, v] : tree.edges) {
        adj.at(u).push_back(v);
        adj.at(v).push_back(u);
    }
    return adj;
}

std::string rooted_code(const Adjacency& adj, std::size_t v, std::size_t parent) {
    std::vector<std::string> parts;
    for (std::size_t u : adj[v])
        if (u != parent)
            parts.push_back(rooted_code(adj, u, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts)
        out += p;
    return out + ")";
}

/// AHU code rooted at the centre(s); equal iff the trees are isomorphic.
std::string tree_code(const Adjacency& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> degree(n);
    std::vector<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        if (degree[v] <= 1)
            leaves.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        std::vector<std::size_t> next;
        remaining -= leaves.size();
        for (std::size_t leaf : leaves)
            for (std::size_t u : adj[leaf])
                if (--degree[u] == 1)
                    next.push_back(u);
        leaves = std::move(next);
    }
    std::string best;
    for (std::size_t centre : leaves) {
        std::string code = rooted_code(adj, centre, n);
        if (best.empty() || code < best)
            best = code;
    }
    return best;
}

} // namespace

std::vector<Tree> all_free_trees(std::size_t vertices) {
    if (vertices == 0)
        return {};
    std::vector<Tree> level{path_tree(1)};
    for (std::size_t size = 2; size <= vertices; ++size) {
        std::vector<Tree> next;
        std::set<std::string> seen;
        for (const Tree& t : level) {
            for (std::size_t v = 0; v < t.labels.size(); ++v) {
                Tree grown = t;
                grown.labels.push_back("v" + std::to_string(size - 1));
                grown.edges.emplace_back(v, size - 1);
                if (seen.insert(tree_code(adjacency_of(grown))).second)
                    next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return level;
}

Poset make_poset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
    const std::size_t n = elements.size();
    Poset p{std::move(elements), std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (auto [a, b] : relations) {
        if (a >= n || b >= n)
            throw PreconditionError("poset relation refers to an unknown element");
        p.less[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p.less[i][k] && p.less[k][j])
                    p.less[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (p.less[i][i])
            throw PreconditionError("poset relations contain a cycle");
    return p;
}

Poset parse_poset(const std::string& elements, const std::string& relations) {
    std::vector<std::string> names;
    for (char c : elements)
        names.emplace_back(1, c);
    {
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("duplicate poset element");
    }
    auto find = [&](const std::string& name) {
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw ParseError("unknown poset element '" + name + "'");
        return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (const std::string& item : split(relations, ',')) {
        const auto lt = item.find('<');
        if (lt == std::string::npos)
            throw ParseError("expected x<y, got '" + item + "'");
        const std::size_t lo = find(item.substr(0, lt));
        const std::size_t hi = find(item.substr(lt + 1));
        rel.emplace_back(lo, hi);
    }
    return make_poset(std::move(names), rel);
}

std::vector<Poset> all_posets(std::size_t size) {
    if (size > 5)
        throw PreconditionError("poset enumeration supports at most 5 elements");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (i != j)
                pairs.emplace_back(i, j);
    std::vector<std::size_t> perm(size);
    std::set<std::vector<bool>> seen;
    std::vector<Poset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1u)
                rel[pairs[k].first][pairs[k].second] = true;
        bool ok = true;
        for (std::size_t i = 0; i < size && ok; ++i)
            for (std::size_t j = 0; j < size && ok; ++j) {
                if (rel[i][j] && rel[j][i])
                    ok = false;
                for (std::size_t k = 0; k < size && ok; ++k)
                    if (rel[i][j] && rel[j][k] && !rel[i][k])
                        ok = false;
            }
        if (!ok)
            continue;
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::vector<bool> canonical;
        do {
            std::vector<bool> flat;
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j)
                    flat.push_back(rel[perm[i]][perm[j]]);
            if (canonical.empty() || flat < canonical)
                canonical = std::move(flat);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(canonical).second)
            continue;
        Poset p;
        for (std::size_t i = 0; i < size; ++i)
            p.elements.emplace_back(1, static_cast<char>('a' + i));
        p.less = std::move(rel);
        out.push_back(std::move(p));
    }
    return out;
}

ConvexitySpace power_set_space(std::size_t m) {
    if (m < 1 || m > 16)
        throw PreconditionError("power set space needs 1 <= m <= 16");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= m; ++i)
        labels.push_back(std::to_string(i));
    std::vector<PointSet> family;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
        family.emplace_back(bits);
    return validate_space(GroundSet(std::move(labels)), std::move(family));
}

ConvexitySpace cylinder_space(std::size_t n) {
    if (n < 1 || n > 6)
        throw PreconditionError("cylinder space needs 1 <= n <= 6");
    const std::size_t points = std::size_t{1} << n;
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < points; ++p) {
        std::string label;
        for (std::size_t j = 0; j < n; ++j)
            label += ((p >> (n - 1 - j)) & 1u) ? '1' : '0';
        labels.push_back(label);
    }
    // Pattern digit j: 0 or 1 fixes coordinate j, 2 leaves it free.
    std::vector<PointSet> family{PointSet{}};
    std::vector<int> pattern(n, 0);
    while (true) {
        PointSet c;
        for (std::size_t p = 0; p < points; ++p) {
            bool match = true;
            for (std::size_t j = 0; j < n && match; ++j) {
                const int bit = static_cast<int>((p >> (n - 1 - j)) & 1u);
                match = pattern[j] == 2 || pattern[j] == bit;
            }
            if (match)
                c = c.with(p);
        }
        family.push_back(c);
        std::size_t j = 0;
        while (j < n && pattern[j] == 2)
            pattern[j++] = 0;
        if (j == n)
            break;
        ++pattern[j];
    }
    return validate_space(GroundSet(std::move(labels)), std::move(family));
}

ConvexitySpace subtree_space(const Tree& tree) {
    const std::size_t n = tree.labels.size();
    if (n < 1 || n > 16)
        throw PreconditionError("subtree space needs 1..16 vertices");
    if (tree.edges.size() != n - 1)
        throw PreconditionError("edge list does not form a tree");
    const Adjacency adj = adjacency_of(tree);
    std::vector<std::uint64_t> neighbours(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u : adj[v])
            neighbours[v] |= std::uint64_t{1} << u;
    auto connected = [&](std::uint64_t set) {
        std::uint64_t reached = set & (~set + 1);
        while (true) {
            std::uint64_t grown = reached;
            PointSet(reached).for_each([&](std::size_t v) { grown |= neighbours[v] & set; });
            if (grown == reached)
                return reached == set;
            reached = grown;
        }
    };
    if (!connected(PointSet::full(n).bits()))
        throw PreconditionError("edge list does not form a tree");
    std::vector<PointSet> family{PointSet{}};
    for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set)
        if (connected(set))
            family.emplace_back(set);
    return validate_space(GroundSet(tree.labels), std::move(family));
}

namespace {

struct Pt {
    long x;
    long y;
    friend bool operator<(Pt a, Pt b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
    friend bool operator==(Pt, Pt) = default;
};

long cross(Pt o, Pt a, Pt b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Convex hull vertices in counter-clockwise order, collinear points dropped.
std::vector<Pt> hull_polygon(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Pt> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool in_hull(const std::vector<Pt>& hull, Pt q) {
    if (hull.empty())
        return false;
    if (hull.size() == 1)
        return hull[0] == q;
    if (hull.size() == 2) {
        const Pt a = hull[0];
        const Pt b = hull[1];
        return cross(a, b, q) == 0 && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
               std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
    }
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (cross(hull[i], hull[(i + 1) % hull.size()], q) < 0)
            return false;
    return true;
}

} // namespace

ConvexitySpace lattice_convex_space(std::size_t width, std::size_t height) {
    if (width < 1 || height < 1 || width * height > 25)
        throw PreconditionError("lattice space needs width*height <= 25");
    const std::size_t n = width * height;
    std::vector<Pt> grid;
    std::vector<std::string> labels;
    for (std::size_t y = 0; y < height; ++y)
        for (std::size_t x = 0; x < width; ++x) {
            grid.push_back({static_cast<long>(x), static_cast<long>(y)});
            labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    auto closure = [&](PointSet s) {
        std::vector<Pt> pts;
        s.for_each([&](std::size_t i) { pts.push_back(grid[i]); });
        const std::vector<Pt> hull = hull_polygon(std::move(pts));
        PointSet out;
        for (std::size_t i = 0; i < n; ++i)
            if (in_hull(hull, grid[i]))
                out = out.with(i);
        return out;
    };
    // Every closed set is reached by adding its points one at a time.
    std::unordered_set<PointSet, PointSetHash> seen{PointSet{}};
    std::vector<PointSet> family{PointSet{}};
    for (std::size_t i = 0; i < family.size(); ++i) {
        const PointSet s = family[i];
        for (std::size_t p = 0; p < n; ++p) {
            if (s.contains(p))
                continue;
            const PointSet t = closure(s.with(p));
            if (seen.insert(t).second)
                family.push_back(t);
        }
    }
    return validate_space(GroundSet(std::move(labels)), std::move(family));
}

ConvexitySpace linear_extension_space(const Poset& base) {
    const std::size_t n = base.elements.size();
    if (n < 1 || n > 5)
        throw PreconditionError("linear extension space needs 1..5 elements");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> extensions;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (base.less[order[j]][order[i]])
                    ok = false;
        if (ok)
            extensions.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    if (extensions.size() > kMaxGroundSize)
        throw PreconditionError("base order has " + std::to_string(extensions.size()) +
                                " linear extensions; the ceiling is 64");

    const bool short_names = std::all_of(base.elements.begin(), base.elements.end(),
                                         [](const std::string& e) { return e.size() == 1; });
    std::vector<std::string> labels;
    for (const auto& ext : extensions) {
        std::string label;
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0 && !short_names)
                label += '<';
            label += base.elements[ext[k]];
        }
        labels.push_back(label);
    }
    // Each order extending base is cut out by its relations x<y, so the
    // family is generated by the sets {L : x before y in L}.
    std::vector<PointSet> generators;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y)
                continue;
            PointSet before;
            for (std::size_t e = 0; e < extensions.size(); ++e) {
                const auto& ext = extensions[e];
                const auto px = std::find(ext.begin(), ext.end(), x);
                const auto py = std::find(ext.begin(), ext.end(), y);
                if (px < py)
                    before = before.with(e);
            }
            generators.push_back(before);
        }
    return intersection_closure(GroundSet(std::move(labels)), generators);
}

ConvexitySpace random_separable_space(std::size_t points, std::uint64_t seed) {
    if (points < 1 || points > 16)
        throw PreconditionError("random space needs 1..16 points");
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < points; ++i)
        labels.push_back("r" + std::to_string(i));
    const PointSet all = PointSet::full(points);
    std::uniform_int_distribution<std::size_t> pair_count(1, points + 2);
    std::uniform_int_distribution<std::uint64_t> subset(0, all.bits());
    while (true) {
        std::vector<PointSet> basis;
        const std::size_t pairs = pair_count(rng);
        for (std::size_t k = 0; k < pairs; ++k) {
            const PointSet b(subset(rng));
            basis.push_back(b);
            basis.push_back(all.minus(b));
        }
        ConvexitySpace space = intersection_closure(GroundSet(labels), basis);
        if (is_separable(space).separable)
            return space;
    }
}

GeneratorKind parse_generator_kind(const std::string& name) {
    static const std::map<std::string, GeneratorKind> kinds{
        {"power", GeneratorKind::Power},     {"cylinders", GeneratorKind::Cylinders},
        {"subtree", GeneratorKind::Subtree}, {"lattice", GeneratorKind::Lattice},
        {"poset", GeneratorKind::Poset},     {"random", GeneratorKind::Random},
    };
    const auto it = kinds.find(name);
    if (it == kinds.end())
        throw ParseError("unknown generator '" + name + "'");
    return it->second;
}

NamedSpace generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
    case GeneratorKind::Power:
        return {"power-" + std::to_string(spec.m), power_set_space(spec.m)};
    case GeneratorKind::Cylinders:
        return {"cylinders-" + std::to_string(spec.n), cylinder_space(spec.n)};
    case GeneratorKind::Subtree:
        return {"subtree:" + spec.edges, subtree_space(parse_tree(spec.edges))};
    case GeneratorKind::Lattice:
        return {"lattice-" + std::to_string(spec.width) + "x" + std::to_string(spec.height),
                lattice_convex_space(spec.width, spec.height)};
    case GeneratorKind::Poset:
        return {"poset:" + spec.elements + (spec.order.empty() ? "" : ":" + spec.order),
                linear_extension_space(parse_poset(spec.elements, spec.order))};
    case GeneratorKind::Random:
        return {"random-" + std::to_string(spec.points) + "-" + std::to_string(spec.seed),
                random_separable_space(spec.points, spec.seed)};
    }
    throw PreconditionError("unknown generator");
}

} // namespace radon_nets
