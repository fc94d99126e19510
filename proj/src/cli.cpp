#include "radon_nets/cli.hpp"

#include "radon_nets/io.hpp"
#include "radon_nets/lowerbound.hpp"
#include "radon_nets/netbuild.hpp"
#include "radon_nets/oracle.hpp"
#include "radon_nets/params.hpp"
#include "radon_nets/spaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace radon_nets::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    bool human = false;
    // gen
    std::string gen_kind;
    GeneratorSpec gen;
    std::string output;
    // analyze / net / lowerbound / dist
    std::string space_path;
    std::string dist_path;
    std::string batch_dir;
    std::string eps;
    bool verify = false;
    bool oracle = false;
    std::string method = "auto";
    std::string support;
    // kneser
    std::size_t n = 0;
    std::size_t k = 0;
    bool exact = false;
    bool alon = false;
};

std::size_t vertex_cap() {
    const char* raw = std::getenv("RADON_NETS_CAP");
    if (raw == nullptr || *raw == '\0')
        return kDefaultVertexCap;
    try {
        std::size_t used = 0;
        const unsigned long long value = std::stoull(raw, &used);
        if (used != std::string(raw).size() || value == 0)
            throw std::invalid_argument(raw);
        return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        throw PreconditionError(std::string("RADON_NETS_CAP must be a positive integer, got '") + raw + "'");
    }
}

Json labels_of(const ConvexitySpace& space, PointSet s) {
    Json out = Json::array();
    s.for_each([&](std::size_t i) { out.push_back(space.ground().label(i)); });
    return out;
}

Json input_entry(const std::string& path, const std::string& bytes) {
    return Json{{"path", path}, {"sha256", sha256_hex(bytes)}};
}

struct LoadedSpace {
    NamedSpace named;
    Json input;
};

LoadedSpace load_space(const std::string& path) {
    const std::string bytes = read_file(path);
    return {parse_space(bytes), input_entry(path, bytes)};
}

Distribution load_distribution(const std::string& path, const ConvexitySpace& space, Json& inputs) {
    if (path.empty())
        return Distribution::uniform(space.size());
    const std::string bytes = read_file(path);
    inputs["distribution"] = input_entry(path, bytes);
    return parse_distribution(bytes, space.size());
}

void emit(std::ostream& out, const Json& report, bool human) {
    if (!human) {
        out << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        out << key << std::string(key.size() < 22 ? 22 - key.size() : 1, ' ')
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

Json analyze_report(const LoadedSpace& loaded) {
    const ConvexitySpace& space = loaded.named.space;
    const ParamsReport report = analyze(space);
    Json out;
    out["name"] = loaded.named.name;
    out["inputs"] = Json{{"space", loaded.input}};
    out["points"] = space.size();
    out["convex_sets"] = space.convex().size();
    out["halfspaces"] = halfspaces(space, false).size();
    out["radon"] = report.radon;
    out["helly"] = report.helly;
    out["helly_vacuous"] = report.helly_vacuous;
    out["vc"] = report.vc;
    out["separable"] = report.separable;
    out["bounds_checked"] = report.separable;
    out["radon_witness"] = labels_of(space, report.radon_witness);
    Json helly = Json::array();
    for (PointSet b : report.helly_witness)
        helly.push_back(labels_of(space, b));
    out["helly_witness"] = helly;
    out["vc_witness"] = labels_of(space, report.vc_witness);
    if (report.separable) {
        out["separation_witness"] = nullptr;
    } else {
        out["separation_witness"] = Json{{"convex_set", labels_of(space, *report.separation_witness_set)},
                                         {"point", space.ground().label(*report.separation_witness_point)}};
    }
    return out;
}

int cmd_gen(const Options& o, std::ostream& out) {
    GeneratorSpec spec = o.gen;
    spec.kind = parse_generator_kind(o.gen_kind);
    const NamedSpace named = generate(spec);
    const std::string text = serialize_space(named.name, named.space);
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);
    return kExitOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
    const LoadedSpace loaded = load_space(o.space_path);
    const std::size_t points = loaded.named.space.size();
    PointSet support = PointSet::full(points);
    if (!o.support.empty()) {
        support = PointSet{};
        std::istringstream in(o.support);
        std::string label;
        while (std::getline(in, label, ',')) {
            const auto index = loaded.named.space.ground().find(label);
            if (!index)
                throw ParseError("unknown point label '" + label + "'");
            support = support.with(*index);
        }
    }
    const std::string text = serialize_distribution(Distribution::uniform_on(points, support));
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);
    return kExitOk;
}

struct Outcome {
    Json report;
    int code = kExitOk;
};

Outcome cmd_analyze(const Options& o) {
    if (!o.batch_dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(o.batch_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        Json batch = Json::array();
        for (const auto& file : files)
            batch.push_back(analyze_report(load_space(file.string())));
        return {Json{{"command", "analyze"}, {"batch", batch}}};
    }
    if (o.space_path.empty())
        throw PreconditionError("analyze needs a space file or --batch");
    Json report{{"command", "analyze"}};
    report.update(analyze_report(load_space(o.space_path)));
    return {report};
}

Outcome cmd_net(const Options& o) {
    const LoadedSpace loaded = load_space(o.space_path);
    const ConvexitySpace& space = loaded.named.space;
    Json inputs{{"space", loaded.input}};
    const Distribution mu = load_distribution(o.dist_path, space, inputs);
    const Rational eps = parse_rational(o.eps);

    const WeakNet net = build_weak_net(space, mu, eps);
    Json report{{"command", "net"}, {"inputs", inputs}, {"eps", format_rational(eps)}};
    report["params"] = Json{{"helly", net.params.helly},
                            {"vc", net.params.vc},
                            {"delta", format_rational(net.params.delta)},
                            {"eps_next", format_rational(net.params.eps_next)},
                            {"depth", net.params.depth}};
    report["net"] = labels_of(space, net.points);
    report["size"] = net.points.size();
    report["size_bound_log10"] = net.log10_size_bound;
    report["trace"] = Json{{"root_point", space.ground().label(net.trace->helly_point)},
                           {"root_packing", net.trace->packing.size()},
                           {"distinct_nodes", net.distinct_nodes},
                           {"tree_nodes", net.tree_nodes}};
    report["warnings"] = net.warnings;

    int code = kExitOk;
    if (o.verify) {
        const NetVerification check = verify_weak_net(space, mu, eps, net.points);
        report["verified"] = check.ok;
        if (!check.ok)
            code = kExitInconsistent;
    }
    if (o.oracle) {
        const HittingSetSolution best = minimal_weak_net(space, mu, eps);
        report["oracle"] = Json{{"size", best.size},
                                {"witness", labels_of(space, best.witness)},
                                {"ratio", best.size == 0 ? 0.0
                                                         : static_cast<double>(net.points.size()) /
                                                               static_cast<double>(best.size)}};
        if (best.size > net.points.size())
            code = kExitInconsistent;
    }
    return {report, code};
}

Json certificate_json(const ConvexitySpace& space, const LowerBoundCertificate& cert) {
    Json out;
    out["method"] = to_string(cert.method);
    out["bound"] = cert.bound;
    Json weights = Json::array();
    for (const Rational& w : cert.mu.weights())
        weights.push_back(format_rational(w));
    out["weights"] = weights;
    out["support"] = labels_of(space, cert.support);
    if (cert.graph) {
        out["graph_vertices"] = cert.graph->vertices.size();
        out["graph_edges"] = cert.graph->graph.edge_count();
        out["colored_vertices"] = cert.colored_vertices.size();
    } else {
        out["shattered_size"] = cert.shattered_size;
        out["kneser_k"] = cert.kneser_k;
        out["kneser_value"] = cert.kneser_value;
        out["linear_value"] = cert.linear_value;
    }
    return out;
}

Outcome cmd_lowerbound(const Options& o) {
    const LoadedSpace loaded = load_space(o.space_path);
    const ConvexitySpace& space = loaded.named.space;
    Json inputs{{"space", loaded.input}};
    const Rational eps = parse_rational(o.eps);
    const std::size_t cap = vertex_cap();

    std::optional<LowerBoundCertificate> cert;
    if (o.method == "radon") {
        cert = radon_lower_bound(space, eps);
    } else if (o.method == "chromatic" || o.method == "auto") {
        const Distribution mu = load_distribution(o.dist_path, space, inputs);
        try {
            cert = chromatic_lower_bound(space, mu, eps, cap);
        } catch (const TooLargeForExactError&) {
            if (o.method == "chromatic")
                throw;
            cert = radon_lower_bound(space, eps);
        }
    } else {
        throw ParseError("unknown method '" + o.method + "'");
    }
    Json report{{"command", "lowerbound"}, {"inputs", inputs}, {"eps", format_rational(eps)}};
    report.update(certificate_json(space, *cert));
    return {report};
}

Outcome cmd_kneser(const Options& o) {
    const std::size_t cap = vertex_cap();
    int code = kExitOk;
    Json report{{"command", "kneser"}, {"n", o.n}, {"k", o.k}};
    const KneserGraph kg = kneser_graph(o.n, o.k, cap);
    const std::size_t formula = kneser_chromatic_formula(o.n, o.k);
    report["vertices"] = kg.graph.vertex_count();
    report["edges"] = kg.graph.edge_count();
    report["formula"] = formula;
    if (o.exact) {
        const std::size_t chi = exact_chromatic_number(kg.graph, cap).chromatic;
        report["exact"] = chi;
        report["agrees"] = chi == formula;
        if (chi != formula)
            code = kExitInconsistent;
    }
    if (o.alon) {
        const AlonCheck check = alon_bound_check(o.n, cap);
        report["alon"] = Json{{"n", check.n},
                              {"k", check.n / 4},
                              {"chromatic", check.chromatic},
                              {"threshold", format_rational(Rational(static_cast<long long>(check.n), 10))},
                              {"holds", check.holds}};
        if (!check.holds)
            code = kExitInconsistent;
    }
    return {report, code};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite convexity spaces: invariants, weak epsilon-nets and lower bounds", "radon-nets"};
    app.require_subcommand(1);
    Options o;
    const auto started = std::chrono::steady_clock::now();

    auto* gen = app.add_subcommand("gen", "Generate an example space file");
    gen->add_option("kind", o.gen_kind, "power | cylinders | subtree | lattice | poset | random")->required();
    gen->add_option("--m", o.gen.m, "power: number of points");
    gen->add_option("--n", o.gen.n, "cylinders: cube dimension");
    gen->add_option("--edges", o.gen.edges, "subtree: edge list a-b,b-c");
    gen->add_option("--width", o.gen.width, "lattice: grid width");
    gen->add_option("--height", o.gen.height, "lattice: grid height");
    gen->add_option("--elements", o.gen.elements, "poset: element characters, e.g. abc");
    gen->add_option("--order", o.gen.order, "poset: relations a<b,b<c");
    gen->add_option("--points", o.gen.points, "random: number of points");
    gen->add_option("--seed", o.gen.seed, "random: seed");
    gen->add_option("-o,--output", o.output, "output path (stdout if omitted)");

    auto* dist = app.add_subcommand("dist", "Write a uniform distribution file for a space");
    dist->add_option("space", o.space_path, "space file")->required();
    dist->add_option("--support", o.support, "comma-separated labels to put mass on (default: all)");
    dist->add_option("-o,--output", o.output, "output path (stdout if omitted)");

    auto* analyze_cmd = app.add_subcommand("analyze", "Radon number, Helly number, VC dimension");
    analyze_cmd->add_option("space", o.space_path, "space file");
    analyze_cmd->add_option("--batch", o.batch_dir, "analyze every .json space file in a directory");

    auto* net = app.add_subcommand("net", "Build a weak epsilon-net");
    net->add_option("space", o.space_path, "space file")->required();
    net->add_option("--dist", o.dist_path, "distribution file (uniform if omitted)");
    net->add_option("--eps", o.eps, "epsilon as an exact fraction p/q")->required();
    net->add_flag("--verify", o.verify, "check the net pierces every heavy convex set");
    net->add_flag("--oracle", o.oracle, "also compute the exact minimum weak net");

    auto* lower = app.add_subcommand("lowerbound", "Lower-bound certificate for weak-net size");
    lower->add_option("space", o.space_path, "space file")->required();
    lower->add_option("--dist", o.dist_path, "distribution file (uniform if omitted)");
    lower->add_option("--eps", o.eps, "epsilon as an exact fraction p/q")->required();
    lower->add_option("--method", o.method, "auto | chromatic | radon")
        ->check(CLI::IsMember({"auto", "chromatic", "radon"}));

    auto* kneser = app.add_subcommand("kneser", "Kneser graph chromatic number");
    kneser->add_option("--n", o.n, "ground size")->required();
    kneser->add_option("--k", o.k, "subset size");
    kneser->add_flag("--exact", o.exact, "compute the exact chromatic number");
    kneser->add_flag("--alon", o.alon, "check chi(KG(n, n/4)) > n/10");

    for (auto* sub : {analyze_cmd, net, lower, kneser})
        sub->add_flag("--human", o.human, "aligned key/value output instead of JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        if (kneser->parsed() && o.alon && o.k == 0)
            o.k = o.n / 4;
        if (gen->parsed())
            return cmd_gen(o, out);
        if (dist->parsed())
            return cmd_dist(o, out);
        Outcome outcome;
        if (analyze_cmd->parsed())
            outcome = cmd_analyze(o);
        else if (net->parsed())
            outcome = cmd_net(o);
        else if (lower->parsed())
            outcome = cmd_lowerbound(o);
        else if (kneser->parsed())
            outcome = cmd_kneser(o);
        outcome.report["argv"] = args;
        outcome.report["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        emit(out, outcome.report, o.human);
        return outcome.code;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

} // namespace radon_nets::cli
