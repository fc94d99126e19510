#include "radon_nets/io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace radon_nets {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace

NamedSpace parse_space(std::string_view text) {
    const json doc = parse_json(text, "space file");
    try {
        if (!doc.is_object())
            throw ParseError("space file: expected a JSON object");
        std::string name = doc.at("name").get<std::string>();
        std::vector<std::string> labels = doc.at("ground").get<std::vector<std::string>>();
        GroundSet ground(std::move(labels));
        std::vector<PointSet> family;
        for (const json& set : doc.at("convex")) {
            std::vector<std::size_t> indices = set.get<std::vector<std::size_t>>();
            for (std::size_t k = 0; k < indices.size(); ++k) {
                if (indices[k] >= ground.size())
                    throw ParseError("space file: index " + std::to_string(indices[k]) + " out of range");
                if (k > 0 && indices[k] <= indices[k - 1])
                    throw ParseError("space file: index lists must be strictly ascending");
            }
            family.push_back(PointSet::from_indices(indices));
        }
        return {std::move(name), validate_space(std::move(ground), std::move(family))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("space file: ") + e.what());
    }
}

std::string serialize_space(const std::string& name, const ConvexitySpace& space) {
    std::ostringstream out;
    out << "{\n  \"name\": " << json(name).dump() << ",\n  \"ground\": " << json(space.ground().labels()).dump()
        << ",\n  \"convex\": [";
    bool first = true;
    for (PointSet c : space.convex()) {
        out << (first ? "\n    " : ",\n    ") << json(c.indices()).dump();
        first = false;
    }
    out << "\n  ]\n}\n";
    return out.str();
}

Distribution parse_distribution(std::string_view text, std::size_t expected_size) {
    const json doc = parse_json(text, "distribution file");
    std::vector<Rational> weights;
    try {
        for (const json& w : doc.at("weights"))
            weights.push_back(parse_rational(w.get<std::string>()));
    } catch (const json::exception& e) {
        throw ParseError(std::string("distribution file: ") + e.what());
    }
    if (weights.size() != expected_size)
        throw ParseError("distribution file: " + std::to_string(weights.size()) + " weights for " +
                         std::to_string(expected_size) + " ground points");
    return Distribution::from_weights(weights);
}

std::string serialize_distribution(const Distribution& mu) {
    json weights = json::array();
    for (const Rational& w : mu.weights())
        weights.push_back(format_rational(w));
    return json{{"weights", weights}}.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PreconditionError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw PreconditionError("cannot write '" + path + "'");
    out << contents;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

} // namespace radon_nets
