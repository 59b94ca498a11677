#include "wald/config_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wald {

namespace {

using nlohmann::json;

BigInt coord(const json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("coordinates must be integers or decimal strings");
}

} // namespace

Config parse_config_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON configuration");
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument("configuration must be an object with a \"points\" array");
    const std::string name = j.value("name", std::string("unnamed"));
    std::vector<Pt> pts;
    for (const auto& row : j["points"]) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("each point must be a triple [x, y, z]");
        pts.push_back(canonicalize_point(coord(row[0]), coord(row[1]), coord(row[2])));
    }
    return Config(name, std::move(pts));
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read configuration file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

nlohmann::ordered_json config_to_json(const Config& z) {
    nlohmann::ordered_json j;
    j["name"] = z.label;
    j["points"] = nlohmann::ordered_json::array();
    for (const Pt& p : z.points) {
        // Strings keep arbitrarily large coordinates lossless.
        j["points"].push_back({p.x.get_str(), p.y.get_str(), p.z.get_str()});
    }
    return j;
}

} // namespace wald
