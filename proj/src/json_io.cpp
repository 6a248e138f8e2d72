#include "gnorm/json_io.hpp"

#include <stdexcept>

namespace gnorm {

using nlohmann::json;

json to_json(const VertexSet& s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

VertexSet vertex_set_from_json(int n, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vertex set JSON must be an array");
    VertexSet s(n);
    for (const auto& item : j) {
        if (!item.is_number_integer()) throw std::invalid_argument("vertex must be an integer");
        const auto v = item.get<std::int64_t>();
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        s.set(static_cast<int>(v));
    }
    return s;
}

json to_json(const NormalCertificate& cert) {
    json j;
    j["cliques"] = json::array();
    for (const auto& c : cert.cliques) j["cliques"].push_back(to_json(c));
    j["independents"] = json::array();
    for (const auto& s : cert.independents) j["independents"].push_back(to_json(s));
    return j;
}

NormalCertificate certificate_from_json(int n, const json& j) {
    if (!j.is_object() || !j.contains("cliques") || !j.contains("independents"))
        throw std::invalid_argument("certificate JSON needs cliques and independents");
    NormalCertificate cert;
    for (const auto& arr : j.at("cliques")) cert.cliques.push_back(vertex_set_from_json(n, arr));
    for (const auto& arr : j.at("independents"))
        cert.independents.push_back(vertex_set_from_json(n, arr));
    return cert;
}

json to_json(const StarCovering& cover) {
    json j = to_json(cover.certificate);
    j["centers"] = to_json(cover.centers);
    j["stars"] = json::array();
    for (const auto& star : cover.stars)
        j["stars"].push_back(json{{"center", star.center}, {"leaves", to_json(star.leaves)}});
    return j;
}

json to_json(const BlockLayout& layout) {
    json j;
    j["J"] = to_json(layout.excluded);
    j["blocks"] = json::array();
    for (const auto& block : layout.blocks) j["blocks"].push_back(to_json(block));
    return j;
}

BlockLayout block_layout_from_json(int n, const json& j) {
    if (!j.is_object() || !j.contains("J") || !j.contains("blocks"))
        throw std::invalid_argument("layout JSON needs J and blocks");
    BlockLayout layout{vertex_set_from_json(n, j.at("J")), {}};
    for (const auto& arr : j.at("blocks")) layout.blocks.push_back(vertex_set_from_json(n, arr));
    return layout;
}

json to_json(const JqResult& r) {
    return json{{"satisfied", r.satisfied},
                {"start", r.start},
                {"outsection", to_json(r.outsection)},
                {"private_total", r.private_total}};
}

}  // namespace gnorm
