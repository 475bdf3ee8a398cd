#include "vkf/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "vkf/errors.hpp"

namespace vkf {

using nlohmann::json;

json complex_to_json(const SimplicialComplex& k) {
    json j;
    j["name"] = k.name();
    j["vertices"] = json::array();
    for (const Vertex& v : k.vertices())
        j["vertices"].push_back({{"id", v.id}, {"label", v.label}});
    j["facets"] = json::array();
    std::vector<Face> facets = k.facets();
    std::sort(facets.begin(), facets.end());
    for (const Face& f : facets) j["facets"].push_back(f);
    j["marked"] = json::object();
    for (const auto& [name, simplices] : k.marks()) {
        json ms = json::array();
        for (const Face& f : simplices) ms.push_back(f);
        j["marked"][name] = std::move(ms);
    }
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    try {
        std::vector<Vertex> verts;
        for (const auto& v : j.at("vertices"))
            verts.push_back({v.at("id").get<VertexId>(), v.at("label").get<std::string>()});
        std::vector<Face> facets;
        for (const auto& f : j.at("facets")) facets.push_back(f.get<Face>());
        SimplicialComplex k = SimplicialComplex::from_vertices_and_facets(std::move(verts), facets);
        if (j.contains("name")) k.set_name(j.at("name").get<std::string>());
        if (j.contains("marked")) {
            for (const auto& [name, simplices] : j.at("marked").items()) {
                std::vector<Face> ms;
                for (const auto& f : simplices) ms.push_back(f.get<Face>());
                k.set_mark(name, std::move(ms));
            }
        }
        return k;
    } catch (const json::exception& e) {
        throw ParseError(std::string("complex json: ") + e.what());
    }
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    return complex_from_json(j);
}

void save_complex(const SimplicialComplex& k, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << complex_to_json(k).dump(2) << '\n';
}

} // namespace vkf
