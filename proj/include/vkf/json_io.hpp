#pragma once

#include <nlohmann/json.hpp>

#include "vkf/simplicial_complex.hpp"

namespace vkf {

// Wire format:
// {"name": str, "vertices": [{"id": int, "label": str}...],
//  "facets": [[int,...],...], "marked": {str: [[int,...],...]}}
nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

SimplicialComplex load_complex(const std::string& path);
void save_complex(const SimplicialComplex& k, const std::string& path);

} // namespace vkf
