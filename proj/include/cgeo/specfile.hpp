#pragma once

#include "cgeo/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgeo {

// On-disk geodesic description: manifold {d, h}, initial_index, blocks,
// optional kvectors (one list per m = 1..n) and optional reversible flag.
struct SpecFile {
    int d = 0, h = 0;
    GeodesicSpec spec;
    std::optional<KAssignment> kassign;
    bool reversible = false;
};

// Errors carry the JSON location, e.g. "blocks[2].turn: ...".
SpecFile spec_from_json(const std::string& text);
std::string spec_to_json(const SpecFile& sf);

// Either a single spec object with kvectors or {"manifold", "reversible",
// "models": [...]} where each model may omit the shared manifold.
struct ModelsFile {
    int d = 0, h = 0;
    bool reversible = false;
    std::vector<GeodesicModel> models;
};
ModelsFile models_from_json(const std::string& text);

// A JSON array of ExactScalar strings, or {"samples": [...]}.
std::vector<ExactScalar> samples_from_json(const std::string& text);

std::string block_to_json(const Block& b);

}  // namespace cgeo
