#pragma once

#include <string>

#include "scenic/model.hpp"

namespace scenic {

// Versioned JSON model document. Doubles serialize with round-trip
// precision, so save -> load -> predict is bit-identical.
std::string model_to_json(const Model& model);
Model model_from_json(const std::string& text);

void save_model(const std::string& path, const Model& model);
Model load_model(const std::string& path);

}  // namespace scenic
