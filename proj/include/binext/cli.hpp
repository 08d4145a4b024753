#pragma once

#include "binext/binarization.hpp"
#include "binext/extended_formulation.hpp"

#include <json.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace binext {

/// {"kind": "unary|full|log|trunc_log|hypercube|custom", "d": int, "v": int,
///  "sigma": [ints], "body": polytope, "k": int}; fields beyond "kind" as needed.
Binarization binarization_from_json(const nlohmann::json& j);
nlohmann::json binarization_to_json(const Binarization& b);

/// {"P": polytope, "binarized": ["x1", ...], "bins": [descriptors]}.
ExtendedFormulation instance_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const Binarization& b);

/// Command-line entry point. args excludes the program name. Returns 0 on
/// success, 1 on a computation error (JSON on err), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binext
