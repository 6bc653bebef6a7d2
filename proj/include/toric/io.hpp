#pragma once

#include "toric/variety.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace toric {

using Json = nlohmann::json;

// Integers ride as JSON numbers while they fit the 53-bit window every JSON
// consumer can hold exactly, and as decimal strings beyond it.
Json int_to_json(const Int& x);
Int json_to_int(const Json& j, const std::string& what);
Json vec_to_json(const Vec& v);
Vec json_to_vec(const Json& j, int dim, const std::string& what);
Json mat_to_json(const Mat& m);
Mat json_to_mat(const Json& j, int dim, const std::string& what);
Json rat_to_json(const Rat& q);

struct ParsedVariety {
    ToricTriple triple;
    std::vector<std::string> warnings;
};

// Document schema: {"rank": int, "cones": [{"id": string, "rays": [[int]]}],
// "semigroups": {id: [[int]]}}. Only maximal cones appear. Non-primitive rays
// are normalized with a warning; every listed cone needs a semigroup entry.
ParsedVariety variety_from_json(const Json& doc);
ParsedVariety parse_variety(const std::string& text);
Json variety_to_json(const ToricTriple& v);
std::string serialize_variety(const ToricTriple& v);

struct CliResult {
    int exit_code = 0;
    std::string output;
};

// Full command dispatch; `args` excludes the program name. Reports are JSON
// objects {"status", "command", "result"}; exit code 0 on success, 1 on a
// failed mathematical validation, 2 on malformed input or usage errors.
CliResult run_command(const std::vector<std::string>& args);

} // namespace toric
