#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "wfg/abelian_group.hpp"
#include "wfg/analysis.hpp"
#include "wfg/complex.hpp"
#include "wfg/invariants.hpp"
#include "wfg/presentation.hpp"
#include "wfg/vankampen.hpp"

namespace wfg::io {

using nlohmann::json;

// Parses JSON text; syntax errors raise ParseError with line and column.
json parse_json(std::string_view text, const std::string& source = "<input>");
json read_json_file(const std::filesystem::path& path);

/// {"vertices": [str...], "edges": [{"a","b","w"}...],
///  "triangles": [[a,v,b]...], "tree": [[a,b]...]?}
/// Structural problems (types, ranges, a<b, a<v<b, simplices of dimension
/// >= 3) raise SchemaError naming the offending field. Deeper invariants are
/// left to validate().
WeightedComplex complex_from_json(const json& j, const std::string& where = "complex");
json to_json(const WeightedComplex& k);

// {"L": ..., "K1": ..., "K2": ..., "K0": ...}
CoverSpec cover_from_json(const json& j);
json to_json(const CoverSpec& spec);

// {"stages": [...], "regions": {"2": "left"}}
Filtration filtration_from_json(const json& j);
json to_json(const Filtration& f);

// {"generators": [...], "relators": [[[gen, exp]...]...]}
Presentation presentation_from_json(const json& j);
json to_json(const Presentation& p);

json to_json(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const json& j);
json to_json(const CyclicFactorization& f);
CyclicFactorization factorization_from_json(const json& j);
json to_json(const SpanningTree& t);
json to_json(const ValidationReport& r);
json to_json(const LcsRanks& r);
json to_json(const WeightedHomology& h);
json to_json(const BirthDeathEvent& e);
json to_json(const FiltrationReport& r);
json to_json(const TreeDiscriminationReport& r);
json to_json(const VanKampenReport& r);

using Input = std::variant<WeightedComplex, CoverSpec, Filtration>;

/// Reads a file and dispatches on its top-level keys: "stages" means a
/// filtration, "L"/"K0"/"K1"/"K2" a cover, otherwise a complex.
Input parse_input(const std::filesystem::path& path);

}  // namespace wfg::io
