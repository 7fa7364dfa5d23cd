#pragma once

// JSON forms of germ data, diagrams, decompositions and polynomial reports.
// Exponents and other rationals are fraction strings ("3/2", "inf"); branch
// indices are 1-based in every JSON document.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kouch/classify.hpp"
#include "kouch/diagram.hpp"
#include "kouch/germ.hpp"
#include "kouch/milnor.hpp"

namespace kouch {

using Json = nlohmann::ordered_json;

// {"branches":[{"pairs":[[2,3]]},{"pairs":[]}],"intersections":[[0,6],[6,0]]}
// A branch may carry "milnor": <int> as an override. Structure errors throw
// InputError; the data itself is not validated here.
GermData germ_from_json(const Json& j);
Json germ_to_json(const GermData& germ);
GermData parse_germ(std::string_view text);
std::string dump_germ(const GermData& germ);  // compact, one line

std::string read_text_file(const std::filesystem::path& path);
GermData load_germ(const std::filesystem::path& path);

// {"x_offset":..,"y_offset":..,"vertices":[[r,s],...]}
Json diagram_to_json(const NewtonDiagram& diagram);
NewtonDiagram diagram_from_json(const Json& j);

// [{"branches":[1],"exponent":"3/2"}, ...]
Json decomposition_to_json(const Decomposition& w);
Decomposition decomposition_from_json(const Json& j);

// {"ngerm":true,"witness":[...]} or {"ngerm":false,"refutation":"..."}
Json ngerm_to_json(const NGermResult& result);

Json ext_nat_to_json(ExtNat n);  // integer or "inf"
Json point_to_json(const LatticePoint& p);

// {"mu","mu_resultant","mu_linear","nu","equal","nondegenerate","reduced",
//  "diagram","faces":[{"from","to","polynomial","nondegenerate"}]}
Json kouchnirenko_to_json(const KouchnirenkoReport& report);

}  // namespace kouch
