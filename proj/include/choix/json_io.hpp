#pragma once

// JSON forms of assessments, option sets, generators and choice results.
//
//   assessment:  {"dimension": 2, "pairs": [{"chosen": [[5,-3]], "rejected": [[1,-1]]}]}
//   option set:  {"options": [[-3,4],[0,1]]}
//
// Output is canonical: keys sorted, options in input order, integral values
// written as JSON integers.

#include <json.hpp>
#include <string>

#include "choix/choice.hpp"
#include "choix/core.hpp"
#include "choix/generators.hpp"

namespace choix {

using Json = nlohmann::json;

/// Throws InvalidInput (or DimensionMismatch) with a readable message.
Assessment assessment_from_json(const Json& j);
/// `dimension` of 0 means "infer from the first option".
OptionSet option_set_from_json(const Json& j, std::size_t dimension = 0);
Option option_from_json(const Json& j, std::size_t dimension = 0);
AssessmentPair pair_from_json(const Json& j, std::size_t dimension);

Json to_json(const Option& u);
Json to_json(const OptionSet& set);
Json to_json(const AssessmentPair& pair);
Json to_json(const Assessment& assessment);
Json to_json(const ChoiceResult& result);
Json to_json(const std::vector<OptionSet>& sets);

std::string to_string(const BigNat& n);

/// Parses text, converting nlohmann parse errors into InvalidInput.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace choix
