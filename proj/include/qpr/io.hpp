#pragma once

#include <stdexcept>
#include <string>

#include "qpr/lifting.hpp"

namespace qpr {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// literal grammar: rational ( "*z^" int )? joined by '+'/'-', z = zeta_level;
// the canonical printer is CycNum::to_string
CycNum parse_cyclotomic_literal(const std::string& text, long long level);

// JSON input document -> datum (throws InputError; run validate_datum after)
LiftingDatum parse_input_document(const std::string& json_text);
LiftingDatum load_input_file(const std::string& path);

std::string input_document_to_json(const LiftingDatum& d);

}  // namespace qpr
