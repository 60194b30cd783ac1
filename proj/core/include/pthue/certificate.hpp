#pragma once

#include "pthue/integer_kernel.hpp"

#include <json.hpp>

#include <string>

namespace pthue {

inline constexpr const char* kJsonSchema = "padic-thue/1";

// Fresh certificate envelope: {schema, equation, prime, precision, checks,
// solutions, divergences_from_paper}.  Key order is fixed and no timestamps
// are recorded, so identical runs serialize byte-identically.
nlohmann::ordered_json make_envelope(const std::string& equation, long prime, int precision);

// Appends {name, inputs, value, expected, status} to doc["checks"].
void add_check(nlohmann::ordered_json& doc, const std::string& name,
               nlohmann::ordered_json inputs, nlohmann::ordered_json value,
               nlohmann::ordered_json expected, const std::string& status);

// Big integers serialize as decimal strings: arbitrary precision survives
// any JSON reader.
std::string big_to_string(const BigInt& n);
std::string rat_to_string(const Rational& q);

} // namespace pthue
