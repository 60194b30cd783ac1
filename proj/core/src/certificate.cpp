#include "pthue/certificate.hpp"

namespace pthue {

nlohmann::ordered_json make_envelope(const std::string& equation, long prime, int precision) {
    nlohmann::ordered_json doc;
    doc["schema"] = kJsonSchema;
    doc["equation"] = equation;
    doc["prime"] = prime;
    doc["precision"] = precision;
    doc["checks"] = nlohmann::ordered_json::array();
    doc["solutions"] = nlohmann::ordered_json::array();
    doc["divergences_from_paper"] = nlohmann::ordered_json::array();
    return doc;
}

void add_check(nlohmann::ordered_json& doc, const std::string& name,
               nlohmann::ordered_json inputs, nlohmann::ordered_json value,
               nlohmann::ordered_json expected, const std::string& status) {
    nlohmann::ordered_json check;
    check["name"] = name;
    check["inputs"] = std::move(inputs);
    check["value"] = std::move(value);
    check["expected"] = std::move(expected);
    check["status"] = status;
    doc["checks"].push_back(std::move(check));
}

std::string big_to_string(const BigInt& n) { return n.get_str(); }

std::string rat_to_string(const Rational& q) { return q.get_str(); }

} // namespace pthue
