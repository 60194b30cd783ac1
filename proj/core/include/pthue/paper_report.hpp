#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace pthue {

// One verified claim from the source article.  status is one of
//   "paper-consistent"  computed value matches the published one
//   "corrected"         published value is wrong; the computed value is used
//   "note"              commentary row (omissions the pipeline fills in)
//   "fail"              a structural check of the pipeline itself broke
// Corrections and notes do not fail the run; "fail" does.
struct PaperRow {
    std::string name;
    std::string claim;     // the published statement
    std::string computed;  // what this pipeline finds
    std::string status;
    std::string note;
};

// Recomputes every published claim end to end.
std::vector<PaperRow> verify_paper_rows();

// Rows wrapped in the standard certificate envelope.
nlohmann::ordered_json verify_paper_json();

// 0 iff no row has status "fail".
int verify_paper_exit(const std::vector<PaperRow>& rows);

} // namespace pthue
