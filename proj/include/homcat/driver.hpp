#pragma once

#include <string>

#include "homcat/json_io.hpp"

namespace homcat {

// Runtime entry points behind the CLI; each dispatches on the field
// characteristic and returns a deterministic report object.

ojson run_analyze_ring(const std::string& f_text, FieldDesc field, int cap);

// Field and kind come from the input file. `claims_failed` reports whether any
// embedded claims failed.
ojson run_analyze_algebra(const std::string& input_path, int cap, bool& claims_failed);

ojson run_decompose(const std::string& input_path, int cap);

ojson run_paper_suite(FieldDesc field, int cap, bool& all_pass);

ojson run_census(const std::string& f_text, const std::string& input_path, FieldDesc field,
                 int cap);

// Text rendering: a line-oriented projection of the JSON report.
std::string render_text(const ojson& j);

}  // namespace homcat
