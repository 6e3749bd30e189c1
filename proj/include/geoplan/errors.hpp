#pragma once

#include <stdexcept>
#include <string>

namespace geoplan {

// Malformed input text (bimatrix, word, partition files). Carries the line
// number when one is known.
struct parse_error : std::runtime_error {
    int line = 0;
    explicit parse_error(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) +
                                               ": " + what
                                         : what),
          line(line_no) {}
};

// A search refused up front because it would exceed an explicit budget.
// Distinct from a completed NOT-REALIZABLE answer.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace geoplan
