#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ghzcert/state_model.h"

namespace ghzcert {

/// Malformed or invalid state-set document. `where()` names the offending
/// location: a byte offset for syntax errors, a path such as
/// "tuples[3].kets[1]" for content errors.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& message)
        : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Document layout (JSON):
///   {"dims": [d1, d2, d3],
///    "tuples": [{"weight": w, "kets": [[i, j, k], ...], "label": "optional"}, ...]}
StateSet parse_state_set(std::string_view text);

/// One tuple per line; byte-identical output for equal sets.
std::string write_state_set(const StateSet& set);

}  // namespace ghzcert
