#pragma once

#include <string>

#include "ghzcert/certifier.h"

namespace ghzcert {

/// JSON rendering of a certification report. `input_digest` (e.g. a SHA-256 of
/// the input document) is embedded verbatim when non-empty.
std::string write_report(const CertReport& report, const std::string& input_digest = {});

}  // namespace ghzcert
