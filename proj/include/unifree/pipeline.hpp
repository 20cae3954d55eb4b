#pragma once

#include <string>
#include <vector>

#include "unifree/affine.hpp"
#include "unifree/config.hpp"
#include "unifree/digit_system.hpp"
#include "unifree/json_io.hpp"

namespace unifree {

// One named redundant verification attached to a decision document.
struct CrossCheck {
    std::string name;
    bool pass = false;
};

// Full decision document for a digit system: decision, certificate, and the
// cross-checks that were run. Throws internal_error if any cross-check
// fails, so emitted documents are always self-consistent.
Json unique_decision_document(const DigitSystem& ds, const Config& config = {});

// Same for a function system, including the normalization record.
Json free_decision_document(const FunctionSystem& fs, const Config& config = {});

// Re-verifies a previously emitted document from its serialized form alone:
// re-parses input and certificate and checks the certificate against the
// input. Returns false on any mismatch or malformed document.
bool reverify_document(const Json& doc);

}  // namespace unifree
