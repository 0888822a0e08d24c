// JSON persistence for dichotomy certificates.
//
// The document is self-contained: it echoes the inputs (r, c, eps, n), every
// derived parameter, any overrides, the removal log, the condition payload,
// and the checker verdict recorded at save time.  Loading re-derives the
// parameters from the echoed inputs and refuses documents whose derived
// fields disagree, so a stale or hand-edited file cannot masquerade as a
// fresh one.

#pragma once

#include <string>

#include "turancert/stability.hpp"

namespace turancert {

struct LoadedCertificate {
    Certificate cert;
    Params params;
    bool verified = false;  // the verdict recorded in the document
};

std::string certificate_to_text(const Certificate& cert, const Params& params, bool verified);

// throws std::invalid_argument on schema violations or derived-field mismatch
LoadedCertificate certificate_from_text(const std::string& text);

void save_certificate(const std::string& path, const Certificate& cert, const Params& params,
                      bool verified);
LoadedCertificate load_certificate(const std::string& path);

}  // namespace turancert
