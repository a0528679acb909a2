#pragma once

#include <string>

#include "metalift/manifest.hpp"
#include "metalift/suites.hpp"

namespace metalift {

/// Library version baked in at build time.
std::string version();

/// Deterministic JSON text for a run; same inputs give the same bytes.
std::string render_report(const RunResult& run, const Manifest& manifest);

/// Writes text to path. Throws Error when the path cannot be written.
void emit_report(const std::string& text, const std::string& path);

}  // namespace metalift
