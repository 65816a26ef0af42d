#pragma once

#include <string>

#include "bracoid/manifest.hpp"
#include "bracoid/report.hpp"

namespace bracoid {

enum class Suite { basic, full };

/// Runs the axiom checks for the manifest's kind. The full suite adds every
/// identity that follows from the axioms, guarded by the hypotheses it needs.
Report check_manifest(const Manifest& m, Suite suite);

/// Human-readable report, one line per equation.
std::string render_text(const Report& r);
/// One JSON object on one line with sorted keys.
std::string render_machine(const Report& r);

}  // namespace bracoid
