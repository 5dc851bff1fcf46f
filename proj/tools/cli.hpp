#pragma once

#include <iosfwd>

namespace extremal::cli {

/// Runs one command line. Data goes to out, diagnostics to err.
/// Returns 0 on success (or a verified sweep), 1 when a sweep found
/// violations, 2 on usage, parameter or input format errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
