#pragma once

namespace ncborel {

/// Command-line surface.  Parses argv, dispatches to the engine, and writes
/// the formatted result to stdout (or to the file named by --out).
///
/// Exit codes: 0 on success, 1 on a computation-domain error (degree
/// violations, non-closed primitive input, failed kernel search), 2 on a
/// usage or expression-parse error.
int run(int argc, const char* const* argv);

}  // namespace ncborel
