#pragma once

namespace bloch {

/// Entry point behind the bloch executable. Exit codes: 0 success, 1 usage
/// error, 2 numerical failure (context on stderr).
int cli_main(int argc, const char* const* argv);

}  // namespace bloch
