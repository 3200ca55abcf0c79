#pragma once

#include <iosfwd>

namespace tetra::cli {

/// Exit codes: 0 success, 1 law failure or underpowered suite (or a witness
/// that still fails on replay), 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tetra::cli
