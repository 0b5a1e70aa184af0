// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdl {

// 0: valid, proved, or nothing found. 1: a violation or countermodel was
// found. 2: the input could not be parsed or validated. 3: the search ended
// without an answer. 4: an internal consistency check failed.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInput = 2, kExitUnknown = 3, kExitInternal = 4 };

// Runs the tdl command line with args (without the program name). Reports go
// to out, or to the file named by --out; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdl
