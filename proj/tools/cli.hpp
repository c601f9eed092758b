// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsr::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kIoError = 3,
    kRenderError = 4,
};

/// Runs the `lsr` command line. `args` excludes the program name. Never
/// throws; every failure maps to an exit code with a diagnostic on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsr::cli
