// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace lsr {

/// Sets the spdlog level from the LSR_LOG environment variable
/// (trace, debug, info, warn, error, critical, off). Default: warn.
void init_logging();

}  // namespace lsr
