// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/log.hpp"

#include <cstdlib>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace lsr {

void init_logging() {
    static auto logger = spdlog::stderr_color_mt("lsr");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("LSR_LOG")) {
        spdlog::set_level(spdlog::level::from_str(env));
    }
}

}  // namespace lsr
