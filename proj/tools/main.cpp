// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"
#include "lsr/log.hpp"

int main(int argc, char** argv) {
    lsr::init_logging();
    return lsr::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
