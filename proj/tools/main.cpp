// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0

#include "intsimplex/cli.hpp"

int main(int argc, char** argv) {
    return intsimplex::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
