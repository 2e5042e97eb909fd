// SPDX-License-Identifier: Apache-2.0

#include "ocfec/cli.hpp"

int main(int argc, char** argv) { return ocfec::cli::run(argc, argv); }
