// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_CLI_HPP
#define OCFEC_CLI_HPP

namespace ocfec::cli {

/// Full command-line surface. Exit codes: 0 success, 1 decode finished with
/// retransmit markers (or transmit saw uncorrectable symbols), 2 usage or
/// config errors.
int run(int argc, const char* const* argv);

} // namespace ocfec::cli

#endif
