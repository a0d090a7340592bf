#pragma once

namespace kp2::cli {

// Command dispatch for the kp2 tool: simulate | estimate | decompose |
// verify, each taking --config FILE plus --set key=value overrides.
// Exit codes: 0 success, 1 assertion/check failure, 2 config error,
// 3 solver divergence.
int dispatch(int argc, const char* const* argv);

}  // namespace kp2::cli
