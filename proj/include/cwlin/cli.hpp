#pragma once

namespace cwlin {

// Exit codes: 0 pass/ok, 1 definite fail, 2 inconclusive, 64 bad input,
// 75 resource cap exceeded, 70 internal error.
int cli_main(int argc, const char* const* argv);

} // namespace cwlin
