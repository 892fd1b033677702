#pragma once

namespace dlk {

// Exit codes: 0 success/valid, 1 invalid/nonexistent, 2 usage error,
// 3 unknown (search budget exhausted).
int run_cli(int argc, char** argv);

} // namespace dlk
