#pragma once

namespace cayley::cli {

/// Entry point of cayley-verify. Returns 0 when every requested check passes,
/// 1 on a failed check or runtime error, 2 on a usage error.
int run(int argc, char** argv);

}  // namespace cayley::cli
