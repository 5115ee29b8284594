#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace peaknet {

/// Entry point of the `peaknet` tool. `args` excludes the program name.
/// Returns the process exit status: 0 on success, 1 on a processing error,
/// 2 on a usage error. Artifacts are written only after every computation
/// succeeded; on a write failure the files already written are removed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peaknet
