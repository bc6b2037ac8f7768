#ifndef LIEFORGE_TOOLS_CLI_HPP
#define LIEFORGE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lieforge::cli {

/// Runs one `lieforge` invocation. Returns 0 on success, 1 when a computed
/// value disagrees with its check, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieforge::cli

#endif  // LIEFORGE_TOOLS_CLI_HPP
