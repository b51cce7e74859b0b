#ifndef XITAIL_CLI_HPP
#define XITAIL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace xitail::cli {

/// Run the command line given argv-style arguments (program name not
/// included).  Results go to `out` as CSV (default) or JSON; diagnostics
/// go to `err`.  Returns the process exit status: 0 on success, 2 on
/// domain/flag errors, 3 on scan exhaustion.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace xitail::cli

#endif  // XITAIL_CLI_HPP
