#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairvoc::report {

/// The fairvoc command line. `args[0]` is the program name. Returns 0 when no
/// Recommended check fails, 1 when one does, 2 on usage or runtime errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairvoc::report
