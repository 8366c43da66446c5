#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperxf {

/// Runs one command line (without the program name). Returns 0 when no
/// record failed, 1 when some record failed, 2 on usage or IO errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperxf
