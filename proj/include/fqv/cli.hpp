#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqv {

/// Entry point of the `verify` tool. args excludes the program name.
/// Returns 0 when every check passes, 1 on any failed check, 2 on a
/// configuration error.
int verify_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqv
