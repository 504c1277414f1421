#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcms::cli {

/// Runs one invocation; args excludes the program name. Library errors
/// are printed as "error: TOKEN: message" on err with exit status 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcms::cli
