#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypercat {

// Full command dispatch: count | vef | enumerate | series | verify | solve |
// animate. args excludes the program name. Returns the process exit status;
// invalid input produces a one-line diagnostic on err and a nonzero status.
// verify additionally exits nonzero when the residual is not zero.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercat
