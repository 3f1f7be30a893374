#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksym {

/// Batch frontend: verify | construct | classify | obstruct | extract.
/// `args` excludes the program name. Returns the process exit code:
/// 0 success or positive verdict, 1 negative verdict, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ksym
