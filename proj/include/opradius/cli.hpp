#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opradius {

/// Command-line entry point (argv without the program name). Returns the
/// process exit code: 0 when all requested checks are Satisfied / all
/// fixtures pass, 1 on a Violated or not-satisfied check or fixture failure,
/// 2 on usage or input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace opradius
