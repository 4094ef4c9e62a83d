#pragma once

#include <iosfwd>

namespace conicqed::cli {

/// Parses the command line and runs the requested command. Exit status:
/// 0 success, 1 selftest failure, 2 usage error, 3 evaluation failure.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace conicqed::cli
