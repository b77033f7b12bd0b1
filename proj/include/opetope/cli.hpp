#pragma once

#include <ostream>

namespace opetope {

// exit codes: 0 pass, 1 validation failure or bad request, 2 schema or command-line error, 3 internal error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opetope
