#pragma once

#include <iosfwd>

namespace qvdp {

/// Exit codes: 0 success, 1 usage/config error, 2 solver or numeric failure.
int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace qvdp
