#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qheis {

/// Command dispatch behind the qheis binary. Exit code 0 on success or a
/// passing verification, 1 when a verification fails (or elements do not
/// commute), 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qheis
