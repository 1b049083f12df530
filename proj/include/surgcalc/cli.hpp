#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surgcalc {

/// Dispatches one subcommand. Exit codes: 0 success, 1 domain failure or
/// obstruction, 2 parse/usage error. `--tsv` switches to tab-separated
/// machine output; the human form cites the formula behind each number.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surgcalc
