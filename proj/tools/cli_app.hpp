#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hypercat/recurrence.hpp"

namespace hypercat::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "+[2,1,1] -[3,0,1] -[3,1] +2[4]": terms with more distinct shapes first,
/// then higher top gon, then lex order.
std::string formatCombination(const SignedCombination& combo);

}  // namespace hypercat::cli
