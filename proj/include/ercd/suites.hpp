#ifndef ERCD_SUITES_HPP
#define ERCD_SUITES_HPP

#include "ercd/lie_verify.hpp"

#include <string>
#include <vector>

namespace ercd {

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Runs one verification suite under fixed conventions. "all" concatenates
/// every suite, prefixing check names with the suite name.
CheckReport run_suite(const std::string& name, const Conventions& c, const Sample& sample);

/// Default sample: m = 3, p = (0,0,4), w = 5.
Sample default_sample();

}  // namespace ercd

#endif
