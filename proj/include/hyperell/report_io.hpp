#pragma once

#include <string>
#include <vector>

#include "hyperell/verify.hpp"

namespace hyperell::report {

// Canonical JSON: keys sorted, floats in shortest round-trip form, so
// parse(to_json(r)).dump(...) reproduces the exact bytes.
std::string to_json(const std::vector<verify::SuiteReport>& reports);

// One row per check: suite,name,params,lhs,rhs,residual,passed with params
// flattened to k=v;k=v and RFC-style quoting where needed.
std::string to_csv(const std::vector<verify::SuiteReport>& reports);

std::string to_human(const std::vector<verify::SuiteReport>& reports);

} // namespace hyperell::report
