#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scv::cli {

/// Exit codes: 0 accept/success, 1 reject/failure, 2 the two mathematical
/// routes disagree (bug sentinel), 64 malformed input or usage, 65 input is
/// valid JSON but unsupported or not a verified point.
constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_route_disagreement = 2;
constexpr int exit_malformed = 64;
constexpr int exit_unsupported = 65;

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace scv::cli
